#include "omnilie/cli_io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "omnilie/rng.hpp"

namespace omnilie {

using Json = nlohmann::ordered_json;

namespace {

// --- error helpers ----------------------------------------------------------

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Parse, "at " + path + ": " + msg);
}

[[noreturn]] void semantic_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Semantic, "at " + path + ": " + msg);
}

/// Runs a constructor whose own diagnostics lack a document position and
/// prefixes the field path onto anything it throws.
template <class F>
auto with_path(const std::string& path, F f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "at " + path + ": " + e.what());
  }
}

// --- JSON field access -------------------------------------------------------

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path + "." + key, "missing field");
  return *it;
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) parse_fail(path, "integer out of range");
  return static_cast<int>(v);
}

std::string get_str(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& get_arr(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  return j;
}

const Json& get_arr_n(const Json& j, const std::string& path, int n) {
  get_arr(j, path);
  if (static_cast<int>(j.size()) != n)
    parse_fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// --- rational codec ----------------------------------------------------------

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rat parse_rat(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a rational string \"p/q\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num = num.substr(1);
  if (!all_digits(num) || !all_digits(den))
    parse_fail(path, "malformed rational \"" + s + "\"; expected \"p/q\"");
  mpz_class d(den, 10);
  if (sgn(d) == 0) parse_fail(path, "rational with zero denominator");
  mpz_class n(num, 10);
  if (neg) n = -n;
  Rat r(mpq_class(n) / mpq_class(d));
  if (r.num() != n || r.den() != d)
    semantic_fail(path, "rational \"" + s + "\" is not in lowest terms");
  return r;
}

Json rat_json(const Rat& r) { return r.str(); }

// --- polynomial codec ---------------------------------------------------------

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json{{"c", rat_json(c)}, {"e", e}});
  return a;
}

Poly parse_poly(const Json& j, const std::string& path, int nvars) {
  get_arr(j, path);
  Poly p(nvars);
  std::set<Poly::Expo> seen;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = idx(path, t);
    const Rat c = parse_rat(member(j[t], tp, "c"), tp + ".c");
    const Json& ej = get_arr_n(member(j[t], tp, "e"), tp + ".e", nvars);
    Poly::Expo e(nvars);
    for (int i = 0; i < nvars; ++i) {
      e[i] = get_int(ej[i], idx(tp + ".e", i));
      if (e[i] < 0) semantic_fail(idx(tp + ".e", i), "negative exponent");
    }
    if (c.is_zero()) semantic_fail(tp + ".c", "term with zero coefficient");
    if (!seen.insert(e).second) semantic_fail(tp, "duplicate exponent vector");
    p.add_term(e, c);
  }
  return p;
}

// --- vector / matrix codecs ----------------------------------------------------

Json vecq_json(const VecQ& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

VecQ parse_vecq(const Json& j, const std::string& path, int n) {
  get_arr_n(j, path, n);
  VecQ v(n);
  for (int i = 0; i < n; ++i) v[i] = parse_rat(j[i], idx(path, i));
  return v;
}

Json matq_json(const MatQ& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(vecq_json(m.row(i)));
  return a;
}

MatQ parse_matq(const Json& j, const std::string& path, int rows, int cols) {
  get_arr_n(j, path, rows);
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) m.set_row(i, parse_vecq(j[i], idx(path, i), cols));
  return m;
}

Json vecp_json(const VecP& v) {
  Json a = Json::array();
  for (const Poly& p : v) a.push_back(poly_json(p));
  return a;
}

VecP parse_vecp(const Json& j, const std::string& path, int n, int nvars) {
  get_arr_n(j, path, n);
  VecP v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(parse_poly(j[i], idx(path, i), nvars));
  return v;
}

Json matp_json(const MatP& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(vecp_json(m.row(i)));
  return a;
}

MatP parse_matp(const Json& j, const std::string& path, int rows, int cols, int nvars) {
  get_arr_n(j, path, rows);
  MatP m(rows, cols, Poly(nvars));
  for (int i = 0; i < rows; ++i) m.set_row(i, parse_vecp(j[i], idx(path, i), cols, nvars));
  return m;
}

// --- structure-constant codec ---------------------------------------------------

template <class T, class Emit>
Json lie_json(const LieStructT<T>& s, Emit emit) {
  Json a = Json::array();
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      for (int k = 0; k < s.dim(); ++k)
        if (!s.c(i, j, k).is_zero())
          a.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"c", emit(s.c(i, j, k))}});
  return a;
}

template <class T, class ParseVal>
LieStructT<T> parse_lie(const Json& j, const std::string& path, int n, const T& zero,
                        ParseVal pv) {
  get_arr(j, path);
  LieStructT<T> s(n, zero);
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = idx(path, t);
    const int i = get_int(member(j[t], tp, "i"), tp + ".i");
    const int jj = get_int(member(j[t], tp, "j"), tp + ".j");
    const int k = get_int(member(j[t], tp, "k"), tp + ".k");
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
      parse_fail(tp, "structure index out of range for dimension " + std::to_string(n));
    const T v = pv(member(j[t], tp, "c"), tp + ".c");
    if (!seen.insert({std::min(i, jj), std::max(i, jj), k}).second)
      semantic_fail(tp, "duplicate structure entry");
    with_path(tp, [&] { s.set(i, jj, k, v); return 0; });
  }
  return s;
}

LieStruct parse_lie_q(const Json& j, const std::string& path, int n) {
  return parse_lie<Rat>(j, path, n, Rat(0),
                        [](const Json& v, const std::string& p) { return parse_rat(v, p); });
}

LieStructP parse_lie_p(const Json& j, const std::string& path, int n, int nvars) {
  return parse_lie<Poly>(
      j, path, n, Poly(nvars),
      [nvars](const Json& v, const std::string& p) { return parse_poly(v, p, nvars); });
}

// --- skew tables of fibre vectors -------------------------------------------------

Json skew_table_json(const std::vector<std::vector<VecP>>& t, const char* k1, const char* k2) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!vec_is_zero(t[i][j]))
        a.push_back(Json{{k1, static_cast<int>(i)},
                         {k2, static_cast<int>(j)},
                         {"value", vecp_json(t[i][j])}});
  return a;
}

std::vector<std::vector<VecP>> parse_skew_table(const Json& j, const std::string& path, int n,
                                                int len, int nvars, const char* k1,
                                                const char* k2) {
  get_arr(j, path);
  std::vector<std::vector<VecP>> t(n, std::vector<VecP>(n, VecP(len, Poly(nvars))));
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = idx(path, e);
    const int a = get_int(member(j[e], ep, k1), ep + "." + k1);
    const int b = get_int(member(j[e], ep, k2), ep + "." + k2);
    if (a < 0 || b <= a || b >= n)
      parse_fail(ep, std::string("expected 0 <= ") + k1 + " < " + k2 + " < " + std::to_string(n));
    if (!seen.insert({a, b}).second) semantic_fail(ep, "duplicate table entry");
    const VecP v = parse_vecp(member(j[e], ep, "value"), ep + ".value", len, nvars);
    t[a][b] = v;
    t[b][a] = vec_scale(Rat(-1), v);
  }
  return t;
}

// --- algebroid codec ----------------------------------------------------------------

const char* presentation_name(Presentation p) {
  switch (p) {
    case Presentation::Full: return "full";
    case Presentation::Anchor: return "anchor";
    case Presentation::Form: return "form";
    case Presentation::Line: return "line";
  }
  return "full";
}

Json algebroid_json(const ProjAlgebroid& a) {
  Json p;
  p["presentation"] = presentation_name(a.pres);
  switch (a.pres) {
    case Presentation::Full: {
      Json g = Json::array();
      for (const MatP& m : a.gamma) g.push_back(matp_json(m));
      p["gamma"] = g;
      p["curv"] = skew_table_json(a.curv, "a", "b");
      p["c0"] = lie_json(a.c0, poly_json);
      break;
    }
    case Presentation::Anchor: {
      p["frame"] = matq_json(a.fbasis);
      p["rho"] = matp_json(a.rho);
      p["c"] = lie_json(a.c, poly_json);
      break;
    }
    case Presentation::Form:
      p["lambda"] = matp_json(a.lambda);
      break;
    case Presentation::Line:
      p["x"] = vecp_json(a.line_x);
      p["e"] = vecp_json(a.line_e);
      p["comp"] = a.line_comp;
      break;
  }
  return p;
}

ProjAlgebroid parse_algebroid(const Json& p, const std::string& path, int d, int r) {
  const std::string pres = get_str(member(p, path, "presentation"), path + ".presentation");
  ProjAlgebroid a;
  if (pres == "full") {
    const Json& gj = get_arr_n(member(p, path, "gamma"), path + ".gamma", d);
    std::vector<MatP> gamma;
    for (int x = 0; x < d; ++x)
      gamma.push_back(parse_matp(gj[x], idx(path + ".gamma", x), r, r, d));
    auto curv = parse_skew_table(member(p, path, "curv"), path + ".curv", d, r, d, "a", "b");
    LieStructP c0 = parse_lie_p(member(p, path, "c0"), path + ".c0", r, d);
    a = with_path(path, [&] {
      return ProjAlgebroid::full_pres(std::move(gamma), std::move(curv), std::move(c0));
    });
  } else if (pres == "anchor") {
    const Json& fj = get_arr(member(p, path, "frame"), path + ".frame");
    std::vector<VecQ> rows;
    for (std::size_t i = 0; i < fj.size(); ++i)
      rows.push_back(parse_vecq(fj[i], idx(path + ".frame", i), r));
    const Subspace f = Subspace::from_vectors(r, rows);
    const int m = f.dim();
    MatP rho = parse_matp(member(p, path, "rho"), path + ".rho", d, m, d);
    LieStructP c = parse_lie_p(member(p, path, "c"), path + ".c", m, d);
    a = with_path(path, [&] {
      return ProjAlgebroid::anchor_subbundle(d, r, std::move(rho), std::move(c), f);
    });
  } else if (pres == "form") {
    MatP lambda = parse_matp(member(p, path, "lambda"), path + ".lambda", r, d, d);
    a = with_path(path, [&] { return ProjAlgebroid::form_pres(d, r, std::move(lambda)); });
  } else if (pres == "line") {
    VecP x = parse_vecp(member(p, path, "x"), path + ".x", d, d);
    VecP e = parse_vecp(member(p, path, "e"), path + ".e", r, d);
    const int comp = get_int(member(p, path, "comp"), path + ".comp");
    a = with_path(path,
                  [&] { return ProjAlgebroid::line_pres(std::move(x), std::move(e), comp); });
  } else {
    parse_fail(path + ".presentation", "unknown presentation \"" + pres + "\"");
  }
  if (a.d != d || a.r != r) semantic_fail(path, "payload dimensions disagree with the header");
  return a;
}

// --- model kinds ---------------------------------------------------------------------

const char* coeff_kind_name(ModelKind k) {
  return (k == ModelKind::PointSubspace || k == ModelKind::LieAlgebra) ? "rational"
                                                                       : "polynomial";
}

const char* dirac_kind_name(DiracKind k) {
  switch (k) {
    case DiracKind::Lift: return "lift";
    case DiracKind::GraphLambda: return "graph-lambda";
    case DiracKind::GraphPi: return "graph-pi";
  }
  return "lift";
}

}  // namespace

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::PointSubspace: return "point-subspace";
    case ModelKind::LieAlgebra: return "lie-algebra";
    case ModelKind::Algebroid: return "algebroid";
    case ModelKind::Dirac: return "dirac";
    case ModelKind::Deformation: return "deformation";
    case ModelKind::Bialgebroid: return "bialgebroid";
  }
  return "lie-algebra";
}

// --- serialization --------------------------------------------------------------------

std::string serialize_model(const ModelFile& m) {
  Json j;
  j["format"] = kModelFormat;
  j["kind"] = model_kind_name(m.kind);
  j["d"] = m.d;
  j["r"] = m.r;
  j["coefficients"] = coeff_kind_name(m.kind);
  j["name"] = m.name;
  j["description"] = m.description;
  Json p;
  switch (m.kind) {
    case ModelKind::PointSubspace:
      p["basis"] = matq_json(m.point.space.basis());
      break;
    case ModelKind::LieAlgebra:
      p["c"] = lie_json(m.lie, rat_json);
      p["representation"] = Json{{"target", m.rep.r}, {"matrices", Json::array()}};
      for (const MatQ& rho : m.rep.rho) p["representation"]["matrices"].push_back(matq_json(rho));
      break;
    case ModelKind::Algebroid:
      p = algebroid_json(m.algebroid);
      break;
    case ModelKind::Dirac:
      p["structure"] = dirac_kind_name(m.dirac_kind);
      if (m.dirac_kind == DiracKind::GraphLambda) {
        p["lambda"] = matp_json(m.lambda);
        p["zeta"] = skew_table_json(m.zeta, "a", "b");
      } else {
        p["base"] = algebroid_json(m.algebroid);
      }
      break;
    case ModelKind::Deformation:
      p["base"] = algebroid_json(m.algebroid);
      p["omega"] = skew_table_json(m.omega, "i", "j");
      break;
    case ModelKind::Bialgebroid:
      p["primal"] = algebroid_json(m.algebroid);
      p["dual"] = algebroid_json(m.dual);
      break;
  }
  j["payload"] = p;
  return j.dump(2) + "\n";
}

ModelFile parse_model(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object()) parse_fail("$", "expected a JSON object");
  const std::string fmt = get_str(member(j, "$", "format"), "$.format");
  if (fmt != kModelFormat)
    parse_fail("$.format", "unsupported format \"" + fmt + "\"; this tool reads \"" +
                               kModelFormat + "\"");
  const std::string kind = get_str(member(j, "$", "kind"), "$.kind");
  ModelFile m;
  if (kind == "point-subspace") m.kind = ModelKind::PointSubspace;
  else if (kind == "lie-algebra") m.kind = ModelKind::LieAlgebra;
  else if (kind == "algebroid") m.kind = ModelKind::Algebroid;
  else if (kind == "dirac") m.kind = ModelKind::Dirac;
  else if (kind == "deformation") m.kind = ModelKind::Deformation;
  else if (kind == "bialgebroid") m.kind = ModelKind::Bialgebroid;
  else parse_fail("$.kind", "unknown model kind \"" + kind + "\"");
  m.d = get_int(member(j, "$", "d"), "$.d");
  m.r = get_int(member(j, "$", "r"), "$.r");
  if (m.r < 0) semantic_fail("$.r", "negative dimension");
  const bool pointwise =
      m.kind == ModelKind::PointSubspace || m.kind == ModelKind::LieAlgebra;
  if (pointwise && m.d != 0) semantic_fail("$.d", "pointwise payloads require d = 0");
  if (!pointwise && m.d < 1) semantic_fail("$.d", "bundle payloads require d >= 1");
  const std::string coeff = get_str(member(j, "$", "coefficients"), "$.coefficients");
  if (coeff != coeff_kind_name(m.kind))
    semantic_fail("$.coefficients", std::string(model_kind_name(m.kind)) + " payloads use \"" +
                                        coeff_kind_name(m.kind) + "\" coefficients");
  m.name = get_str(member(j, "$", "name"), "$.name");
  m.description = get_str(member(j, "$", "description"), "$.description");
  const Json& p = member(j, "$", "payload");
  const std::string pp = "$.payload";
  switch (m.kind) {
    case ModelKind::PointSubspace: {
      const int ambient = m.r * m.r + m.r;
      const Json& bj = get_arr(member(p, pp, "basis"), pp + ".basis");
      std::vector<VecQ> rows;
      for (std::size_t i = 0; i < bj.size(); ++i)
        rows.push_back(parse_vecq(bj[i], idx(pp + ".basis", i), ambient));
      m.point = PointDirac{m.r, Subspace::from_vectors(ambient, rows)};
      break;
    }
    case ModelKind::LieAlgebra: {
      m.lie = parse_lie_q(member(p, pp, "c"), pp + ".c", m.r);
      const Json& rj = member(p, pp, "representation");
      const std::string rp = pp + ".representation";
      const int target = get_int(member(rj, rp, "target"), rp + ".target");
      if (target < 0) semantic_fail(rp + ".target", "negative dimension");
      const Json& mats = get_arr_n(member(rj, rp, "matrices"), rp + ".matrices", m.r);
      m.rep.n = m.r;
      m.rep.r = target;
      for (int i = 0; i < m.r; ++i)
        m.rep.rho.push_back(parse_matq(mats[i], idx(rp + ".matrices", i), target, target));
      break;
    }
    case ModelKind::Algebroid:
      m.algebroid = parse_algebroid(p, pp, m.d, m.r);
      break;
    case ModelKind::Dirac: {
      const std::string st = get_str(member(p, pp, "structure"), pp + ".structure");
      if (st == "lift") m.dirac_kind = DiracKind::Lift;
      else if (st == "graph-pi") m.dirac_kind = DiracKind::GraphPi;
      else if (st == "graph-lambda") m.dirac_kind = DiracKind::GraphLambda;
      else parse_fail(pp + ".structure", "unknown structure \"" + st + "\"");
      if (m.dirac_kind == DiracKind::GraphLambda) {
        m.lambda = parse_matp(member(p, pp, "lambda"), pp + ".lambda", m.r, m.d, m.d);
        m.zeta = parse_skew_table(member(p, pp, "zeta"), pp + ".zeta", m.d, m.r, m.d, "a", "b");
      } else {
        m.algebroid = parse_algebroid(member(p, pp, "base"), pp + ".base", m.d, m.r);
      }
      break;
    }
    case ModelKind::Deformation: {
      m.algebroid = parse_algebroid(member(p, pp, "base"), pp + ".base", m.d, m.r);
      m.omega = parse_skew_table(member(p, pp, "omega"), pp + ".omega",
                                 m.algebroid.frame_count(), m.r, m.d, "i", "j");
      break;
    }
    case ModelKind::Bialgebroid:
      m.algebroid = parse_algebroid(member(p, pp, "primal"), pp + ".primal", m.d, m.r);
      m.dual = parse_algebroid(member(p, pp, "dual"), pp + ".dual", m.d, m.r);
      break;
  }
  return m;
}

DiracPres ModelFile::dirac() const {
  if (kind != ModelKind::Dirac)
    throw Error(ErrorKind::Input, "model does not carry a Dirac payload");
  switch (dirac_kind) {
    case DiracKind::Lift: return lift_bundle(algebroid);
    case DiracKind::GraphPi: return graph_pi(algebroid);
    case DiracKind::GraphLambda: return graph_lambda(lambda, zeta);
  }
  throw Error(ErrorKind::Input, "model does not carry a Dirac payload");
}

namespace {

bool rep_eq(const Rep& a, const Rep& b) {
  return a.n == b.n && a.r == b.r && a.rho == b.rho;
}

}  // namespace

bool operator==(const ModelFile& a, const ModelFile& b) {
  if (a.kind != b.kind || a.d != b.d || a.r != b.r || a.name != b.name ||
      a.description != b.description)
    return false;
  switch (a.kind) {
    case ModelKind::PointSubspace:
      return a.point.r == b.point.r && a.point.space == b.point.space;
    case ModelKind::LieAlgebra: return a.lie == b.lie && rep_eq(a.rep, b.rep);
    case ModelKind::Algebroid: return a.algebroid == b.algebroid;
    case ModelKind::Dirac:
      if (a.dirac_kind != b.dirac_kind) return false;
      if (a.dirac_kind == DiracKind::GraphLambda)
        return a.lambda == b.lambda && a.zeta == b.zeta;
      return a.algebroid == b.algebroid;
    case ModelKind::Deformation: return a.algebroid == b.algebroid && a.omega == b.omega;
    case ModelKind::Bialgebroid: return a.algebroid == b.algebroid && a.dual == b.dual;
  }
  return false;
}

// --- reports -----------------------------------------------------------------------

int Report::passed() const {
  int n = 0;
  for (const CheckRecord& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

bool Report::all_pass() const { return failed() == 0; }

std::string Report::to_text() const {
  std::ostringstream os;
  os << "omnilie " << kToolVersion << " (" << kModelFormat << ")\n";
  os << "command: " << command << "\n";
  if (!model.empty()) os << "model: " << model << "\n";
  if (seed) os << "seed: " << *seed << "\n";
  for (const CheckRecord& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.law << "\n";
    if (!c.witness.empty()) os << "      " << c.witness << "\n";
  }
  os << "summary: " << checks.size() << " checks, " << passed() << " passed, " << failed()
     << " failed\n";
  return os.str();
}

std::string Report::to_json() const {
  Json j;
  j["format"] = kReportFormat;
  j["tool"] = "omnilie";
  j["version"] = kToolVersion;
  j["command"] = command;
  if (!model.empty()) j["model"] = model;
  if (seed) j["seed"] = *seed;
  Json cs = Json::array();
  for (const CheckRecord& c : checks)
    cs.push_back(Json{{"name", c.name}, {"law", c.law}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = cs;
  j["summary"] = Json{{"checks", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

// --- command execution ----------------------------------------------------------------

namespace {

CheckRecord rec(std::string name, std::string law, bool pass, std::string witness = "") {
  return CheckRecord{std::move(name), std::move(law), pass, std::move(witness)};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const std::string& x : v) {
    if (!s.empty()) s += "; ";
    s += x;
  }
  return s;
}

std::string triple_str(const std::array<int, 3>& t) {
  return "basis triple (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + ")";
}

const ModelFile& need_model(const std::optional<ModelFile>& m, const std::string& cmd) {
  if (!m) throw Error(ErrorKind::Input, cmd + " requires --model");
  return *m;
}

void need_kind(const ModelFile& m, std::initializer_list<ModelKind> ks, const std::string& cmd) {
  std::string names;
  for (ModelKind k : ks) {
    if (m.kind == k) return;
    if (!names.empty()) names += " or ";
    names += model_kind_name(k);
  }
  throw Error(ErrorKind::Input, cmd + " expects a " + names + " model, got " +
                                    model_kind_name(m.kind));
}

void cmd_check_lie(const ModelFile& m, Report& rp) {
  if (m.kind == ModelKind::LieAlgebra) {
    const auto w = check_jacobi(m.lie);
    rp.checks.push_back(rec("jacobi", "cyclic bracket sums vanish on all basis triples", !w,
                            w ? triple_str(*w) : ""));
    const auto hd = m.rep.homomorphism_defect(m.lie);
    rp.checks.push_back(rec("representation",
                            "representation matrices send brackets to commutators", !hd,
                            hd ? "basis pair (" + std::to_string((*hd)[0]) + ", " +
                                     std::to_string((*hd)[1]) + ")"
                               : ""));
  } else {
    const CheckReport cr = check_projective_algebroid(m.algebroid);
    rp.checks.push_back(rec("presentation-laws",
                            "the presentation satisfies its defining anchor, bracket and "
                            "curvature laws",
                            cr.pass, join(cr.failures)));
  }
}

void cmd_check_dirac(const ModelFile& m, Report& rp) {
  if (m.kind == ModelKind::PointSubspace) {
    const DiracFlags f = is_dirac(m.point);
    rp.checks.push_back(rec("isotropic", "the symmetric pairing vanishes on all basis pairs",
                            f.isotropic));
    rp.checks.push_back(
        rec("maximal", "the subspace equals its own pairing orthogonal", f.maximal));
    rp.checks.push_back(
        rec("closed", "brackets of basis pairs stay inside the subspace", f.closed));
    rp.checks.push_back(rec("dimension-formula", "dim L = (1 - r) w + r^2", f.dim_formula,
                            "dim = " + std::to_string(f.dim) + ", w = " + std::to_string(f.w)));
  } else {
    const CheckReport cr = dirac_closure_check(m.dirac());
    rp.checks.push_back(rec("isotropy-and-closure",
                            "every generator pair is isotropic and bracket-closed", cr.pass,
                            join(cr.failures)));
  }
}

void cmd_lift(const ModelFile& m, Report& rp, std::optional<ModelFile>& artifact) {
  if (m.kind == ModelKind::LieAlgebra) {
    const int n = m.lie.dim();
    const PointDirac l = lift_point(n, Subspace::full(n), m.lie);
    const DiracFlags f = is_dirac(l);
    rp.checks.push_back(rec("lifted-dirac",
                            "the lifted subspace is maximal isotropic and bracket-closed",
                            f.is_dirac(),
                            "dim = " + std::to_string(f.dim) + ", w = " + std::to_string(f.w)));
    ModelFile out;
    out.kind = ModelKind::PointSubspace;
    out.d = 0;
    out.r = n;
    out.name = m.name.empty() ? "lift" : m.name + "-lift";
    out.description = "pointwise Dirac structure lifted from " +
                      (m.name.empty() ? std::string("the input algebra") : m.name);
    out.point = l;
    artifact = std::move(out);
  } else {
    const DiracPres l = lift_bundle(m.algebroid);
    const CheckReport cr = dirac_closure_check(l);
    rp.checks.push_back(
        rec("lift-closure", "every generator pair is isotropic and bracket-closed", cr.pass,
            cr.pass ? "frame sections: " + std::to_string(l.frame.size()) +
                          ", annihilator generators: " + std::to_string(l.a0.size())
                    : join(cr.failures)));
    ModelFile out;
    out.kind = ModelKind::Dirac;
    out.d = m.d;
    out.r = m.r;
    out.name = m.name.empty() ? "lift" : m.name + "-lift";
    out.description = "Dirac structure lifted from " +
                      (m.name.empty() ? std::string("the input algebroid") : m.name);
    out.dirac_kind = DiracKind::Lift;
    out.algebroid = m.algebroid;
    artifact = std::move(out);
  }
}

void cmd_reduce(const ModelFile& m, Report& rp, std::optional<ModelFile>& artifact) {
  if (m.kind == ModelKind::PointSubspace) {
    const ReducedPoint red = reduce_point(m.point);
    rp.checks.push_back(rec("reduced-jacobi",
                            "the reduced bracket satisfies the Jacobi identity",
                            !check_jacobi(red.c), "dim W = " + std::to_string(red.W.dim())));
    ModelFile out;
    out.kind = ModelKind::LieAlgebra;
    out.d = 0;
    out.r = red.c.dim();
    out.name = m.name.empty() ? "reduced" : m.name + "-reduced";
    out.description = "Lie algebra reduced from " +
                      (m.name.empty() ? std::string("the input subspace") : m.name);
    out.lie = red.c;
    out.rep = Rep::trivial(red.c.dim(), 1);
    artifact = std::move(out);
  } else {
    const ProjAlgebroid a = reduce_bundle(m.dirac());
    const CheckReport cr = check_projective_algebroid(a);
    rp.checks.push_back(rec("reduced-laws",
                            "the reduced presentation satisfies its defining anchor, bracket "
                            "and curvature laws",
                            cr.pass, join(cr.failures)));
    ModelFile out;
    out.kind = ModelKind::Algebroid;
    out.d = a.d;
    out.r = a.r;
    out.name = m.name.empty() ? "reduced" : m.name + "-reduced";
    out.description = "projective Lie algebroid reduced from " +
                      (m.name.empty() ? std::string("the input structure") : m.name);
    out.algebroid = a;
    artifact = std::move(out);
  }
}

void cmd_normalizer(const ModelFile& m, const RunFlags& flags, Report& rp) {
  const DiracFlags f = is_dirac(m.point);
  if (!f.is_dirac())
    throw Error(ErrorKind::Input, "normalizer requires a model that is a Dirac structure");
  const Subspace n = normalizer_point(m.point);
  const ReducedPoint red = reduce_point(m.point);
  const int der = derivations(red.c).der.dim();
  const int ann = m.r * (m.r - f.w);
  rp.checks.push_back(rec("normalizer-dimension",
                          "dimension of the sections whose bracket with L stays inside L", true,
                          "dim N = " + std::to_string(n.dim())));
  rp.checks.push_back(
      rec("dimension-formula", "dim N = dim ann(W) + r + dim Der(reduced bracket)",
          n.dim() == ann + m.r + der,
          "dim N = " + std::to_string(n.dim()) + ", ann = " + std::to_string(ann) +
              ", r = " + std::to_string(m.r) + ", der = " + std::to_string(der)));
  Rng rng(flags.seed);
  bool law = true, identity = true;
  std::string law_witness, id_witness;
  for (int t = 0; t < flags.count; ++t) {
    const OmniElt x(rng.matq(m.r, m.r), rng.vecq(m.r));
    const bool inside = n.contains(x.flatten());
    const OmegaCochainResult oc = omega_cochain_check(x, m.point);
    if (law && inside != oc.is_cocycle) {
      law = false;
      law_witness = "trial " + std::to_string(t);
    }
    if (identity && !oc.identity_exact) {
      identity = false;
      id_witness = "trial " + std::to_string(t);
    }
  }
  const std::string trials = "trials: " + std::to_string(flags.count);
  rp.checks.push_back(rec("cocycle-law",
                          "membership in the normalizer coincides with the pairing cochain "
                          "being closed",
                          law, law ? trials : law_witness));
  rp.checks.push_back(rec("pairing-differential",
                          "d om_X(l1, l2) = -<<{X, l1}, l2>> on basis pairs", identity,
                          identity ? trials : id_witness));
  rp.seed = flags.seed;
}

void cmd_derivations(const ModelFile& m, Report& rp) {
  const DerivationResult dr = derivations(m.lie);
  rp.checks.push_back(rec("derivation-space", "solutions of D[a, b] = [Da, b] + [a, Db]", true,
                          "dim Der = " + std::to_string(dr.der.dim())));
  rp.checks.push_back(rec("inner-ideal", "the spans of ad(e_i) lie inside the derivation space",
                          dr.der.contains_subspace(dr.inn),
                          "dim Inn = " + std::to_string(dr.inn.dim())));
  rp.checks.push_back(rec("outer-dimension", "outer dimension equals dim Der - dim Inn",
                          dr.ext_dim == dr.der.dim() - dr.inn.dim(),
                          "ext = " + std::to_string(dr.ext_dim)));
}

void cmd_cohomology(const ModelFile& m, Report& rp) {
  const CohomologyDims h = cohomology_dims(m.rep, m.lie);
  rp.checks.push_back(rec("differential-composition",
                          "consecutive differentials compose to zero at all computed degrees",
                          h.d_squared_zero));
  rp.checks.push_back(rec("betti-numbers", "kernel and image ranks of the cochain complex",
                          true,
                          "h0 = " + std::to_string(h.h0) + ", h1 = " + std::to_string(h.h1) +
                              ", h2 = " + std::to_string(h.h2)));
}

void cmd_deform(const ModelFile& m, Report& rp) {
  const DeformationReport dr = deformation_check(m.algebroid, m.omega);
  const std::string w = join(dr.failures);
  rp.checks.push_back(rec("values-in-intersection",
                          "deformation values lie in the fibre part of the structure",
                          dr.values_ok, dr.values_ok ? "" : w));
  rp.checks.push_back(rec("cyclic-bracket",
                          "cyclic sums of brackets against deformation values vanish",
                          dr.closed, dr.closed ? "" : w));
  rp.checks.push_back(rec("fibrewise-jacobi",
                          "the deformation values form a fibrewise Lie bracket", dr.fibrewise,
                          dr.fibrewise ? "" : w));
  rp.checks.push_back(rec("pullback-cochain",
                          "the pulled-back two-cochain is closed on the lifted frame",
                          dr.b_star_closed));
  rp.checks.push_back(rec("route-agreement",
                          "direct and pulled-back closedness verdicts coincide", dr.agree));
  rp.checks.push_back(rec("deformed-closure",
                          "deformed structures at parameters 1, -1 and 2 stay bracket-closed",
                          dr.deformed_dirac_ok, dr.deformed_dirac_ok ? "" : w));
}

void cmd_bialgebra(const ModelFile& m, Report& rp) {
  const BialgebroidReport br = bialgebroid_check(m.algebroid, m.dual);
  rp.checks.push_back(rec("section-pairs",
                          "the dual differential is a bracket derivation on frame-section "
                          "pairs",
                          br.cond_sections));
  rp.checks.push_back(rec("mixed-pairs",
                          "the dual differential is compatible on section-coordinate pairs",
                          br.cond_mixed));
  rp.checks.push_back(rec("function-pairs",
                          "the dual differential is compatible on coordinate pairs",
                          br.cond_functions));
  rp.checks.push_back(rec("jet-cocycle-oracle",
                          "the lifted dual differential is a cocycle for the jet bracket",
                          br.oracle_pass));
  rp.checks.push_back(
      rec("oracle-agreement", "primary and oracle verdicts coincide", br.agree));
}

void cmd_graph_lambda(const ModelFile& m, Report& rp) {
  if (m.dirac_kind != DiracKind::GraphLambda)
    throw Error(ErrorKind::Input, "graph-lambda expects a dirac model with graph-lambda data");
  const LambdaReport lr = graph_lambda_equivalence(m.lambda, m.zeta);
  rp.checks.push_back(
      rec("graph-closure", "the graph sections are isotropic and bracket-closed", lr.closure));
  rp.checks.push_back(rec("two-form-cocycle",
                          "the induced two-form on derivations is closed", lr.cocycle));
  rp.checks.push_back(rec("canonical-primitive",
                          "the two-form part matches the exterior derivative of the graph map",
                          lr.coboundary_form));
  rp.checks.push_back(rec("three-way-agreement",
                          "closure, cocycle and primitive verdicts coincide", lr.all_agree));
}

void cmd_pi_bracket(const ModelFile& m, Report& rp) {
  const auto defect = pi_morphism_defect(m.algebroid);
  rp.checks.push_back(rec("jet-bracket-morphism",
                          "the jet-to-derivation map sends the induced bracket to the "
                          "commutator",
                          !defect, defect.value_or("")));
  const CheckReport cr = dirac_closure_check(graph_pi(m.algebroid));
  rp.checks.push_back(rec("graph-closure",
                          "the graph sections are isotropic and bracket-closed", cr.pass,
                          join(cr.failures)));
}

void cmd_verify_axioms(const RunFlags& flags, Report& rp) {
  const AxiomReport a = axiom_suite(flags.seed, flags.d, flags.r, flags.deg, flags.count);
  rp.checks.push_back(rec("corpus", "seeded random section corpus", true,
                          "trials: " + std::to_string(a.trials) + ", d = " +
                              std::to_string(a.d) + ", r = " + std::to_string(a.r) +
                              ", degree <= " + std::to_string(flags.deg)));
  rp.checks.push_back(
      rec("left-leibniz", "{X, {Y, Z}} = {{X, Y}, Z} + {Y, {X, Z}}", a.left_leibniz));
  rp.checks.push_back(rec("pairing-invariance",
                          "a_X <<Y, Z>> = <<{X, Y}, Z>> + <<Y, {X, Z}>>",
                          a.pairing_invariance));
  rp.checks.push_back(rec("symmetric-part",
                          "{X, Y} + {Y, X} is the prolongation of 2 <<X, Y>>",
                          a.symmetric_part));
  rp.checks.push_back(rec("scalar-shift",
                          "{fX, Y} = f {X, Y} - y(f) X + df tensor 2 <<X, Y>>",
                          a.scalar_shift));
  rp.checks.push_back(rec("prolong-pairing", "<prolong v, a> = a(v)", a.prolong_pairing));
  rp.checks.push_back(rec("lie-derivative-rule",
                          "a <mu, b> = <L_a mu, b> + <mu, [a, b]>", a.lie_derivative_rule));
  rp.checks.push_back(
      rec("bracket-commutator", "[a, b](v) = a(b(v)) - b(a(v))", a.bracket_commutator));
  rp.checks.push_back(rec("falling-morphism",
                          "falling of a bracket is the commutator of falling operators",
                          a.falling_morphism));
  rp.checks.push_back(rec("hom-ideal",
                          "symbol-free sections absorb brackets from both sides", a.hom_ideal));
  rp.checks.push_back(rec("module-rules",
                          "prolongation and Lie-derivative Leibniz expansions hold",
                          a.module_rules));
  rp.checks.push_back(rec("reconstruction",
                          "X = ((x, phi), (0, eta - Ju)) + (0, prolong u)", a.reconstruction));
  rp.seed = flags.seed;
}

void cmd_catalog(const std::optional<ModelFile>& model, Report& rp,
                 std::optional<ModelFile>& artifact) {
  if (model) {
    rp.checks.push_back(rec(model->name,
                            std::string("catalog model of kind ") +
                                model_kind_name(model->kind) +
                                "; primary check: " + primary_command(*model),
                            true, model->description));
    rp.model = model->name;
    artifact = *model;
    return;
  }
  for (const ModelFile& e : catalog())
    rp.checks.push_back(rec(e.name,
                            std::string("catalog model of kind ") + model_kind_name(e.kind) +
                                "; primary check: " + primary_command(e),
                            true, e.description));
}

}  // namespace

std::string primary_command(const ModelFile& m) {
  switch (m.kind) {
    case ModelKind::PointSubspace: return "check-dirac";
    case ModelKind::LieAlgebra: return "check-lie";
    case ModelKind::Algebroid: return "check-lie";
    case ModelKind::Dirac:
      return m.dirac_kind == DiracKind::GraphLambda ? "graph-lambda" : "check-dirac";
    case ModelKind::Deformation: return "deform";
    case ModelKind::Bialgebroid: return "bialgebra";
  }
  return "check-lie";
}

RunResult run_command(const std::string& cmd, const std::optional<ModelFile>& model,
                      const RunFlags& flags) {
  RunResult res;
  res.report.command = cmd;
  if (model) res.report.model = model->name;
  if (cmd == "check-lie") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::LieAlgebra, ModelKind::Algebroid}, cmd);
    cmd_check_lie(m, res.report);
  } else if (cmd == "check-dirac") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::PointSubspace, ModelKind::Dirac}, cmd);
    cmd_check_dirac(m, res.report);
  } else if (cmd == "lift") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::LieAlgebra, ModelKind::Algebroid}, cmd);
    cmd_lift(m, res.report, res.artifact);
  } else if (cmd == "reduce") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::PointSubspace, ModelKind::Dirac}, cmd);
    cmd_reduce(m, res.report, res.artifact);
  } else if (cmd == "normalizer") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::PointSubspace}, cmd);
    cmd_normalizer(m, flags, res.report);
  } else if (cmd == "derivations") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::LieAlgebra}, cmd);
    cmd_derivations(m, res.report);
  } else if (cmd == "cohomology") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::LieAlgebra}, cmd);
    cmd_cohomology(m, res.report);
  } else if (cmd == "deform") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::Deformation}, cmd);
    cmd_deform(m, res.report);
  } else if (cmd == "bialgebra") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::Bialgebroid}, cmd);
    cmd_bialgebra(m, res.report);
  } else if (cmd == "graph-lambda") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::Dirac}, cmd);
    cmd_graph_lambda(m, res.report);
  } else if (cmd == "pi-bracket") {
    const ModelFile& m = need_model(model, cmd);
    need_kind(m, {ModelKind::Algebroid}, cmd);
    cmd_pi_bracket(m, res.report);
  } else if (cmd == "verify-axioms") {
    if (model) throw Error(ErrorKind::Input, "verify-axioms takes no model");
    cmd_verify_axioms(flags, res.report);
  } else if (cmd == "catalog") {
    cmd_catalog(model, res.report, res.artifact);
  } else {
    throw Error(ErrorKind::Input, "unknown command \"" + cmd + "\"");
  }
  return res;
}

// --- catalog -----------------------------------------------------------------------

namespace {

Poly cpz(int d) { return Poly(d); }
Poly cpo(int d) { return Poly::constant(d, Rat(1)); }
Poly cvar(int d, int i) { return Poly::variable(d, i); }

VecP cvz(int n, int d) { return VecP(n, cpz(d)); }

LieStruct aff1_struct() {
  LieStruct s(2);
  s.set(0, 1, 1, Rat(1));
  return s;
}

LieStruct sl2_struct() {
  LieStruct s(3);
  s.set(0, 1, 1, Rat(2));
  s.set(0, 2, 2, Rat(-2));
  s.set(1, 2, 0, Rat(1));
  return s;
}

ModelFile lie_entry(std::string name, std::string desc, LieStruct lie, Rep rep) {
  ModelFile m;
  m.kind = ModelKind::LieAlgebra;
  m.d = 0;
  m.r = lie.dim();
  m.name = std::move(name);
  m.description = std::move(desc);
  m.lie = std::move(lie);
  m.rep = std::move(rep);
  return m;
}

ModelFile algebroid_entry(std::string name, std::string desc, ProjAlgebroid a) {
  ModelFile m;
  m.kind = ModelKind::Algebroid;
  m.d = a.d;
  m.r = a.r;
  m.name = std::move(name);
  m.description = std::move(desc);
  m.algebroid = std::move(a);
  return m;
}

std::vector<ModelFile> build_catalog() {
  std::vector<ModelFile> out;

  out.push_back(lie_entry("abelian-n2",
                          "two-dimensional abelian Lie algebra with the rank-2 trivial "
                          "representation",
                          LieStruct(2), Rep::trivial(2, 2)));
  out.push_back(lie_entry("aff1",
                          "affine line algebra [e0, e1] = e1 with its adjoint representation",
                          aff1_struct(), Rep::adjoint(aff1_struct())));
  out.push_back(lie_entry("sl2",
                          "three-dimensional split simple algebra in the (h, e, f) basis with "
                          "its adjoint representation",
                          sl2_struct(), Rep::adjoint(sl2_struct())));

  {
    ModelFile m;
    m.kind = ModelKind::PointSubspace;
    m.d = 0;
    m.r = 2;
    m.name = "aff1-lift";
    m.description = "pointwise Dirac structure lifted from the affine line algebra on Q^2";
    m.point = lift_point(2, Subspace::full(2), aff1_struct());
    out.push_back(std::move(m));
  }

  {
    ModelFile m;
    m.kind = ModelKind::Dirac;
    m.d = 2;
    m.r = 2;
    m.name = "graph-lambda-poly";
    m.description = "graph of a polynomial two-form datum carrying its canonical primitive";
    m.dirac_kind = DiracKind::GraphLambda;
    MatP lambda(2, 2, cpz(2));
    lambda(0, 0) = cvar(2, 0);
    lambda(0, 1) = cvar(2, 1);
    lambda(1, 1) = cvar(2, 0);
    m.lambda = lambda;
    m.zeta.assign(2, std::vector<VecP>(2, cvz(2, 2)));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int k = 0; k < 2; ++k)
          m.zeta[a][b][k] = lambda(k, a).deriv(b) - lambda(k, b).deriv(a);
    out.push_back(std::move(m));
  }

  {
    MatP rho(1, 1, cpz(1));
    rho(0, 0) = cvar(1, 0);
    out.push_back(algebroid_entry(
        "anchor-d1r1", "rank-one Lie algebroid on a line with anchor t d/dt",
        ProjAlgebroid::anchor_pres(1, rho, LieStructP(1, cpz(1)))));
  }

  out.push_back(algebroid_entry(
      "line-bundle-jacobi",
      "line-bundle bracket [fa, ga] = (f x(g) - g x(f)) a with unit designated component",
      ProjAlgebroid::line_pres(VecP{cpo(1)}, VecP{cpo(1)}, 0)));

  {
    LieStructP c0(2, cpz(2));
    c0.set(0, 1, 1, cpo(2));
    out.push_back(algebroid_entry(
        "full-flat-semidirect",
        "flat connection, zero curvature and the fibre bracket [e0, e1] = e1 over a plane",
        ProjAlgebroid::full_pres(std::vector<MatP>(2, MatP(2, 2, cpz(2))),
                                 std::vector<std::vector<VecP>>(2,
                                                                std::vector<VecP>(2, cvz(2, 2))),
                                 c0)));
  }

  {
    LieStructP c0(2, cpz(2));
    c0.set(0, 1, 1, cpo(2));
    std::vector<MatP> gamma(2, MatP(2, 2, cpz(2)));
    gamma[0](1, 0) = cvar(2, 1);
    std::vector<std::vector<VecP>> curv(2, std::vector<VecP>(2, cvz(2, 2)));
    curv[0][1] = VecP{cpz(2), cpo(2)};
    curv[1][0] = VecP{cpz(2), -cpo(2)};
    out.push_back(algebroid_entry(
        "full-curved",
        "connection form t1 E10 with curvature (0, 1) on the coordinate plane and fibre "
        "bracket [e0, e1] = e1",
        ProjAlgebroid::full_pres(gamma, curv, c0)));
  }

  {
    MatQ rows(1, 2);
    rows(0, 0) = Rat(1);
    MatP rho(1, 1, cpz(1));
    rho(0, 0) = cpo(1);
    out.push_back(algebroid_entry(
        "subbundle-F",
        "anchor graph over the proper constant subbundle spanned by e0 with anchor d/dt",
        ProjAlgebroid::anchor_subbundle(1, 2, rho, LieStructP(1, cpz(1)),
                                        Subspace::from_rows(2, rows))));
  }

  {
    ModelFile m;
    m.kind = ModelKind::Deformation;
    m.d = 1;
    m.r = 3;
    m.name = "heisenberg-deformation";
    m.description = "central deformation of the abelian rank-3 algebroid producing the "
                    "Heisenberg bracket";
    m.algebroid = ProjAlgebroid::anchor_pres(1, MatP(1, 3, cpz(1)), LieStructP(3, cpz(1)));
    m.omega.assign(3, std::vector<VecP>(3, cvz(3, 1)));
    m.omega[0][1] = VecP{cpz(1), cpz(1), cpo(1)};
    m.omega[1][0] = VecP{cpz(1), cpz(1), -cpo(1)};
    out.push_back(std::move(m));
  }

  {
    ModelFile m;
    m.kind = ModelKind::Bialgebroid;
    m.d = 1;
    m.r = 1;
    m.name = "bialgebra-trivial";
    m.description = "rank-one pair with anchors t d/dt and d/dt; every compatibility "
                    "condition degenerates to an exact identity";
    MatP rho_e(1, 1, cpz(1));
    rho_e(0, 0) = cvar(1, 0);
    MatP rho_dual(1, 1, cpz(1));
    rho_dual(0, 0) = cpo(1);
    m.algebroid = ProjAlgebroid::anchor_pres(1, rho_e, LieStructP(1, cpz(1)));
    m.dual = ProjAlgebroid::anchor_pres(1, rho_dual, LieStructP(1, cpz(1)));
    out.push_back(std::move(m));
  }

  return out;
}

}  // namespace

const std::vector<ModelFile>& catalog() {
  static const std::vector<ModelFile> entries = build_catalog();
  return entries;
}

std::optional<ModelFile> catalog_find(const std::string& name) {
  for (const ModelFile& m : catalog())
    if (m.name == name) return m;
  return std::nullopt;
}

ModelFile load_model(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    auto m = catalog_find(name);
    if (!m)
      throw Error(ErrorKind::Input,
                  "unknown catalog entry \"" + name + "\"; run `omnilie catalog` for the list");
    return *m;
  }
  std::ifstream f(spec, std::ios::binary);
  if (!f) throw Error(ErrorKind::Input, "cannot read model file: " + spec);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_model(ss.str());
}

}  // namespace omnilie

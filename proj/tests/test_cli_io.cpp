#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>

#include "omnilie/cli_io.hpp"

using namespace omnilie;

namespace {

std::string lie_model_json(const std::string& c_entries) {
  return std::string(R"({"format":"omnilie/1","kind":"lie-algebra","d":0,"r":2,)") +
         R"("coefficients":"rational","name":"t","description":"","payload":{"c":)" +
         c_entries +
         R"(,"representation":{"target":1,"matrices":[[["0/1"]],[["0/1"]]]}}})";
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected parse_model to throw");
}

}  // namespace

TEST_CASE("every catalog model survives the serialization round trip bit-exactly") {
  for (const ModelFile& m : catalog()) {
    CAPTURE(m.name);
    const std::string text = serialize_model(m);
    const ModelFile back = parse_model(text);
    CHECK(back == m);
    CHECK(serialize_model(back) == text);
  }
}

TEST_CASE("catalog shape: unique names, at least eleven entries, primary checks pass") {
  const auto& entries = catalog();
  CHECK(entries.size() >= 11);
  std::set<std::string> names;
  for (const ModelFile& m : entries) names.insert(m.name);
  CHECK(names.size() == entries.size());
  for (const char* expected :
       {"abelian-n2", "aff1", "sl2", "aff1-lift", "graph-lambda-poly", "anchor-d1r1",
        "line-bundle-jacobi", "full-flat-semidirect", "full-curved", "subbundle-F",
        "heisenberg-deformation", "bialgebra-trivial"})
    CHECK(names.count(expected) == 1);

  for (const ModelFile& m : entries) {
    CAPTURE(m.name);
    const RunResult res = run_command(primary_command(m), m, RunFlags{});
    CHECK(res.report.all_pass());
  }
}

TEST_CASE("parse errors are positioned and invariant violations name the field") {
  CHECK(kind_of("this is not json {") == ErrorKind::Parse);
  CHECK(kind_of("[]") == ErrorKind::Parse);
  CHECK(kind_of(R"({"format":"omnilie/2"})") == ErrorKind::Parse);

  // denominator zero is a parse error
  CHECK_THROWS_WITH_AS(parse_model(lie_model_json(R"([{"i":0,"j":1,"k":1,"c":"1/0"}])")),
                       doctest::Contains("zero denominator"), Error);
  CHECK(kind_of(lie_model_json(R"([{"i":0,"j":1,"k":1,"c":"1/0"}])")) == ErrorKind::Parse);

  // a rational not in lowest terms violates a type invariant
  CHECK_THROWS_WITH_AS(parse_model(lie_model_json(R"([{"i":0,"j":1,"k":1,"c":"2/4"}])")),
                       doctest::Contains("lowest terms"), Error);
  CHECK(kind_of(lie_model_json(R"([{"i":0,"j":1,"k":1,"c":"2/4"}])")) == ErrorKind::Semantic);

  // a diagonal structure entry violates skewness, reported with the field path
  CHECK_THROWS_WITH_AS(parse_model(lie_model_json(R"([{"i":1,"j":1,"k":0,"c":"1/1"}])")),
                       doctest::Contains("skewness"), Error);
  CHECK_THROWS_WITH_AS(parse_model(lie_model_json(R"([{"i":1,"j":1,"k":0,"c":"1/1"}])")),
                       doctest::Contains("$.payload.c[0]"), Error);
  CHECK(kind_of(lie_model_json(R"([{"i":1,"j":1,"k":0,"c":"1/1"}])")) == ErrorKind::Semantic);

  // duplicate entries for the same bracket slot are rejected
  CHECK_THROWS_WITH_AS(
      parse_model(lie_model_json(
          R"([{"i":0,"j":1,"k":1,"c":"1/1"},{"i":1,"j":0,"k":1,"c":"1/1"}])")),
      doctest::Contains("duplicate"), Error);

  // malformed rationals and out-of-range indices are positioned parse errors
  CHECK(kind_of(lie_model_json(R"([{"i":0,"j":1,"k":1,"c":"1/-2"}])")) == ErrorKind::Parse);
  CHECK(kind_of(lie_model_json(R"([{"i":0,"j":5,"k":1,"c":"1/1"}])")) == ErrorKind::Parse);
  CHECK_THROWS_WITH_AS(parse_model(lie_model_json(R"([{"i":0,"j":5,"k":1,"c":"1/1"}])")),
                       doctest::Contains("$.payload.c[0]"), Error);
}

TEST_CASE("the three exit-code classes are distinguished") {
  // all checks pass -> 0
  const RunResult ok = run_command("check-lie", catalog_find("aff1"), RunFlags{});
  CHECK(ok.report.all_pass());
  CHECK(exit_code(ok.report) == 0);

  // a failing mathematical check -> 1, reported rather than thrown
  ModelFile bad = *catalog_find("sl2");
  bad.lie = LieStruct(3);
  bad.lie.set(0, 1, 2, Rat(1));
  bad.lie.set(0, 2, 0, Rat(1));
  const RunResult fail = run_command("check-lie", bad, RunFlags{});
  CHECK_FALSE(fail.report.all_pass());
  CHECK(exit_code(fail.report) == 1);
  bool jacobi_failed = false;
  for (const CheckRecord& c : fail.report.checks)
    if (c.name == "jacobi" && !c.pass && !c.witness.empty()) jacobi_failed = true;
  CHECK(jacobi_failed);

  // ill-formed requests throw Input errors (the CLI maps these to 2)
  auto input_kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    throw std::runtime_error("expected run_command to throw");
  };
  CHECK(input_kind([] { run_command("bogus", std::nullopt, RunFlags{}); }) ==
        ErrorKind::Input);
  CHECK(input_kind([] { run_command("check-lie", std::nullopt, RunFlags{}); }) ==
        ErrorKind::Input);
  CHECK(input_kind([] {
          run_command("cohomology", catalog_find("anchor-d1r1"), RunFlags{});
        }) == ErrorKind::Input);
  CHECK(input_kind([] { run_command("verify-axioms", catalog_find("aff1"), RunFlags{}); }) ==
        ErrorKind::Input);
  CHECK(input_kind([] { load_model("catalog:no-such-entry"); }) == ErrorKind::Input);
  CHECK(input_kind([] { load_model("/no/such/file.json"); }) == ErrorKind::Input);
}

TEST_CASE("reports are deterministic and carry the seed") {
  RunFlags f;
  f.seed = 7;
  f.d = 2;
  f.r = 2;
  f.deg = 1;
  f.count = 2;
  const RunResult a = run_command("verify-axioms", std::nullopt, f);
  const RunResult b = run_command("verify-axioms", std::nullopt, f);
  CHECK(a.report.all_pass());
  CHECK(a.report.seed.has_value());
  CHECK(*a.report.seed == 7);
  CHECK(a.report.to_json() == b.report.to_json());
  CHECK(a.report.to_text() == b.report.to_text());

  const std::optional<ModelFile> lifted = catalog_find("aff1-lift");
  const RunResult n1 = run_command("normalizer", lifted, RunFlags{});
  const RunResult n2 = run_command("normalizer", lifted, RunFlags{});
  CHECK(n1.report.all_pass());
  CHECK(n1.report.to_json() == n2.report.to_json());

  // renderings include the verdict lines and the summary
  CHECK(n1.report.to_text().find("PASS dimension-formula") != std::string::npos);
  CHECK(n1.report.to_text().find("summary: ") != std::string::npos);
  CHECK(n1.report.to_json().find("\"format\": \"omnilie-report/1\"") != std::string::npos);
}

TEST_CASE("lift and reduce produce artifacts that invert each other") {
  // bundle: algebroid -> lifted Dirac -> reduced algebroid equals the input
  const ModelFile anchor = *catalog_find("anchor-d1r1");
  const RunResult lifted = run_command("lift", anchor, RunFlags{});
  CHECK(lifted.report.all_pass());
  REQUIRE(lifted.artifact.has_value());
  CHECK(lifted.artifact->kind == ModelKind::Dirac);
  const RunResult reduced = run_command("reduce", *lifted.artifact, RunFlags{});
  CHECK(reduced.report.all_pass());
  REQUIRE(reduced.artifact.has_value());
  CHECK(reduced.artifact->kind == ModelKind::Algebroid);
  CHECK(reduced.artifact->algebroid == anchor.algebroid);

  // pointwise: lifting the affine algebra reproduces the catalog Dirac subspace
  const ModelFile aff = *catalog_find("aff1");
  const RunResult plift = run_command("lift", aff, RunFlags{});
  CHECK(plift.report.all_pass());
  REQUIRE(plift.artifact.has_value());
  CHECK(plift.artifact->point.space == catalog_find("aff1-lift")->point.space);
  const RunResult pred = run_command("reduce", *plift.artifact, RunFlags{});
  CHECK(pred.report.all_pass());
  REQUIRE(pred.artifact.has_value());
  CHECK(pred.artifact->lie == aff.lie);
}

TEST_CASE("command reports on catalog entries match the frozen expectations") {
  // the lifted affine Dirac subspace passes every structural flag
  const RunResult dirac = run_command("check-dirac", catalog_find("aff1-lift"), RunFlags{});
  CHECK(dirac.report.all_pass());
  CHECK(dirac.report.checks.size() == 4);

  // the polynomial graph passes all three equivalent characterizations
  const RunResult gl = run_command("graph-lambda", catalog_find("graph-lambda-poly"),
                                   RunFlags{});
  CHECK(gl.report.all_pass());
  CHECK(gl.report.checks.size() == 4);

  // the Heisenberg deformation passes both compatibility conditions and the oracle
  const RunResult def = run_command("deform", catalog_find("heisenberg-deformation"),
                                    RunFlags{});
  CHECK(def.report.all_pass());

  // the rank-one bialgebroid pair passes primary and oracle verdicts
  const RunResult bi = run_command("bialgebra", catalog_find("bialgebra-trivial"), RunFlags{});
  CHECK(bi.report.all_pass());

  // the jet-side bracket of the abelian rank-3 catalog base is a morphism
  ModelFile heis_base = *catalog_find("heisenberg-deformation");
  ModelFile alg;
  alg.kind = ModelKind::Algebroid;
  alg.d = heis_base.d;
  alg.r = heis_base.r;
  alg.name = "abelian-anchor3";
  alg.algebroid = heis_base.algebroid;
  const RunResult pi = run_command("pi-bracket", alg, RunFlags{});
  CHECK(pi.report.all_pass());

  // cohomology of the abelian pair: h1 = 4 shows up in the witness
  const RunResult coh = run_command("cohomology", catalog_find("abelian-n2"), RunFlags{});
  CHECK(coh.report.all_pass());
  bool betti_seen = false;
  for (const CheckRecord& c : coh.report.checks)
    if (c.name == "betti-numbers" && c.witness.find("h1 = 4") != std::string::npos)
      betti_seen = true;
  CHECK(betti_seen);

  // derivations of sl2: all derivations are inner
  const RunResult der = run_command("derivations", catalog_find("sl2"), RunFlags{});
  CHECK(der.report.all_pass());
  bool ext_zero = false;
  for (const CheckRecord& c : der.report.checks)
    if (c.name == "outer-dimension" && c.witness == "ext = 0") ext_zero = true;
  CHECK(ext_zero);

  // catalog listing reports one passing record per entry
  const RunResult cat = run_command("catalog", std::nullopt, RunFlags{});
  CHECK(cat.report.all_pass());
  CHECK(cat.report.checks.size() == catalog().size());
}

TEST_CASE("models load from files and from catalog references") {
  const ModelFile aff = *catalog_find("aff1");
  CHECK(load_model("catalog:aff1") == aff);

  const std::string path = "cli_io_roundtrip_tmp.json";
  {
    std::ofstream f(path, std::ios::binary);
    f << serialize_model(aff);
  }
  CHECK(load_model(path) == aff);
  std::remove(path.c_str());
}

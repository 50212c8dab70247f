#include "omnilie/rat.hpp"

#include <cctype>
#include <ostream>

namespace omnilie {

Rat Rat::parse(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw Error(ErrorKind::Parse, "invalid rational literal '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::Semantic, "rational with zero denominator: '" + s + "'");
  return Rat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.pretty(); }

}  // namespace omnilie

#include "gendiv/rational.hpp"

#include <cctype>
#include <ostream>

namespace gendiv {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  auto read_int = [&]() -> std::string {
    std::string out;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) out.push_back(s[pos++]);
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out.push_back(s[pos++]);
    if (pos == start) throw ParseError("bad rational literal: '" + s + "'");
    return out;
  };
  std::string num = read_int();
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_int();
  }
  if (pos != s.size()) throw ParseError("bad rational literal: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class v(mpz_class(num), d);
  v.canonicalize();
  return Rat(v);
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace gendiv

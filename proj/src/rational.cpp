#include "liebranch/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace liebranch {

long long to_integer(const Rat& r) {
  if (r.denominator() != 1)
    throw std::invalid_argument("expected integer, got " + rat_to_string(r));
  return r.numerator();
}

long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    long long num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash))
      throw std::invalid_argument("");
    long long den = 1;
    if (slash != std::string::npos) {
      std::string d = s.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size() || den <= 0) throw std::invalid_argument("");
    }
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace liebranch

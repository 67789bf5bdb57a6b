#include "liebranch/weight.hpp"

#include <stdexcept>

namespace liebranch {

namespace {
void require_same_dim(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("weight dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}
}  // namespace

bool Weight::is_zero() const {
  for (const Rat& x : c)
    if (x != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (Rat& x : r.c) x = -x;
  return r;
}

Weight Weight::scaled(long long k) const {
  Weight r = *this;
  for (Rat& x : r.c) x *= k;
  return r;
}

bool Weight::operator<(const Weight& o) const {
  require_same_dim(*this, o);
  for (int i = 0; i < dim(); ++i) {
    if (c[i] < o.c[i]) return true;
    if (o.c[i] < c[i]) return false;
  }
  return false;
}

Rat dot(const Weight& a, const Weight& b) {
  require_same_dim(a, b);
  Rat s(0);
  for (int i = 0; i < a.dim(); ++i) s += a.c[i] * b.c[i];
  return s;
}

Rat coord_sum(const Weight& w) {
  Rat s(0);
  for (const Rat& x : w.c) s += x;
  return s;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int i = 0; i < w.dim(); ++i) {
    if (i) s += ",";
    s += rat_to_string(w.c[i]);
  }
  return s + ")";
}

Weight weight_of(std::vector<long long> ints) {
  std::vector<Rat> c;
  c.reserve(ints.size());
  for (long long v : ints) c.emplace_back(v);
  return Weight(std::move(c));
}

}  // namespace liebranch

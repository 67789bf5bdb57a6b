#ifndef LIEBRANCH_WEIGHT_HPP
#define LIEBRANCH_WEIGHT_HPP

#include <string>
#include <vector>

#include "liebranch/rational.hpp"

namespace liebranch {

// A weight (or root) in the orthogonal e-basis: a vector of exact rationals.
// All arithmetic is exact; weights order lexicographically so they can key
// std::map with deterministic iteration.
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : c(std::move(coords)) {}

  static Weight zero(int dim) { return Weight(std::vector<Rat>(dim, Rat(0))); }

  int dim() const { return static_cast<int>(c.size()); }
  const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  Weight scaled(long long k) const;

  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return c != o.c; }
  bool operator<(const Weight& o) const;  // lexicographic
};

// Inner product in the e-basis. Throws std::invalid_argument on dimension
// mismatch.
Rat dot(const Weight& a, const Weight& b);

// Sum of coordinates.
Rat coord_sum(const Weight& w);

// "(5/2,1/2)" with lowest-terms entries.
std::string to_string(const Weight& w);

// Weight from integer coordinates, convenience for tests and tables.
Weight weight_of(std::vector<long long> ints);

}  // namespace liebranch

#endif

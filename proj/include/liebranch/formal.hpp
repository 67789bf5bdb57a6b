#ifndef LIEBRANCH_FORMAL_HPP
#define LIEBRANCH_FORMAL_HPP

#include <map>
#include <vector>

#include "liebranch/weight.hpp"

namespace liebranch {

/*
  Sparse exact element of the formal algebra spanned by symbols e^kappa with
  integer coefficients and product e^a * e^b = e^{a+b}. Canonical form: no
  zero coefficients; keys iterate in lexicographic order.
*/
struct FormalElement {
  int dim = 0;
  std::map<Weight, long long> terms;

  FormalElement() = default;
  explicit FormalElement(int dimension) : dim(dimension) {}

  // e^0, the multiplicative unit.
  static FormalElement unit(int dimension);

  bool empty() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
  long long coeff(const Weight& w) const;

  // adds c * e^w, canonicalizing
  void add_term(const Weight& w, long long c);

  bool operator==(const FormalElement& o) const {
    return dim == o.dim && terms == o.terms;
  }
  bool operator!=(const FormalElement& o) const { return !(*this == o); }
};

FormalElement add(const FormalElement& a, const FormalElement& b);
FormalElement scale(const FormalElement& a, long long c);
// Convolution of supports; guarded at |a|*|b| <= 10^8 term pairs.
FormalElement multiply(const FormalElement& a, const FormalElement& b);

// prod_{alpha in roots} (1 - e^{-alpha}), expanded exactly with
// factor-by-factor collapse. Constant term is always +1.
FormalElement expand_complement_product(const std::vector<Weight>& roots);

}  // namespace liebranch

#endif

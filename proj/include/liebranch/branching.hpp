#ifndef LIEBRANCH_BRANCHING_HPP
#define LIEBRANCH_BRANCHING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liebranch/injection.hpp"
#include "liebranch/reps.hpp"

namespace liebranch {

/*
  Four independent branching engines, all exact:

    branch_factorized    level-by-level fan recursion
                         nt_nu = sum_gamma sign(gamma) mult(gamma) nt_{nu+gamma}
                                 + sum_w det(w) [nu = w(lam+rho)-rho]
    branch_unfactorized  recursion over the whole Weyl group,
                         nt_xi = -sum_{W\e} det(w) nt_{xi+(1-w)rho} + delta term
    branch_via_partition n_mu = sum_W det(w) K(w(lam+rho)-(rho+mu))
    branch_oracle        restrict ch L^lam and greedily peel subalgebra
                         characters off the top

  They must agree term by term; disagreement or a negative multiplicity at a
  dominant weight raises InternalError.
*/

// Subalgebra term: Dynkin labels of the semisimple part plus u(1) charge.
struct TermKey {
  std::vector<long long> labels;
  Rat charge;
  bool operator==(const TermKey& o) const {
    return labels == o.labels && charge == o.charge;
  }
};

// descending charge, then labels lexicographically ascending
struct TermOrder {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (a.charge != b.charge) return b.charge < a.charge;
    return a.labels < b.labels;
  }
};

using TermTable = std::map<TermKey, long long, TermOrder>;

struct BranchingResult {
  Weight source_hw;
  std::string method;
  // dominant subalgebra highest weights with multiplicities, sorted by
  // (descending charge, ascending labels)
  std::vector<std::pair<Weight, long long>> recorded;
  TermTable terms;
};

// Per-level record of an engine run, for inspection and tests.
struct LevelTrace {
  long long level = 0;
  // (candidate nu, computed nt value, recorded as new term?)
  std::vector<std::tuple<Weight, long long, bool>> computed;
  // anomalous points inserted for the terms recorded on this level
  std::vector<std::pair<Weight, long long>> orbit_inserted;
};
struct BranchTrace {
  std::vector<LevelTrace> levels;
};

// a(k) = <lam - k, epsilon>, the level of k below lam.
Rat level_of(const Injection& inj, const Weight& lam, const Weight& k);

// Dominant (w.r.t. the subalgebra) candidates at the given level:
// sub-dominant nu with lam - nu in the positive root lattice of g. Sorted lex.
std::vector<Weight> candidate_weights(const Injection& inj, const Weight& lam, long long level);

BranchingResult branch_factorized(const Injection& inj, const Weight& lam,
                                  BranchTrace* trace = nullptr,
                                  bool prune_domain = false);

BranchingResult branch_unfactorized(const Injection& inj, const Weight& lam);

BranchingResult branch_via_partition(const Injection& inj, const Weight& lam);

BranchingResult branch_oracle(const Injection& inj, const Weight& lam);

// Kostant-Heckman partition function of the injection: the number of ways to
// write xi as a nonnegative integer combination of the complement roots.
// Direct counting; guarded at <xi, epsilon> <= 1024.
long long kostant_heckman(const Injection& inj, const Weight& xi);

// Cross-check mode: the recursion
//   K(xi) = -sum_{W\e} det(w) K(xi+(w-1)rho) + sum_V det(v) [xi = rho - v rho]
// (determinant factor included in the first sum).
long long kostant_heckman_recursive(const Injection& inj, const Weight& xi);

struct CheckReport {
  bool dimension_ok = false;
  long long dimension_sum = 0;   // sum of n_mu * dim L~^mu
  long long dimension_expected = 0;
  bool pointwise_ok = false;
  std::string pointwise_detail;  // first counterexample if any
  bool symmetry_applicable = false;
  bool symmetry_ok = false;
  std::string symmetry_detail;
};

// (a) dimension sum rule, (b) pointwise multiplicity identity
// m_nu(lam) = sum_mu n_mu m~_nu(mu), (c) reflection symmetry of the term
// table for self-conjugate lam. Failures are reported, not thrown.
CheckReport verify_result(const Injection& inj, const Weight& lam, const BranchingResult& r);

// Helpers shared with rendering.
std::vector<long long> term_labels(const Injection& inj, const Weight& mu);
TermKey term_key(const Injection& inj, const Weight& mu);

}  // namespace liebranch

#endif

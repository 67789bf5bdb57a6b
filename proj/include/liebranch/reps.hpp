#ifndef LIEBRANCH_REPS_HPP
#define LIEBRANCH_REPS_HPP

#include <map>
#include <vector>

#include "liebranch/formal.hpp"
#include "liebranch/rootsystem.hpp"

namespace liebranch {

// Full weight diagram of an irreducible highest-weight module: exact
// multiplicities at every weight, Weyl-invariant, summing to the Weyl
// dimension.
struct WeightDiagram {
  Weight highest;
  std::map<Weight, long long> mult;
  long long total = 0;  // = weyl_dim(highest)
};

// The signed set { w(hw+rho) - rho : det(w) }, one entry per Weyl element.
struct AnomalousSet {
  std::map<Weight, int> entries;
  FormalElement as_formal(int dim) const;
};

AnomalousSet anomalous_weights(const RootSystem& rs, const Weight& hw);

// All dominant weights k with hw - k in the positive root lattice. By the
// saturation of irreducible diagrams these are exactly the dominant weights
// of L^{hw}. Sorted by increasing height of hw - k, then lex.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& hw);

// Freudenthal recursion, top-down by level over dominant weights, orbits
// expanded afterwards. Guarded at dimension <= 10^6.
WeightDiagram freudenthal(const RootSystem& rs, const Weight& hw);

// ch L^{hw} as a formal element.
FormalElement character(const RootSystem& rs, const Weight& hw);

}  // namespace liebranch

#endif

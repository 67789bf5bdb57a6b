#ifndef LIEBRANCH_ROOTSYSTEM_HPP
#define LIEBRANCH_ROOTSYSTEM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liebranch/weight.hpp"

namespace liebranch {

/*
  Classical root systems A/B/C/D in the orthogonal e-basis, together with
  their Weyl groups realized concretely as (signed) coordinate permutations:

    A_n : permutations of n+1 coordinates, no sign changes;
    B_n, C_n : permutations of n coordinates with arbitrary sign changes;
    D_n : permutations of n coordinates with an even number of sign changes.

  A RootSystem may also describe a subalgebra embedded in a larger ambient
  space: it then acts on the coordinate window [lo, hi) and fixes everything
  outside. Embedded systems carry their positive/simple roots and rho in the
  ambient coordinates; they have no fundamental weights.
*/

enum class Series : int { A = 0, B = 1, C = 2, D = 3 };

char series_letter(Series s);

struct WeylElement {
  // action: (w x)[i] = flip[i] * x[perm[i]]
  std::vector<int32_t> perm;
  std::vector<int8_t> flip;
  int det = 1;
};

struct RootSystem {
  Series series;
  int rank = 0;
  int dim = 0;  // ambient dimension (rank for B/C/D, rank+1 for A)
  int lo = 0, hi = 0;  // active coordinate window
  bool embedded = false;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  std::vector<Weight> fundamental_weights;  // empty for embedded systems
  Weight rho;

  long long weyl_order() const;
};

// Standard construction; throws std::invalid_argument for unsupported
// series/rank combinations (rank >= 1, D needs rank >= 2).
RootSystem build_root_system(Series s, int rank);

// Embedded copy acting on coordinates [lo, hi) of an ambient space.
// Exposed for the injection module.
RootSystem build_embedded_root_system(Series s, int rank, int ambient_dim, int lo);

// Full enumeration of the Weyl group, each element exactly once, in a fixed
// deterministic order. Guarded at |W| <= 10^7.
std::vector<WeylElement> weyl_elements(const RootSystem& rs);

// Streaming variant of the above.
void for_each_weyl(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn);

Weight apply(const WeylElement& w, const Weight& k);

// w1 after w2.
WeylElement compose(const WeylElement& w1, const WeylElement& w2);

// <k, alpha> >= 0 for every simple root.
bool is_dominant(const RootSystem& rs, const Weight& k);

// Dominant / antidominant representative of the Weyl orbit of k.
Weight dominantize(const RootSystem& rs, Weight k);
Weight antidominantize(const RootSystem& rs, Weight k);

// Coefficients of d over the simple roots, or nullopt when d is not in their
// span. Exact rationals.
std::optional<std::vector<Rat>> root_coords(const RootSystem& rs, const Weight& d);

// d is a nonnegative *integer* combination of the simple roots.
bool in_positive_root_lattice(const RootSystem& rs, const Weight& d);

// Sum of simple-root coefficients; requires d in the positive root lattice.
long long root_height(const RootSystem& rs, const Weight& d);

// Dynkin labels <k, alpha^vee> over the simple roots. Throws
// std::invalid_argument when any label is not an integer.
std::vector<long long> e_to_dynkin(const RootSystem& rs, const Weight& k);

// Highest weight from Dynkin labels (primary systems only). For series A the
// representative with last coordinate 0 is produced.
Weight dynkin_to_e(const RootSystem& rs, const std::vector<long long>& labels);

// Weyl dimension formula, exact. Requires hw dominant integral.
long long weyl_dim(const RootSystem& rs, const Weight& hw);

}  // namespace liebranch

#endif

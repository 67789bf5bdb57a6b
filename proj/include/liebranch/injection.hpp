#ifndef LIEBRANCH_INJECTION_HPP
#define LIEBRANCH_INJECTION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebranch/formal.hpp"
#include "liebranch/rootsystem.hpp"

namespace liebranch {

/*
  Regular maximal reductive embeddings gt (+) u(1) in g for the classical
  series. Seven families are supported:

    AtoA :  A_{n-1} (+) u(1)  in  A_n          complement { e_i - e_{n+1} }
    BtoB :  B_{n-1} (+) u(1)  in  B_n          complement { e_1, e_1 +- e_j }
    CtoC :  C_{n-1} (+) u(1)  in  C_n          complement { 2e_1, e_1 +- e_j }
    DtoD :  D_{n-1} (+) u(1)  in  D_n          complement { e_1 +- e_j }
    AtoB :  A_{n-1} (+) u(1)  in  B_n          complement { e_i, e_j + e_k }
    AtoC :  A_{n-1} (+) u(1)  in  C_n          complement { 2e_i, e_j + e_k }
    AtoD :  A_{n-1} (+) u(1)  in  D_n          complement { e_j + e_k }

  The level vector epsilon grades the weight lattice for the recursion and
  doubles as the u(1) charge functional: every nonempty subset sum of the
  complement has strictly positive level, which is what makes the fan
  recursion well-founded.
*/

enum class Family : int { AtoA, BtoB, CtoC, DtoD, AtoB, AtoC, AtoD };

std::string family_name(Family f);

struct Injection {
  Family family;
  int n = 0;           // rank of the ambient algebra
  RootSystem g;        // ambient algebra
  RootSystem sub;      // semisimple part of the subalgebra, embedded
  std::vector<Weight> complement_roots;  // Delta \ Delta~, in g's coordinates
  Weight level_vector;                   // epsilon; also the charge functional
};

// Minimum ranks: 2 everywhere except DtoD which needs n >= 3.
Injection build_injection(Family f, int n);

Rat charge_of(const Injection& inj, const Weight& w);

// Omega: all subset sums of the complement roots. Value = (number of odd
// subsets, number of even subsets) producing the sum; the sign of a k-subset
// is (-1)^{k+1}, so odd subsets carry +, even ones -. The empty subset is
// counted at zero. Guarded at |complement| <= 24.
using OmegaSet = std::map<Weight, std::pair<long long, long long>>;
OmegaSet omega_set(const Injection& inj);

struct XiEntry {
  Weight w;
  int sign = 0;  // +1 / -1; 0 for the zero entry
  std::vector<long long> labels;  // subalgebra Dynkin labels
  Rat charge;
};

// Entries sorted by (charge, weight lex); zero entry always first.
struct XiSet {
  std::vector<XiEntry> entries;
  bool operator==(const XiSet& o) const;
};

// Route 1: dominant subset sums of Omega, sign-cancelled, then reduced to the
// dominance-maximal entries within each u(1) charge.
XiSet xi_set_via_omega(const Injection& inj);

// Route 2: closed form (ordered partial sums for the X -> X families and
// A -> A; the doubling/shift construction for A -> B/C/D).
XiSet xi_set_closed_form(const Injection& inj);

// Route 3: the literal reference-table rows for n <= 6, used as test
// fixtures. `labels` is absent where the printed generic pattern does not
// specialize to the rank. `complete` says the rows cover the whole set.
struct XiTableRow {
  Weight w;  // ambient coordinates
  std::optional<std::vector<long long>> labels;
  long long charge = 0;
  int sign = 0;
};
struct XiTable {
  std::vector<XiTableRow> rows;
  bool complete = false;
};
XiTable xi_table_reference(Family f, int n);

// The fan polynomial prod_{complement} (1 - e^{-alpha}) in the normal form
// 1 - sum_gamma sign(gamma) mult(gamma) e^{-gamma}; depth is the maximal
// level of a fan weight.
struct Fan {
  FormalElement poly;
  long long depth = 0;
};

Fan fan_direct(const Injection& inj);

// Assembles the fan from the weight diagrams of the Xi entries and verifies
// it against fan_direct (InternalError on the first differing weight) unless
// check_against_direct is false.
Fan fan_via_xi(const Injection& inj, const XiSet& xi, bool check_against_direct = true);

// Recursion steps (gamma, sign(gamma)*mult(gamma)) for gamma != 0, sorted by
// (level, lex).
std::vector<std::pair<Weight, long long>> fan_steps(const Injection& inj, const Fan& fan);

}  // namespace liebranch

#endif

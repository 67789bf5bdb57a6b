#include "liebranch/rootsystem.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liebranch/errors.hpp"

namespace liebranch {

namespace {

constexpr long long kWeylGuard = 10'000'000;

Weight basis_vec(int dim, int i, Rat v = Rat(1)) {
  Weight w = Weight::zero(dim);
  w[i] = v;
  return w;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// positive roots of the series on window [lo, lo+rank) (+1 column for A),
// in a fixed deterministic order
std::vector<Weight> make_positive_roots(Series s, int rank, int dim, int lo) {
  std::vector<Weight> roots;
  const int m = (s == Series::A) ? rank + 1 : rank;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Weight w = Weight::zero(dim);
      w[lo + i] = 1;
      w[lo + j] = -1;
      roots.push_back(w);
    }
  if (s == Series::A) return roots;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Weight w = Weight::zero(dim);
      w[lo + i] = 1;
      w[lo + j] = 1;
      roots.push_back(w);
    }
  if (s == Series::B)
    for (int i = 0; i < m; ++i) roots.push_back(basis_vec(dim, lo + i));
  if (s == Series::C)
    for (int i = 0; i < m; ++i) roots.push_back(basis_vec(dim, lo + i, Rat(2)));
  return roots;
}

std::vector<Weight> make_simple_roots(Series s, int rank, int dim, int lo) {
  std::vector<Weight> roots;
  const int m = (s == Series::A) ? rank + 1 : rank;
  for (int i = 0; i + 1 < m; ++i) {
    Weight w = Weight::zero(dim);
    w[lo + i] = 1;
    w[lo + i + 1] = -1;
    roots.push_back(w);
  }
  switch (s) {
    case Series::A:
      break;
    case Series::B:
      roots.push_back(basis_vec(dim, lo + m - 1));
      break;
    case Series::C:
      roots.push_back(basis_vec(dim, lo + m - 1, Rat(2)));
      break;
    case Series::D: {
      Weight w = Weight::zero(dim);
      w[lo + m - 2] = 1;
      w[lo + m - 1] = 1;
      roots.push_back(w);
      break;
    }
  }
  return roots;
}

Weight half_sum(const std::vector<Weight>& roots, int dim) {
  Weight s = Weight::zero(dim);
  for (const Weight& r : roots) s += r;
  for (Rat& x : s.c) x /= 2;
  return s;
}

RootSystem make_system(Series s, int rank, int dim, int lo, bool embedded) {
  if (rank < 1)
    throw std::invalid_argument("rank must be >= 1");
  if (s == Series::D && rank < 2)
    throw std::invalid_argument("series D needs rank >= 2");
  RootSystem rs;
  rs.series = s;
  rs.rank = rank;
  rs.dim = dim;
  rs.lo = lo;
  rs.hi = lo + ((s == Series::A) ? rank + 1 : rank);
  rs.embedded = embedded;
  if (rs.hi > dim)
    throw std::invalid_argument("root system does not fit the ambient space");
  rs.positive_roots = make_positive_roots(s, rank, dim, lo);
  rs.simple_roots = make_simple_roots(s, rank, dim, lo);
  rs.rho = half_sum(rs.positive_roots, dim);
  return rs;
}

std::vector<Weight> make_fundamental_weights(const RootSystem& rs) {
  const int n = rs.rank;
  const int dim = rs.dim;
  std::vector<Weight> fw;
  auto prefix = [&](int k, Rat v) {  // v * (e_1 + ... + e_k)
    Weight w = Weight::zero(dim);
    for (int i = 0; i < k; ++i) w[i] = v;
    return w;
  };
  switch (rs.series) {
    case Series::A:
      for (int i = 1; i <= n; ++i) fw.push_back(prefix(i, Rat(1)));
      break;
    case Series::B:
      for (int i = 1; i < n; ++i) fw.push_back(prefix(i, Rat(1)));
      fw.push_back(prefix(n, Rat(1, 2)));
      break;
    case Series::C:
      for (int i = 1; i <= n; ++i) fw.push_back(prefix(i, Rat(1)));
      break;
    case Series::D: {
      for (int i = 1; i <= n - 2; ++i) fw.push_back(prefix(i, Rat(1)));
      Weight wm = prefix(n, Rat(1, 2));
      wm[n - 1] = Rat(-1, 2);
      fw.push_back(wm);
      fw.push_back(prefix(n, Rat(1, 2)));
      break;
    }
  }
  return fw;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int perm_parity(const std::vector<int32_t>& p, int lo, int hi) {
  int inv = 0;
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j < hi; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
  }
  return '?';
}

long long RootSystem::weyl_order() const {
  const int m = hi - lo;
  switch (series) {
    case Series::A: return factorial(m);
    case Series::B:
    case Series::C: return factorial(m) << m;
    case Series::D: return factorial(m) << (m - 1);
  }
  return 0;
}

RootSystem build_root_system(Series s, int rank) {
  const int dim = (s == Series::A) ? rank + 1 : rank;
  RootSystem rs = make_system(s, rank, dim, 0, false);
  rs.fundamental_weights = make_fundamental_weights(rs);
  return rs;
}

RootSystem build_embedded_root_system(Series s, int rank, int ambient_dim, int lo) {
  return make_system(s, rank, ambient_dim, lo, true);
}

void for_each_weyl(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn) {
  if (rs.weyl_order() > kWeylGuard)
    throw GuardError("Weyl group too large: |W| = " + std::to_string(rs.weyl_order()) +
                     " exceeds guard " + std::to_string(kWeylGuard));
  const int m = rs.hi - rs.lo;
  const bool flips = rs.series != Series::A;
  const bool even_only = rs.series == Series::D;

  WeylElement w;
  w.perm.resize(rs.dim);
  w.flip.assign(rs.dim, 1);
  std::iota(w.perm.begin(), w.perm.end(), 0);

  std::vector<int32_t> window(m);
  std::iota(window.begin(), window.end(), rs.lo);
  do {
    for (int i = 0; i < m; ++i) w.perm[rs.lo + i] = window[i];
    const int pp = perm_parity(w.perm, rs.lo, rs.hi);
    const uint32_t nmasks = flips ? (1u << m) : 1u;
    for (uint32_t mask = 0; mask < nmasks; ++mask) {
      const int bits = __builtin_popcount(mask);
      if (even_only && (bits & 1)) continue;
      for (int i = 0; i < m; ++i)
        w.flip[rs.lo + i] = (mask >> i) & 1 ? -1 : 1;
      w.det = (bits & 1) ? -pp : pp;
      fn(w);
    }
  } while (std::next_permutation(window.begin(), window.end()));
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs) {
  std::vector<WeylElement> out;
  out.reserve(static_cast<size_t>(rs.weyl_order()));
  for_each_weyl(rs, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

Weight apply(const WeylElement& w, const Weight& k) {
  if (static_cast<int>(w.perm.size()) != k.dim())
    throw std::invalid_argument("Weyl element dimension mismatch");
  Weight r = Weight::zero(k.dim());
  for (int i = 0; i < k.dim(); ++i) {
    r[i] = k[w.perm[i]];
    if (w.flip[i] < 0) r[i] = -r[i];
  }
  return r;
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  const size_t d = w1.perm.size();
  WeylElement r;
  r.perm.resize(d);
  r.flip.resize(d);
  for (size_t i = 0; i < d; ++i) {
    r.perm[i] = w2.perm[w1.perm[i]];
    r.flip[i] = static_cast<int8_t>(w1.flip[i] * w2.flip[w1.perm[i]]);
  }
  r.det = w1.det * w2.det;
  return r;
}

bool is_dominant(const RootSystem& rs, const Weight& k) {
  for (const Weight& a : rs.simple_roots)
    if (dot(k, a) < 0) return false;
  return true;
}

Weight dominantize(const RootSystem& rs, Weight k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Weight& a : rs.simple_roots) {
      Rat p = dot(k, a);
      if (p < 0) {
        Rat coef = Rat(2) * p / dot(a, a);
        for (int i = 0; i < k.dim(); ++i) k[i] -= a[i] * coef;
        changed = true;
      }
    }
  }
  return k;
}

Weight antidominantize(const RootSystem& rs, Weight k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Weight& a : rs.simple_roots) {
      Rat p = dot(k, a);
      if (p > 0) {
        Rat coef = Rat(2) * p / dot(a, a);
        for (int i = 0; i < k.dim(); ++i) k[i] -= a[i] * coef;
        changed = true;
      }
    }
  }
  return k;
}

std::optional<std::vector<Rat>> root_coords(const RootSystem& rs, const Weight& d) {
  if (d.dim() != rs.dim) throw std::invalid_argument("root_coords: dimension mismatch");
  for (int i = 0; i < rs.dim; ++i)
    if ((i < rs.lo || i >= rs.hi) && d[i] != 0) return std::nullopt;
  const int m = rs.hi - rs.lo;
  std::vector<Rat> c(static_cast<size_t>(rs.rank), Rat(0));
  // prefix sums P_j = d_lo + ... + d_{lo+j}
  std::vector<Rat> P(static_cast<size_t>(m));
  Rat run(0);
  for (int j = 0; j < m; ++j) {
    run += d[rs.lo + j];
    P[j] = run;
  }
  switch (rs.series) {
    case Series::A:
      if (run != 0) return std::nullopt;
      for (int j = 0; j < m - 1; ++j) c[j] = P[j];
      break;
    case Series::B:
      for (int j = 0; j < m; ++j) c[j] = P[j];
      break;
    case Series::C:
      for (int j = 0; j < m - 1; ++j) c[j] = P[j];
      c[m - 1] = P[m - 1] / 2;
      break;
    case Series::D:
      for (int j = 0; j < m - 2; ++j) c[j] = P[j];
      c[m - 1] = P[m - 1] / 2;               // coefficient of e_{m-2}+e_{m-1}
      c[m - 2] = P[m - 2] - P[m - 1] / 2;    // coefficient of e_{m-2}-e_{m-1}
      break;
  }
  return c;
}

bool in_positive_root_lattice(const RootSystem& rs, const Weight& d) {
  auto c = root_coords(rs, d);
  if (!c) return false;
  for (const Rat& x : *c)
    if (x < 0 || !is_integer(x)) return false;
  return true;
}

long long root_height(const RootSystem& rs, const Weight& d) {
  auto c = root_coords(rs, d);
  if (!c) throw std::invalid_argument("root_height: not in the root span");
  Rat h(0);
  for (const Rat& x : *c) h += x;
  return to_integer(h);
}

std::vector<long long> e_to_dynkin(const RootSystem& rs, const Weight& k) {
  std::vector<long long> labels;
  labels.reserve(rs.simple_roots.size());
  for (const Weight& a : rs.simple_roots) {
    Rat v = Rat(2) * dot(k, a) / dot(a, a);
    if (!is_integer(v))
      throw std::invalid_argument("weight " + to_string(k) + " is not in the lattice");
    labels.push_back(v.numerator());
  }
  return labels;
}

Weight dynkin_to_e(const RootSystem& rs, const std::vector<long long>& labels) {
  if (rs.embedded)
    throw std::invalid_argument("dynkin_to_e: embedded system has no fundamental weights");
  if (labels.size() != static_cast<size_t>(rs.rank))
    throw std::invalid_argument("expected " + std::to_string(rs.rank) + " Dynkin labels");
  Weight w = Weight::zero(rs.dim);
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.dim; ++j) w[j] += rs.fundamental_weights[i][j] * labels[i];
  }
  return w;
}

long long weyl_dim(const RootSystem& rs, const Weight& hw) {
  for (const Weight& a : rs.simple_roots) {
    Rat v = Rat(2) * dot(hw, a) / dot(a, a);
    if (!is_integer(v) || v < 0)
      throw std::invalid_argument("weyl_dim: weight " + to_string(hw) +
                                  " is not dominant integral");
  }
  // product of <hw+rho, a> / <rho, a> with running reduction
  __int128 num = 1, den = 1;
  Weight shifted = hw + rs.rho;
  for (const Weight& a : rs.positive_roots) {
    Rat p = dot(shifted, a);
    Rat q = dot(rs.rho, a);
    num *= static_cast<__int128>(p.numerator()) * q.denominator();
    den *= static_cast<__int128>(q.numerator()) * p.denominator();
    __int128 g = gcd128(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > static_cast<__int128>(1) << 100)
      throw GuardError("weyl_dim overflow guard");
  }
  if (den != 1)
    throw InternalError("weyl_dim: non-integral product");
  if (num > 4'000'000'000'000'000'000LL)
    throw GuardError("weyl_dim exceeds 4e18");
  return static_cast<long long>(num);
}

}  // namespace liebranch

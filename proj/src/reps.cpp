#include "liebranch/reps.hpp"

#include <algorithm>
#include <stdexcept>

#include "liebranch/errors.hpp"

namespace liebranch {

namespace {

constexpr long long kDimGuard = 1'000'000;

void require_dominant_integral(const RootSystem& rs, const Weight& hw) {
  std::vector<long long> labels = e_to_dynkin(rs, hw);  // throws on non-lattice
  for (long long a : labels)
    if (a < 0)
      throw std::invalid_argument("weight " + to_string(hw) + " is not dominant");
}

// largest value <= cap congruent to anchor mod 1
Rat align_down(const Rat& cap, const Rat& anchor) {
  Rat frac = anchor - Rat(rat_floor(anchor));
  Rat base = cap - frac;
  return Rat(rat_floor(base)) + frac;
}

}  // namespace

FormalElement AnomalousSet::as_formal(int dim) const {
  FormalElement e(dim);
  for (const auto& [w, s] : entries) e.add_term(w, s);
  return e;
}

AnomalousSet anomalous_weights(const RootSystem& rs, const Weight& hw) {
  require_dominant_integral(rs, hw);
  AnomalousSet out;
  const Weight shifted = hw + rs.rho;
  for_each_weyl(rs, [&](const WeylElement& w) {
    auto [it, fresh] = out.entries.emplace(apply(w, shifted) - rs.rho, w.det);
    if (!fresh)
      throw InternalError("anomalous weights collide at " + to_string(it->first));
  });
  return out;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& hw) {
  const int m = rs.hi - rs.lo;
  std::vector<Rat> hwW(static_cast<size_t>(m));
  std::vector<Rat> hwPrefix(static_cast<size_t>(m));
  Rat run(0);
  for (int i = 0; i < m; ++i) {
    hwW[i] = hw[rs.lo + i];
    run += hwW[i];
    hwPrefix[i] = run;
  }
  const Rat total = run;

  std::vector<Weight> out;
  std::vector<Rat> cur(static_cast<size_t>(m));

  auto emit = [&](const std::vector<Rat>& w) {
    Weight k = hw;
    for (int i = 0; i < m; ++i) k[rs.lo + i] = w[i];
    if (in_positive_root_lattice(rs, hw - k)) out.push_back(k);
  };

  // recursive enumeration of window coordinates with prefix-sum caps
  std::function<void(int, Rat)> rec = [&](int i, Rat done) {
    if (i == m) {
      emit(cur);
      return;
    }
    Rat cap = hwPrefix[i] - done;                    // prefix constraint
    if (i > 0 && cur[i - 1] < cap) cap = cur[i - 1];  // dominance
    const bool last_d = (rs.series == Series::D && i == m - 1);
    Rat low;
    switch (rs.series) {
      case Series::A: {
        // remaining coordinates are <= cur[i] and must sum to total-done
        Rat rem = total - done;
        low = rem / (m - i);
        break;
      }
      case Series::B:
      case Series::C:
        low = Rat(0);
        break;
      case Series::D:
        low = last_d ? -cur[i - 1] : Rat(0);
        break;
    }
    for (Rat v = align_down(cap, hwW[i]); v >= low; v -= 1) {
      cur[i] = v;
      rec(i + 1, done + v);
    }
  };
  rec(0, Rat(0));

  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    long long ha = root_height(rs, hw - a), hb = root_height(rs, hw - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

WeightDiagram freudenthal(const RootSystem& rs, const Weight& hw) {
  require_dominant_integral(rs, hw);
  const long long dim = weyl_dim(rs, hw);
  if (dim > kDimGuard)
    throw GuardError("freudenthal: dim " + std::to_string(dim) + " exceeds guard " +
                     std::to_string(kDimGuard));

  std::vector<Weight> doms = dominant_weights_below(rs, hw);

  std::vector<long long> root_ht;
  root_ht.reserve(rs.positive_roots.size());
  for (const Weight& a : rs.positive_roots) root_ht.push_back(root_height(rs, a));

  const Weight top = hw + rs.rho;
  const Rat top_norm = dot(top, top);

  std::map<Weight, long long> mdom;
  for (const Weight& k : doms) {
    if (k == hw) {
      mdom.emplace(k, 1);
      continue;
    }
    const long long h = root_height(rs, hw - k);
    Rat num(0);
    for (size_t ai = 0; ai < rs.positive_roots.size(); ++ai) {
      const Weight& a = rs.positive_roots[ai];
      const long long kmax = h / root_ht[ai];
      Weight kk = k;
      for (long long step = 1; step <= kmax; ++step) {
        kk += a;
        auto it = mdom.find(dominantize(rs, kk));
        if (it != mdom.end()) num += Rat(it->second) * dot(kk, a);
      }
    }
    const Weight sk = k + rs.rho;
    Rat den = top_norm - dot(sk, sk);
    if (den <= 0)
      throw InternalError("freudenthal: nonpositive denominator at " + to_string(k));
    Rat val = Rat(2) * num / den;
    if (!is_integer(val) || val <= 0)
      throw InternalError("freudenthal: multiplicity " + rat_to_string(val) + " at " +
                          to_string(k));
    mdom.emplace(k, to_integer(val));
  }

  WeightDiagram d;
  d.highest = hw;
  for (const auto& [k, v] : mdom) {
    for_each_weyl(rs, [&](const WeylElement& w) { d.mult[apply(w, k)] = v; });
  }
  long long total = 0;
  for (const auto& [k, v] : d.mult) total += v;
  if (total != dim)
    throw InternalError("freudenthal: diagram size " + std::to_string(total) +
                        " != Weyl dimension " + std::to_string(dim));
  d.total = total;
  return d;
}

FormalElement character(const RootSystem& rs, const Weight& hw) {
  WeightDiagram d = freudenthal(rs, hw);
  FormalElement e(rs.dim);
  for (const auto& [k, v] : d.mult) e.terms.emplace(k, v);
  return e;
}

}  // namespace liebranch

#include "liebranch/branching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "liebranch/errors.hpp"

namespace liebranch {

namespace {

constexpr long long kPartitionLevelGuard = 1024;

void require_dominant_integral_g(const Injection& inj, const Weight& lam) {
  for (long long a : e_to_dynkin(inj.g, lam))
    if (a < 0)
      throw std::invalid_argument("highest weight " + to_string(lam) +
                                  " is not dominant for the ambient algebra");
}

long long integer_level(const Injection& inj, const Weight& lam, const Weight& k) {
  Rat l = dot(lam - k, inj.level_vector);
  if (!is_integer(l))
    throw InternalError("non-integer level " + rat_to_string(l) + " at " + to_string(k));
  return to_integer(l);
}

Rat align_down(const Rat& cap, const Rat& anchor) {
  Rat frac = anchor - Rat(rat_floor(anchor));
  return Rat(rat_floor(cap - frac)) + frac;
}

std::vector<long long> labels_of(const Injection& inj, const Weight& mu) {
  return e_to_dynkin(inj.sub, mu);
}

// ---------------------------------------------------------------------------
// candidate enumeration

// Nonincreasing window sequences with per-position prefix caps drawn from
// lam, residues matching lam's coordinates, plus the family's shape
// constraints. Exact root-lattice membership is checked at the leaf.
void enumerate_candidates(const Injection& inj, const Weight& lam, long long level,
                          std::vector<Weight>& out) {
  const RootSystem& g = inj.g;
  const RootSystem& sub = inj.sub;
  const int lo = sub.lo, hi = sub.hi;
  const int m = hi - lo;

  // ambient prefix sums of lam up to each window position
  std::vector<Rat> cap(static_cast<size_t>(m));
  {
    Rat run(0);
    for (int i = 0; i < lo; ++i) run += lam[i];
    for (int i = 0; i < m; ++i) {
      run += lam[lo + i];
      cap[static_cast<size_t>(i)] = run;
    }
  }

  Weight nu = lam;
  Rat fixed_before(0);  // sum of coordinates left of the window
  bool fixed_sum = false;
  Rat target_sum(0);

  switch (inj.family) {
    case Family::AtoA: {
      // coordinate n is pinned by the level, window sum is then fixed
      nu[g.dim - 1] = lam[g.dim - 1] + Rat(level);
      fixed_sum = true;
      target_sum = coord_sum(lam) - nu[g.dim - 1];
      break;
    }
    case Family::AtoB:
    case Family::AtoC:
    case Family::AtoD:
      fixed_sum = true;
      target_sum = coord_sum(lam) - Rat(level);
      break;
    case Family::BtoB:
    case Family::CtoC:
    case Family::DtoD:
      nu[0] = lam[0] - Rat(level);
      fixed_before = nu[0];
      break;
  }

  const bool sub_is_A = (sub.series == Series::A);
  const bool sub_is_D = (sub.series == Series::D);

  std::function<void(int, Rat)> rec = [&](int i, Rat done) {
    if (i == m) {
      if (fixed_sum && done - fixed_before != target_sum) return;
      if (in_positive_root_lattice(g, lam - nu)) out.push_back(nu);
      return;
    }
    Rat c = cap[static_cast<size_t>(i)] - done;
    if (i > 0 && nu[lo + i - 1] < c) c = nu[lo + i - 1];
    const bool last_d = (sub_is_D && i == m - 1);
    Rat low;
    if (sub_is_A) {
      // remaining window coordinates are <= v and must close the sum
      Rat rem = target_sum - (done - fixed_before);
      low = rem / (m - i);
    } else if (last_d) {
      low = -nu[lo + i - 1];
    } else {
      low = Rat(0);
    }
    if (fixed_sum && i == m - 1) {
      // final coordinate is determined
      Rat v = target_sum - (done - fixed_before);
      if (v > c) return;
      if (v - lam[lo + i] != Rat(rat_floor(v - lam[lo + i]))) return;  // residue
      nu[lo + i] = v;
      rec(i + 1, done + v);
      return;
    }
    for (Rat v = align_down(c, lam[lo + i]); v >= low; v -= 1) {
      nu[lo + i] = v;
      rec(i + 1, done + v);
    }
  };
  rec(0, fixed_before);
}

// ---------------------------------------------------------------------------
// shared engine state

struct Engine {
  const Injection& inj;
  Weight lam;
  bool prune_domain = false;
  AnomalousSet psi;
  std::vector<WeylElement> subW;
  long long depth = 0;
  std::map<Weight, long long> support;  // anomalous relative multiplicities
  std::vector<std::pair<Weight, long long>> recorded;

  Engine(const Injection& injection, const Weight& hw, bool prune)
      : inj(injection), lam(hw), prune_domain(prune) {
    require_dominant_integral_g(inj, lam);
    psi = anomalous_weights(inj.g, lam);
    subW = weyl_elements(inj.sub);
    depth = integer_level(inj, lam, antidominantize(inj.g, lam));
  }

  long long psi_at(const Weight& w) const {
    auto it = psi.entries.find(w);
    return it == psi.entries.end() ? 0 : it->second;
  }

  long long support_at(const Weight& w) const {
    auto it = support.find(w);
    return it == support.end() ? 0 : it->second;
  }

  // records a dominant weight and inserts its anomalous V-orbit
  void record(const Weight& mu, long long val, LevelTrace* lt) {
    recorded.emplace_back(mu, val);
    const Weight shifted = mu + inj.sub.rho;
    for (const WeylElement& v : subW) {
      Weight p = apply(v, shifted) - inj.sub.rho;
      if (prune_domain && p[0] < 0) continue;
      auto [it, fresh] = support.emplace(p, v.det * val);
      if (!fresh)
        throw InternalError("anomalous orbits collide at " + to_string(p));
      if (lt) lt->orbit_inserted.emplace_back(p, it->second);
    }
  }
};

BranchingResult make_result(const Injection& inj, const Weight& lam, const char* method,
                            std::vector<std::pair<Weight, long long>> recorded) {
  BranchingResult r;
  r.source_hw = lam;
  r.method = method;
  std::sort(recorded.begin(), recorded.end(),
            [&](const std::pair<Weight, long long>& a, const std::pair<Weight, long long>& b) {
              return TermOrder{}(term_key(inj, a.first), term_key(inj, b.first));
            });
  r.recorded = std::move(recorded);
  for (const auto& [mu, mult] : r.recorded) {
    auto [it, fresh] = r.terms.emplace(term_key(inj, mu), mult);
    (void)it;
    if (!fresh)
      throw InternalError("duplicate term for " + to_string(mu));
  }
  return r;
}

}  // namespace

Rat level_of(const Injection& inj, const Weight& lam, const Weight& k) {
  return dot(lam - k, inj.level_vector);
}

std::vector<Weight> candidate_weights(const Injection& inj, const Weight& lam, long long level) {
  std::vector<Weight> out;
  if (level >= 0) enumerate_candidates(inj, lam, level, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> term_labels(const Injection& inj, const Weight& mu) {
  return labels_of(inj, mu);
}

TermKey term_key(const Injection& inj, const Weight& mu) {
  return TermKey{labels_of(inj, mu), charge_of(inj, mu)};
}

BranchingResult branch_factorized(const Injection& inj, const Weight& lam, BranchTrace* trace,
                                  bool prune_domain) {
  if (prune_domain && inj.family != Family::AtoB)
    throw std::invalid_argument("domain pruning is only stated for the AtoB family");
  Engine eng(inj, lam, prune_domain);
  const Fan fan = fan_direct(inj);
  const auto steps = fan_steps(inj, fan);

  for (long long level = 0; level <= eng.depth; ++level) {
    LevelTrace lt;
    lt.level = level;
    for (const Weight& nu : candidate_weights(inj, lam, level)) {
      long long val = eng.psi_at(nu);
      for (const auto& [gamma, sm] : steps) val += sm * eng.support_at(nu + gamma);
      if (val < 0)
        throw InternalError("negative relative multiplicity " + std::to_string(val) +
                            " at dominant " + to_string(nu) + " (level " +
                            std::to_string(level) + ")");
      if (val > 0) eng.record(nu, val, trace ? &lt : nullptr);
      if (trace) lt.computed.emplace_back(nu, val, val > 0);
    }
    if (trace) trace->levels.push_back(std::move(lt));
  }
  return make_result(inj, lam, "fan", std::move(eng.recorded));
}

BranchingResult branch_unfactorized(const Injection& inj, const Weight& lam) {
  Engine eng(inj, lam, false);

  // probe steps (1-w)rho over W \ {e}, with det(w)
  std::vector<std::pair<Weight, int>> wsteps;
  for_each_weyl(inj.g, [&](const WeylElement& w) {
    Weight step = inj.g.rho - apply(w, inj.g.rho);
    if (step.is_zero()) return;
    wsteps.emplace_back(std::move(step), w.det);
  });
  // delta probes (1-v)rho~ over V, with det(v)
  std::vector<std::pair<Weight, int>> vsteps;
  for (const WeylElement& v : eng.subW)
    vsteps.emplace_back(inj.sub.rho - apply(v, inj.sub.rho), v.det);

  // all candidates, processed by increasing height of lam - nu so that every
  // probe (which adds a nonzero element of the positive root lattice) refers
  // to already-final values
  std::vector<std::pair<long long, Weight>> cands;
  for (long long level = 0; level <= eng.depth; ++level)
    for (const Weight& nu : candidate_weights(inj, lam, level))
      cands.emplace_back(root_height(inj.g, lam - nu), nu);
  std::sort(cands.begin(), cands.end());

  for (const auto& [h, nu] : cands) {
    (void)h;
    long long val = 0;
    for (const auto& [step, det] : vsteps) val += det * eng.psi_at(nu + step);
    for (const auto& [step, det] : wsteps) val -= det * eng.support_at(nu + step);
    if (val < 0)
      throw InternalError("negative relative multiplicity " + std::to_string(val) +
                          " at dominant " + to_string(nu));
    if (val > 0) eng.record(nu, val, nullptr);
  }
  return make_result(inj, lam, "weyl", std::move(eng.recorded));
}

namespace {

struct PartitionCounter {
  const Injection& inj;
  std::vector<long long> root_levels;
  // memo[i]: counts using only the first i complement roots
  std::vector<std::map<Weight, long long>> memo;

  explicit PartitionCounter(const Injection& injection) : inj(injection) {
    for (const Weight& a : inj.complement_roots)
      root_levels.push_back(to_integer(dot(a, inj.level_vector)));
    memo.resize(inj.complement_roots.size() + 1);
  }

  long long count(const Weight& xi) {
    Rat lvl = dot(xi, inj.level_vector);
    if (!is_integer(lvl)) return 0;
    if (to_integer(lvl) > kPartitionLevelGuard)
      throw GuardError("partition function level " + rat_to_string(lvl) +
                       " exceeds guard " + std::to_string(kPartitionLevelGuard));
    return count_rec(inj.complement_roots.size(), xi);
  }

  long long count_rec(size_t i, const Weight& xi) {
    Rat lvl = dot(xi, inj.level_vector);
    if (lvl < 0) return 0;
    if (xi.is_zero()) return 1;
    if (i == 0) return 0;
    auto it = memo[i].find(xi);
    if (it != memo[i].end()) return it->second;
    long long total = 0;
    Weight rest = xi;
    for (long long k = 0; dot(rest, inj.level_vector) >= 0; ++k) {
      if (k > 0) total += count_rec(i - 1, rest);
      else total += count_rec(i - 1, rest);
      rest -= inj.complement_roots[i - 1];
    }
    memo[i].emplace(xi, total);
    return total;
  }
};

}  // namespace

long long kostant_heckman(const Injection& inj, const Weight& xi) {
  PartitionCounter counter(inj);
  return counter.count(xi);
}

long long kostant_heckman_recursive(const Injection& inj, const Weight& xi) {
  // probe steps (w-1)rho over W \ {e}
  std::vector<std::pair<Weight, int>> steps;
  for_each_weyl(inj.g, [&](const WeylElement& w) {
    Weight step = apply(w, inj.g.rho) - inj.g.rho;
    if (step.is_zero()) return;
    steps.emplace_back(std::move(step), w.det);
  });
  std::map<Weight, int> delta;  // rho - v rho with det(v)
  for (const WeylElement& v : weyl_elements(inj.sub)) {
    auto [it, fresh] = delta.emplace(inj.g.rho - apply(v, inj.g.rho), v.det);
    (void)it;
    if (!fresh) throw InternalError("kostant_heckman_recursive: delta points collide");
  }

  std::map<Weight, long long> memo;
  std::function<long long(const Weight&)> rec = [&](const Weight& w) -> long long {
    auto coords = root_coords(inj.g, w);
    if (!coords) return 0;
    for (const Rat& c : *coords)
      if (c < 0 || !is_integer(c)) return 0;  // outside the cone: K vanishes
    if (w.is_zero()) return 1;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    long long val = 0;
    auto dit = delta.find(w);
    if (dit != delta.end()) val += dit->second;
    for (const auto& [step, det] : steps) val -= det * rec(w + step);
    memo.emplace(w, val);
    return val;
  };
  return rec(xi);
}

BranchingResult branch_via_partition(const Injection& inj, const Weight& lam) {
  require_dominant_integral_g(inj, lam);
  PartitionCounter counter(inj);
  const long long depth = integer_level(inj, lam, antidominantize(inj.g, lam));
  const Weight top = lam + inj.g.rho;

  std::vector<std::pair<Weight, int>> images;  // w(lam+rho) - rho with det(w)
  for_each_weyl(inj.g, [&](const WeylElement& w) {
    images.emplace_back(apply(w, top) - inj.g.rho, w.det);
  });

  std::vector<std::pair<Weight, long long>> recorded;
  for (long long level = 0; level <= depth; ++level) {
    for (const Weight& mu : candidate_weights(inj, lam, level)) {
      long long n = 0;
      for (const auto& [img, det] : images) n += det * counter.count(img - mu);
      if (n < 0)
        throw InternalError("negative multiplicity " + std::to_string(n) +
                            " at dominant " + to_string(mu));
      if (n > 0) recorded.emplace_back(mu, n);
    }
  }
  return make_result(inj, lam, "partition", std::move(recorded));
}

BranchingResult branch_oracle(const Injection& inj, const Weight& lam) {
  require_dominant_integral_g(inj, lam);
  WeightDiagram diag = freudenthal(inj.g, lam);
  std::map<Weight, long long> rem = diag.mult;

  std::vector<std::pair<Weight, long long>> recorded;
  while (!rem.empty()) {
    // charge-maximal slice
    Rat maxq = charge_of(inj, rem.begin()->first);
    for (const auto& [w, m] : rem) {
      (void)m;
      Rat q = charge_of(inj, w);
      if (maxq < q) maxq = q;
    }
    std::vector<Weight> slice;
    for (const auto& [w, m] : rem) {
      (void)m;
      if (charge_of(inj, w) == maxq) slice.push_back(w);
    }
    // dominance-maximal, then lexicographically greatest
    Weight pick;
    bool have = false;
    for (const Weight& w : slice) {
      bool dominated = false;
      for (const Weight& o : slice) {
        if (o == w) continue;
        auto c = root_coords(inj.sub, o - w);
        if (!c) continue;
        bool nonneg = true;
        for (const Rat& x : *c)
          if (x < 0) { nonneg = false; break; }
        if (nonneg) { dominated = true; break; }
      }
      if (!dominated && (!have || pick < w)) {
        pick = w;
        have = true;
      }
    }
    if (!have || !is_dominant(inj.sub, pick))
      throw InternalError("oracle: maximal remaining weight " +
                          (have ? to_string(pick) : std::string("<none>")) +
                          " is not dominant for the subalgebra");
    long long mult = rem.at(pick);
    if (mult <= 0)
      throw InternalError("oracle: nonpositive multiplicity at " + to_string(pick));
    WeightDiagram sd = freudenthal(inj.sub, pick);
    for (const auto& [w, m] : sd.mult) {
      auto it = rem.find(w);
      long long nv = (it == rem.end() ? 0 : it->second) - mult * m;
      if (nv < 0)
        throw InternalError("oracle: remainder went negative at " + to_string(w));
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        if (it != rem.end()) it->second = nv;
        else rem.emplace(w, nv);
      }
    }
    recorded.emplace_back(pick, mult);
  }
  return make_result(inj, lam, "oracle", std::move(recorded));
}

CheckReport verify_result(const Injection& inj, const Weight& lam, const BranchingResult& r) {
  CheckReport rep;

  // (a) dimension sum rule
  rep.dimension_expected = weyl_dim(inj.g, lam);
  rep.dimension_sum = 0;
  for (const auto& [mu, mult] : r.recorded)
    rep.dimension_sum += mult * weyl_dim(inj.sub, mu);
  rep.dimension_ok = (rep.dimension_sum == rep.dimension_expected);

  // (b) pointwise multiplicity identity over the whole diagram
  {
    WeightDiagram gd = freudenthal(inj.g, lam);
    std::map<Weight, long long> acc;
    for (const auto& [mu, mult] : r.recorded) {
      WeightDiagram sd = freudenthal(inj.sub, mu);
      for (const auto& [w, m] : sd.mult) acc[w] += mult * m;
    }
    rep.pointwise_ok = true;
    for (const auto& [w, m] : gd.mult) {
      auto it = acc.find(w);
      long long have = it == acc.end() ? 0 : it->second;
      if (have != m) {
        rep.pointwise_ok = false;
        rep.pointwise_detail = "at " + to_string(w) + ": diagram " + std::to_string(m) +
                               ", terms give " + std::to_string(have);
        break;
      }
    }
    if (rep.pointwise_ok && acc.size() != gd.mult.size()) {
      for (const auto& [w, m] : acc)
        if (!gd.mult.count(w) && m != 0) {
          rep.pointwise_ok = false;
          rep.pointwise_detail = "terms cover " + to_string(w) + " outside the diagram";
          break;
        }
    }
  }

  // (c) reflection symmetry of the term table for self-conjugate lam
  rep.symmetry_applicable =
      e_to_dynkin(inj.g, dominantize(inj.g, -lam)) == e_to_dynkin(inj.g, lam);
  rep.symmetry_ok = true;
  if (rep.symmetry_applicable) {
    for (const auto& [mu, mult] : r.recorded) {
      Weight conj = dominantize(inj.sub, -mu);
      auto it = r.terms.find(term_key(inj, conj));
      if (it == r.terms.end() || it->second != mult) {
        rep.symmetry_ok = false;
        rep.symmetry_detail = "term at " + to_string(mu) + " has no mirror";
        break;
      }
    }
  }
  return rep;
}

}  // namespace liebranch

#include "liebranch/injection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liebranch/errors.hpp"
#include "liebranch/reps.hpp"

namespace liebranch {

namespace {

constexpr int kOmegaRootGuard = 24;

Weight evec(int dim, int i, long long v = 1) {
  Weight w = Weight::zero(dim);
  w[i] = Rat(v);
  return w;
}

Weight ones(int dim, int upto) {  // e_1 + ... + e_upto
  Weight w = Weight::zero(dim);
  for (int i = 0; i < upto; ++i) w[i] = 1;
  return w;
}

void validate_injection(const Injection& inj) {
  std::set<Weight> all(inj.g.positive_roots.begin(), inj.g.positive_roots.end());
  std::set<Weight> seen;
  for (const Weight& a : inj.sub.positive_roots)
    if (!all.count(a) || !seen.insert(a).second)
      throw InternalError("subalgebra root " + to_string(a) + " not embedded cleanly");
  for (const Weight& a : inj.complement_roots) {
    if (!all.count(a) || !seen.insert(a).second)
      throw InternalError("complement root " + to_string(a) + " not embedded cleanly");
    Rat lvl = dot(a, inj.level_vector);
    if (!is_integer(lvl) || lvl < 1)
      throw InternalError("complement root " + to_string(a) +
                          " has nonpositive level " + rat_to_string(lvl));
  }
  if (seen.size() != all.size())
    throw InternalError("complement and subalgebra roots do not cover the root system");
  if (!is_dominant(inj.g, inj.level_vector))
    throw InternalError("level vector is not dominant");
}

// dominance of the subalgebra: a >= b when a-b is a nonnegative rational
// combination of the subalgebra's simple roots
bool sub_dominates(const RootSystem& sub, const Weight& a, const Weight& b) {
  auto c = root_coords(sub, a - b);
  if (!c) return false;
  for (const Rat& x : *c)
    if (x < 0) return false;
  return true;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::AtoA: return "AtoA";
    case Family::BtoB: return "BtoB";
    case Family::CtoC: return "CtoC";
    case Family::DtoD: return "DtoD";
    case Family::AtoB: return "AtoB";
    case Family::AtoC: return "AtoC";
    case Family::AtoD: return "AtoD";
  }
  return "?";
}

bool XiSet::operator==(const XiSet& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].w != o.entries[i].w || entries[i].sign != o.entries[i].sign)
      return false;
  return true;
}

Injection build_injection(Family f, int n) {
  const int min_rank = (f == Family::DtoD) ? 3 : 2;
  if (n < min_rank)
    throw std::invalid_argument(family_name(f) + " needs rank >= " +
                                std::to_string(min_rank));
  Injection inj;
  inj.family = f;
  inj.n = n;
  switch (f) {
    case Family::AtoA: {
      inj.g = build_root_system(Series::A, n);
      inj.sub = build_embedded_root_system(Series::A, n - 1, n + 1, 0);
      for (int i = 0; i < n; ++i) {
        Weight r = evec(n + 1, i);
        r[n] = -1;
        inj.complement_roots.push_back(r);
      }
      inj.level_vector = ones(n + 1, n);
      break;
    }
    case Family::BtoB:
    case Family::CtoC:
    case Family::DtoD: {
      Series s = (f == Family::BtoB) ? Series::B : (f == Family::CtoC) ? Series::C : Series::D;
      inj.g = build_root_system(s, n);
      inj.sub = build_embedded_root_system(s, n - 1, n, 1);
      // Ordered as in the closed-form construction:
      // e1+e2,...,e1+en, (e1 | 2e1 | nothing), e1-e2,...,e1-en
      for (int j = 1; j < n; ++j) {
        Weight r = evec(n, 0);
        r[j] = 1;
        inj.complement_roots.push_back(r);
      }
      if (f == Family::BtoB) inj.complement_roots.push_back(evec(n, 0));
      if (f == Family::CtoC) inj.complement_roots.push_back(evec(n, 0, 2));
      for (int j = 1; j < n; ++j) {
        Weight r = evec(n, 0);
        r[j] = -1;
        inj.complement_roots.push_back(r);
      }
      inj.level_vector = evec(n, 0);
      break;
    }
    case Family::AtoB:
    case Family::AtoC:
    case Family::AtoD: {
      Series s = (f == Family::AtoB) ? Series::B : (f == Family::AtoC) ? Series::C : Series::D;
      inj.g = build_root_system(s, n);
      inj.sub = build_embedded_root_system(Series::A, n - 1, n, 0);
      if (f == Family::AtoB)
        for (int i = 0; i < n; ++i) inj.complement_roots.push_back(evec(n, i));
      if (f == Family::AtoC)
        for (int i = 0; i < n; ++i) inj.complement_roots.push_back(evec(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Weight r = evec(n, i);
          r[j] = 1;
          inj.complement_roots.push_back(r);
        }
      inj.level_vector = ones(n, n);
      break;
    }
  }
  validate_injection(inj);
  return inj;
}

Rat charge_of(const Injection& inj, const Weight& w) {
  return dot(w, inj.level_vector);
}

OmegaSet omega_set(const Injection& inj) {
  if (static_cast<int>(inj.complement_roots.size()) > kOmegaRootGuard)
    throw GuardError("omega_set: " + std::to_string(inj.complement_roots.size()) +
                     " complement roots exceed the 2^" + std::to_string(kOmegaRootGuard) +
                     " subset guard");
  // fold the roots; value = (odd-subset count, even-subset count)
  OmegaSet acc;
  acc.emplace(Weight::zero(inj.g.dim), std::make_pair(0LL, 1LL));
  for (const Weight& a : inj.complement_roots) {
    OmegaSet next = acc;
    for (const auto& [w, oe] : acc) {
      auto& tgt = next[w + a];
      tgt.first += oe.second;   // even + this root -> odd
      tgt.second += oe.first;   // odd + this root -> even
    }
    acc.swap(next);
  }
  return acc;
}

namespace {

XiEntry make_entry(const Injection& inj, const Weight& w, int sign) {
  XiEntry e;
  e.w = w;
  e.sign = sign;
  e.labels = e_to_dynkin(inj.sub, w);
  e.charge = charge_of(inj, w);
  return e;
}

void sort_entries(std::vector<XiEntry>& es) {
  std::sort(es.begin(), es.end(), [](const XiEntry& a, const XiEntry& b) {
    if (a.charge != b.charge) return a.charge < b.charge;
    return a.w < b.w;
  });
}

}  // namespace

XiSet xi_set_via_omega(const Injection& inj) {
  OmegaSet om = omega_set(inj);

  struct Cand {
    Weight w;
    long long net;
  };
  std::vector<Cand> cands;
  for (const auto& [w, oe] : om) {
    if (w.is_zero()) continue;
    if (!is_dominant(inj.sub, w)) continue;
    long long net = oe.first - oe.second;
    if (net != 0) cands.push_back({w, net});
  }

  // keep dominance-maximal entries within each charge
  std::map<Rat, std::vector<size_t>> by_charge;
  for (size_t i = 0; i < cands.size(); ++i)
    by_charge[charge_of(inj, cands[i].w)].push_back(i);

  XiSet xi;
  xi.entries.push_back(make_entry(inj, Weight::zero(inj.g.dim), 0));
  for (const auto& [q, group] : by_charge) {
    (void)q;
    for (size_t i : group) {
      bool dominated = false;
      for (size_t j : group) {
        if (i == j) continue;
        if (sub_dominates(inj.sub, cands[j].w, cands[i].w)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      if (cands[i].net != 1 && cands[i].net != -1)
        throw InternalError("xi_set_via_omega: surviving entry " + to_string(cands[i].w) +
                            " has net coefficient " + std::to_string(cands[i].net));
      xi.entries.push_back(make_entry(inj, cands[i].w, cands[i].net > 0 ? 1 : -1));
    }
  }
  sort_entries(xi.entries);
  return xi;
}

XiSet xi_set_closed_form(const Injection& inj) {
  const int n = inj.n;
  const int dim = inj.g.dim;
  std::vector<std::pair<Weight, int>> raw;  // (weight, sign), zero first with sign 0

  auto push_partial_sums = [&](int count) {
    // partial sums of the ordered complement roots, dominant representatives
    Weight run = Weight::zero(dim);
    raw.emplace_back(run, 0);
    for (int k = 1; k <= count; ++k) {
      run += inj.complement_roots[static_cast<size_t>(k - 1)];
      raw.emplace_back(dominantize(inj.sub, run), (k % 2 == 1) ? 1 : -1);
    }
  };

  switch (inj.family) {
    case Family::AtoA:
      push_partial_sums(n);
      break;
    case Family::BtoB:
    case Family::CtoC:
      push_partial_sums(2 * n - 1);
      break;
    case Family::DtoD: {
      push_partial_sums(2 * n - 2);
      Weight extra = Weight::zero(dim);
      extra[0] = Rat(n - 1);
      for (int i = 1; i < n - 1; ++i) extra[i] = 1;
      extra[n - 1] = -1;
      raw.emplace_back(extra, (n % 2 == 0) ? 1 : -1);  // sign (-1)^n
      break;
    }
    case Family::AtoB:
    case Family::AtoC:
    case Family::AtoD: {
      const int l = (inj.family == Family::AtoD) ? 2 : 1;
      const long long p1 = (inj.family == Family::AtoC) ? 2 : 1;
      const int bits = (inj.family == Family::AtoD) ? n - 1 : n;
      const int count = 1 << bits;
      std::vector<Weight> xi(static_cast<size_t>(count), Weight::zero(dim));
      std::vector<int> subset_size(static_cast<size_t>(count), 0);
      for (int k = 0; k < bits; ++k) {
        const int base = 1 << k;
        Weight w = Weight::zero(dim);
        w[0] = Rat(p1 + k);
        for (int i = 1; i < k + l; ++i) w[i] = 1;
        xi[static_cast<size_t>(base)] = w;
        subset_size[static_cast<size_t>(base)] = k + 1;
        for (int i = 1; i < base; ++i) {
          // shifted weight: (q_1,...,q_n) -> (0,q_1,...,q_{n-1})
          const Weight& q = xi[static_cast<size_t>(i)];
          if (q[n - 1] != 0)
            throw InternalError("xi_set_closed_form: shift drops a nonzero coordinate");
          Weight shifted = Weight::zero(dim);
          for (int t = 1; t < n; ++t) shifted[t] = q[t - 1];
          xi[static_cast<size_t>(base + i)] = w + shifted;
          subset_size[static_cast<size_t>(base + i)] = k + 1 + subset_size[static_cast<size_t>(i)];
        }
      }
      for (int m = 0; m < count; ++m)
        raw.emplace_back(xi[static_cast<size_t>(m)],
                         m == 0 ? 0 : (subset_size[static_cast<size_t>(m)] % 2 == 1 ? 1 : -1));
      break;
    }
  }

  XiSet out;
  for (const auto& [w, s] : raw) {
    if (!is_dominant(inj.sub, w))
      throw InternalError("xi_set_closed_form: entry " + to_string(w) + " is not dominant");
    out.entries.push_back(make_entry(inj, w, s));
  }
  sort_entries(out.entries);
  return out;
}

Fan fan_direct(const Injection& inj) {
  Fan fan;
  fan.poly = expand_complement_product(inj.complement_roots);
  fan.depth = 0;
  for (const auto& [w, c] : fan.poly.terms) {
    (void)c;
    if (w.is_zero()) continue;
    Rat lvl = dot(-w, inj.level_vector);
    if (!is_integer(lvl) || lvl < 1)
      throw InternalError("fan weight " + to_string(-w) + " has level " + rat_to_string(lvl));
    fan.depth = std::max(fan.depth, to_integer(lvl));
  }
  if (fan.poly.coeff(Weight::zero(inj.g.dim)) != 1)
    throw InternalError("fan constant term is not +1");
  return fan;
}

Fan fan_via_xi(const Injection& inj, const XiSet& xi, bool check_against_direct) {
  Fan fan;
  fan.poly = FormalElement(inj.g.dim);
  fan.poly.add_term(Weight::zero(inj.g.dim), 1);
  for (const XiEntry& e : xi.entries) {
    if (e.sign == 0) continue;  // the zero entry contributes the constant term
    WeightDiagram d = freudenthal(inj.sub, e.w);
    for (const auto& [k, m] : d.mult) fan.poly.add_term(-k, -e.sign * m);
  }
  for (const auto& [w, c] : fan.poly.terms) {
    (void)c;
    if (w.is_zero()) continue;
    Rat lvl = dot(-w, inj.level_vector);
    if (!is_integer(lvl) || lvl < 1)
      throw InternalError("fan weight " + to_string(-w) + " has level " + rat_to_string(lvl));
    fan.depth = std::max(fan.depth, to_integer(lvl));
  }
  if (check_against_direct) {
    Fan direct = fan_direct(inj);
    if (fan.poly != direct.poly) {
      // report the first differing weight
      for (const auto& [w, c] : direct.poly.terms)
        if (fan.poly.coeff(w) != c)
          throw InternalError("fan mismatch at " + to_string(-w) + ": diagrams give " +
                              std::to_string(fan.poly.coeff(w)) + ", product gives " +
                              std::to_string(c));
      for (const auto& [w, c] : fan.poly.terms)
        if (direct.poly.coeff(w) != c)
          throw InternalError("fan mismatch at " + to_string(-w) + ": diagrams give " +
                              std::to_string(c) + ", product gives " +
                              std::to_string(direct.poly.coeff(w)));
    }
  }
  return fan;
}

std::vector<std::pair<Weight, long long>> fan_steps(const Injection& inj, const Fan& fan) {
  std::vector<std::pair<Weight, long long>> steps;
  for (const auto& [w, c] : fan.poly.terms) {
    if (w.is_zero()) continue;
    steps.emplace_back(-w, -c);  // 1 - sum sign*mult e^{-gamma}: sign*mult = -coeff
  }
  std::sort(steps.begin(), steps.end(), [&](const auto& a, const auto& b) {
    Rat la = dot(a.first, inj.level_vector), lb = dot(b.first, inj.level_vector);
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  return steps;
}

}  // namespace liebranch

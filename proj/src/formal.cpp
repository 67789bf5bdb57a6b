#include "liebranch/formal.hpp"

#include <stdexcept>

#include "liebranch/errors.hpp"

namespace liebranch {

namespace {
constexpr long long kProductGuard = 100'000'000;  // term pairs

void require_same_dim(const FormalElement& a, const FormalElement& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("formal element dimension mismatch");
}
}  // namespace

FormalElement FormalElement::unit(int dimension) {
  FormalElement e(dimension);
  e.terms.emplace(Weight::zero(dimension), 1);
  return e;
}

long long FormalElement::coeff(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

void FormalElement::add_term(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

FormalElement add(const FormalElement& a, const FormalElement& b) {
  require_same_dim(a, b);
  FormalElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

FormalElement scale(const FormalElement& a, long long c) {
  FormalElement r(a.dim);
  if (c == 0) return r;
  for (const auto& [w, v] : a.terms) r.terms.emplace(w, v * c);
  return r;
}

FormalElement multiply(const FormalElement& a, const FormalElement& b) {
  require_same_dim(a, b);
  if (static_cast<long long>(a.size()) * static_cast<long long>(b.size()) > kProductGuard)
    throw GuardError("formal product support exceeds " + std::to_string(kProductGuard) +
                     " term pairs");
  FormalElement r(a.dim);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add_term(wa + wb, ca * cb);
  return r;
}

FormalElement expand_complement_product(const std::vector<Weight>& roots) {
  if (roots.empty())
    throw std::invalid_argument("expand_complement_product: empty root list");
  const int dim = roots.front().dim();
  FormalElement acc = FormalElement::unit(dim);
  for (const Weight& a : roots) {
    FormalElement fac = FormalElement::unit(dim);
    fac.add_term(-a, -1);
    acc = multiply(acc, fac);
  }
  return acc;
}

}  // namespace liebranch

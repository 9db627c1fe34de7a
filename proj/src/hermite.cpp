#include "gwc/hermite.hpp"

#include <stdexcept>

namespace gwc {

MixedPoly MixedPoly::monomial(const MultiIndex& beta, LaurentPoly c) {
  MixedPoly p(beta.dim());
  p.add_term(beta, c);
  return p;
}

LaurentPoly MixedPoly::coefficient(const MultiIndex& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void MixedPoly::add_term(const MultiIndex& beta, const LaurentPoly& c) {
  if (beta.dim() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MixedPoly& MixedPoly::operator+=(const MixedPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

MixedPoly& MixedPoly::operator-=(const MixedPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

MixedPoly MixedPoly::times(const LaurentPoly& c) const {
  MixedPoly r(dim_);
  for (const auto& [b, v] : terms_) r.add_term(b, v * c);
  return r;
}

MixedPoly MixedPoly::times_monomial(const MultiIndex& e) const {
  MixedPoly r(dim_);
  for (const auto& [b, v] : terms_) r.add_term(b + e, v);
  return r;
}

HermitePoly hermite_closed_form(const MultiIndex& alpha, Flavor flavor) {
  const BigInt alpha_fact = factorial(alpha);
  MixedPoly p(alpha.dim());
  for (const MultiIndex& beta : enumerate_half_dominated(alpha)) {
    const MultiIndex power = *sub_checked(alpha, beta.scaled(2));
    BigInt c = alpha_fact / (factorial(beta) * factorial(power));
    if (beta.order() % 2) c = -c;
    if (flavor == Flavor::H) c <<= power.order();
    p.add_term(power, LaurentPoly(c, -(alpha.order() - beta.order())));
  }
  return {alpha, flavor, std::move(p)};
}

HermitePoly hermite_from_recurrence(const MultiIndex& alpha, Flavor flavor) {
  const std::size_t n = alpha.dim();
  const LaurentPoly inv_w(1, -1);
  const int x_factor = flavor == Flavor::H ? 2 : 1;

  MultiIndex at(n);
  MixedPoly cur = MixedPoly::monomial(MultiIndex(n));
  for (std::size_t j = 0; j < n; ++j) {
    MixedPoly prev(n);  // order at - e_j, unused while at_j = 0
    const MultiIndex ej = MultiIndex::unit(n, j);
    for (int a = 0; a < alpha[j]; ++a) {
      // P_{at+e_j} = w^{-1} (c x_j P_at - 2 a P_{at-e_j})
      MixedPoly next = cur.times_monomial(ej).times(LaurentPoly::constant(x_factor));
      if (a > 0) next -= prev.times(LaurentPoly::constant(2 * a));
      prev = std::move(cur);
      cur = next.times(inv_w);
      at = at + ej;
    }
  }
  return {alpha, flavor, std::move(cur)};
}

RecurrenceIdentity hermite_recurrence(const MultiIndex& alpha, std::size_t axis, Flavor flavor) {
  const std::size_t n = alpha.dim();
  if (axis >= n) throw std::invalid_argument("recurrence axis out of range");
  const MultiIndex ej = MultiIndex::unit(n, axis);
  const int x_factor = flavor == Flavor::H ? 2 : 1;

  RecurrenceIdentity id;
  id.lhs = hermite_closed_form(alpha, flavor)
               .poly.times_monomial(ej)
               .times(LaurentPoly::constant(x_factor));
  id.rhs = hermite_closed_form(alpha + ej, flavor).poly.times(LaurentPoly(1, 1));
  if (alpha[axis] >= 1) {
    const MultiIndex lower = *sub_checked(alpha, ej);
    id.rhs += hermite_closed_form(lower, flavor).poly.times(LaurentPoly::constant(2 * alpha[axis]));
  }
  return id;
}

std::vector<MonomialTerm> monomial_expand(const MultiIndex& alpha) {
  const BigInt alpha_fact = factorial(alpha);
  std::vector<MonomialTerm> out;
  for (const MultiIndex& beta : enumerate_half_dominated(alpha)) {
    const MultiIndex rest = *sub_checked(alpha, beta.scaled(2));
    const BigInt c = alpha_fact / (factorial(beta) * factorial(rest));
    out.push_back({beta, LaurentPoly(c, alpha.order() - beta.order())});
  }
  return out;
}

MixedPoly reconstruct_monomial(const MultiIndex& alpha) {
  MixedPoly sum(alpha.dim());
  for (const auto& [beta, weight] : monomial_expand(alpha)) {
    const MultiIndex rest = *sub_checked(alpha, beta.scaled(2));
    sum += hermite_closed_form(rest, Flavor::h).poly.times(weight);
  }
  return sum;
}

MixedPoly rescale_argument_by_two(const MixedPoly& p) {
  MixedPoly r(p.dim());
  for (const auto& [beta, c] : p.terms()) {
    LaurentPoly scaled = c;
    scaled *= BigInt(1) << beta.order();
    r.add_term(beta, scaled);
  }
  return r;
}

std::string format_polynomial(const MixedPoly& p) {
  std::string s;
  for (const auto& [beta, c] : p.terms()) s += to_string(beta) + '\t' + to_string(c) + '\n';
  return s;
}

}  // namespace gwc

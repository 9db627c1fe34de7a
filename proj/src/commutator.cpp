#include "gwc/commutator.hpp"

#include <map>
#include <stdexcept>

#include "gwc/numeric.hpp"

namespace gwc {

Complex CommutatorTerm::prefactor(Complex omega) const {
  return coefficient.convert_to<double>() * ipow(omega, kappa.order()) *
         ipow(-2.0 * omega, delta.order());
}

std::vector<CommutatorTerm> expand_R_terms(const MultiIndex& alpha) {
  if (alpha.order() < 1) throw std::invalid_argument("R_alpha needs |alpha| >= 1");
  const BigInt alpha_fact = factorial(alpha);
  std::vector<CommutatorTerm> terms;
  for (const MultiIndex& gamma : enumerate_dominated(alpha)) {
    const MultiIndex beta = *sub_checked(alpha, gamma);
    if (beta.is_zero()) continue;
    for (const MultiIndex& kappa : enumerate_half_dominated(beta)) {
      const MultiIndex delta = *sub_checked(beta, kappa.scaled(2));
      const BigInt c = alpha_fact / (factorial(gamma) * factorial(kappa) * factorial(delta));
      terms.push_back({gamma, kappa, delta, c});
    }
  }
  return terms;
}

GridFunction commutator_direct(const MultiIndex& alpha, const ComplexParam& omega,
                               const GridFunction& phi) {
  return weight_multiply(apply_direct(phi, omega), alpha) -
         apply_direct(weight_multiply(phi, alpha), omega);
}

GridFunction evaluate_R_theorem(const MultiIndex& alpha, const ComplexParam& omega,
                                const GridFunction& phi) {
  const Complex w = omega.omega();
  GridFunction sum = GridFunction::zeros(phi.grid());
  std::map<MultiIndex, GridFunction> weighted;  // x^gamma phi per gamma
  for (const CommutatorTerm& t : expand_R_terms(alpha)) {
    auto it = weighted.find(t.gamma);
    if (it == weighted.end()) it = weighted.emplace(t.gamma, weight_multiply(phi, t.gamma)).first;
    sum = sum + t.prefactor(w) * heat_derivative(it->second, w, t.delta);
  }
  return sum;
}

GridFunction evaluate_R_convolution(const MultiIndex& alpha, const ComplexParam& omega,
                                    const GridFunction& phi) {
  if (alpha.order() < 1) throw std::invalid_argument("R_alpha needs |alpha| >= 1");
  const BigInt alpha_fact = factorial(alpha);
  GridFunction sum = GridFunction::zeros(phi.grid());
  for (const MultiIndex& gamma : enumerate_dominated(alpha)) {
    const MultiIndex beta = *sub_checked(alpha, gamma);
    if (beta.is_zero()) continue;
    const double c = (alpha_fact / (factorial(beta) * factorial(gamma))).convert_to<double>();
    sum = sum + Complex(c) * convolve_moment_kernel(weight_multiply(phi, gamma), omega, beta);
  }
  return sum;
}

std::vector<IdentityReport> verify_identity(const MultiIndex& alpha, const ComplexParam& omega,
                                            const GridFunction& phi) {
  const GridFunction direct = commutator_direct(alpha, omega, phi);
  const GridFunction theorem = evaluate_R_theorem(alpha, omega, phi);
  const GridFunction conv = evaluate_R_convolution(alpha, omega, phi);
  auto row = [&](std::string pair, const GridFunction& a, const GridFunction& ref) {
    const double e = relative_l2_error(a, ref);
    return IdentityReport{alpha, omega.omega(), std::move(pair), e, e <= kIdentityTolerance};
  };
  return {row("direct-theorem", theorem, direct), row("direct-convolution", conv, direct),
          row("theorem-convolution", conv, theorem)};
}

EstimateReport lemma_B2_identity(const MultiIndex& alpha, std::size_t axis, const ComplexParam& omega,
                                 const GridFunction& phi) {
  const std::size_t n = alpha.dim();
  if (axis >= n) throw std::invalid_argument("axis out of range");
  const MultiIndex ej = MultiIndex::unit(n, axis);
  const GridFunction lhs = weight_multiply(evaluate_R_convolution(alpha, omega, phi), ej);
  const GridFunction rhs = evaluate_R_convolution(alpha + ej, omega, phi) -
                           evaluate_R_convolution(ej, omega, weight_multiply(phi, alpha));
  EstimateReport r;
  r.n = n;
  r.m = alpha.order();
  r.omega = omega.omega();
  r.theta = omega.theta();
  r.lhs = relative_l2_error(lhs, rhs);
  r.rhs = kIdentityTolerance;
  finalize(r);
  return r;
}

}  // namespace gwc

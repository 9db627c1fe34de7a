#pragma once

#include <string>
#include <vector>

#include "gwc/multiindex.hpp"
#include "gwc/report.hpp"
#include "gwc/semigroup.hpp"

namespace gwc {

/// One summand coeff * w^{|kappa|} (-2 w d)^{delta} e^{w Delta}(x^gamma phi) of R_alpha(w) phi,
/// with beta = alpha - gamma != 0 and delta = beta - 2 kappa.
struct CommutatorTerm {
  MultiIndex gamma;
  MultiIndex kappa;
  MultiIndex delta;
  BigInt coefficient;  // alpha! / (gamma! kappa! delta!)

  /// Total power of w: |kappa| from w^{|kappa|} plus |delta| from (-2w)^delta.
  int omega_power() const { return kappa.order() + delta.order(); }
  /// Complex prefactor coefficient * w^{|kappa|} * (-2w)^{|delta|}.
  Complex prefactor(Complex omega) const;
};

/// All terms of R_alpha, ordered by (gamma, kappa) in graded order. |alpha| >= 1.
std::vector<CommutatorTerm> expand_R_terms(const MultiIndex& alpha);

/// x^alpha e^{w Delta} phi - e^{w Delta}(x^alpha phi), both semigroup applications by quadrature.
GridFunction commutator_direct(const MultiIndex& alpha, const ComplexParam& omega,
                               const GridFunction& phi);

/// Sum of expand_R_terms; each d^delta e^{w Delta}(x^gamma phi) is one Fourier multiplier.
GridFunction evaluate_R_theorem(const MultiIndex& alpha, const ComplexParam& omega,
                                const GridFunction& phi);

/// sum_{beta+gamma=alpha, beta!=0} alpha!/(beta! gamma!) (x^beta G_w) * (x^gamma phi)
/// by quadrature; no transform involved.
GridFunction evaluate_R_convolution(const MultiIndex& alpha, const ComplexParam& omega,
                                    const GridFunction& phi);

/// Relative L2 tolerance for identity checks.
inline constexpr double kIdentityTolerance = 1e-6;

/// One comparison of two evaluators of the same quantity.
struct IdentityReport {
  MultiIndex alpha;
  Complex omega;
  std::string pair;
  double rel_l2_err = 0;
  bool pass = false;
};

/// The three pairwise comparisons direct/theorem, direct/convolution, theorem/convolution.
std::vector<IdentityReport> verify_identity(const MultiIndex& alpha, const ComplexParam& omega,
                                            const GridFunction& phi);

/// x_j R_alpha phi against R_{alpha+e_j} phi - R_{e_j}(x^alpha phi), both by convolution.
/// lhs is the relative L2 discrepancy, rhs the tolerance.
EstimateReport lemma_B2_identity(const MultiIndex& alpha, std::size_t axis, const ComplexParam& omega,
                                 const GridFunction& phi);

}  // namespace gwc

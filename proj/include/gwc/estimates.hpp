#pragma once

#include <functional>
#include <span>
#include <string>

#include "gwc/multiindex.hpp"
#include "gwc/report.hpp"
#include "gwc/semigroup.hpp"

namespace gwc {

/// (p, q, r) with 1 <= q <= p <= inf and 1/p + 1 = 1/r + 1/q.
class ExponentTriple {
 public:
  ExponentTriple(Exponent p, Exponent q);

  const Exponent& p() const { return p_; }
  const Exponent& q() const { return q_; }
  const Exponent& r() const { return r_; }
  /// 1/q - 1/p, the smoothing gap.
  double gap() const { return q_.reciprocal() - p_.reciprocal(); }

 private:
  Exponent p_, q_, r_;
};

/// (n+m-1)! / ((n-1)! m!), the number of alpha with |alpha| = m.
double level_multiplicity(std::size_t n, int m);

/// Commutator-estimate constant for the monomial weights x^alpha, |alpha| = m:
///   A = mult * (4 pi)^{-(n/2)(1-1/r)} (2/(r cos th))^{n/(2r)} ([(4m/(e cos th))^{1/2} + 1]^m - 1)
/// with r = inf read through 1/r = 0. Throws std::domain_error for |theta| >= pi/2.
double constant_A(std::size_t n, int m, const Exponent& r, double theta);

/// Same constant without the multiplicity factor; used for the radial weight |x|^m.
double constant_A_tilde(std::size_t n, int m, const Exponent& r, double theta);

/// sup_{rho >= 0} rho^k exp(-(cos th / 8) rho^2) = (4k/(e cos th))^{k/2}.
double sup_gaussian_moment(int k, double theta);

/// ||x^beta G_w||_r in closed form. Uses |G_w(x)| = |4 pi w|^{-n/2} exp(-(cos th/(4|w|)) |x|^2)
/// and the one-dimensional moments int |s|^a e^{-b s^2} ds = Gamma((a+1)/2) b^{-(a+1)/2}.
double kernel_moment_norm(const MultiIndex& beta, Complex omega, const Exponent& r);

/// ||x^beta G_w||_r by numerical quadrature. The kernel factorizes over axes, so this is a
/// product of one-dimensional norms, each by adaptive Gauss-Kronrod (finite r) or a sampled
/// maximum refined by Brent's method (r = inf).
double kernel_moment_norm_quadrature(const MultiIndex& beta, Complex omega, const Exponent& r);
/// ||d^alpha G_w||_r by the same one-dimensional quadrature.
double kernel_derivative_norm_quadrature(const MultiIndex& alpha, Complex omega, const Exponent& r);

/// |w|^e through exp-log.
double modulus_power(const ComplexParam& omega, double e);

/// sum_{|alpha|=m} ||[x^alpha, e^{w Delta}] phi||_p against
/// A_{m,r}(th) |w|^{-(n/2)(1/q-1/p)} (|w|^{1/2} || |x|^{m-1} phi ||_q + |w|^{m/2} ||phi||_q).
EstimateReport verify_theorem_1_2(int m, const ExponentTriple& pq, const ComplexParam& omega,
                                  const GridFunction& phi, const std::string& test_function = "");

/// ||[|x|^m, e^{w Delta}] phi||_p against the same right-hand side with the constant A-tilde.
EstimateReport verify_radial_remark(int m, const ExponentTriple& pq, const ComplexParam& omega,
                                    const GridFunction& phi, const std::string& test_function = "");

/// A bounded weight eta with an analytic bound on ||grad eta||_inf.
struct LipschitzWeight {
  std::string id;
  std::function<double(std::span<const double>)> eta;
  double gradient_bound;
};

/// eta_{j,eps}(x) = x_j exp(-eps |x|^2) with the gradient bound 2.
LipschitzWeight mollified_coordinate(std::size_t axis, double eps);

/// ||[eta, e^{w Delta}] phi||_p against A_{1,r}(th) |w|^{-(n/2)(1/q-1/p)+1/2} ||grad eta||_inf ||phi||_q.
EstimateReport verify_lipschitz_commutator(const LipschitzWeight& eta, const ExponentTriple& pq,
                                           const ComplexParam& omega, const GridFunction& phi,
                                           const std::string& test_function = "");

/// ||d^alpha e^{w Delta} phi||_p against |w|^{-(n/2)(1/q-1/p)-|alpha|/2} ||d^alpha G_{e^{i th}}||_r ||phi||_q.
/// The left side is spectral, the kernel norm is computed by quadrature.
EstimateReport verify_smoothing(const MultiIndex& alpha, const ExponentTriple& pq,
                                const ComplexParam& omega, const GridFunction& phi,
                                const std::string& test_function = "");

/// ||x^beta G_{e^{i th}}||_r against 2^{n/2} ||G_{2 e^{i th}}||_r sup_gaussian_moment(|beta|, th),
/// all norms by quadrature. |beta| >= 1.
EstimateReport verify_moment_chain(const MultiIndex& beta, double theta, const Exponent& r);

}  // namespace gwc

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>

#include "gwc/grid.hpp"
#include "gwc/kernel.hpp"
#include "gwc/multiindex.hpp"

namespace gwc {

/// Semigroup parameter w with re w > 0, together with |w| and theta = arg w.
class ComplexParam {
 public:
  ComplexParam(Complex omega);  // NOLINT: implicit from a plain complex is intended
  ComplexParam(double re, double im) : ComplexParam(Complex(re, im)) {}

  Complex omega() const { return omega_; }
  double modulus() const { return std::abs(omega_); }
  double theta() const { return std::arg(omega_); }
  /// e^{i theta} = w / |w|
  Complex unit() const { return omega_ / modulus(); }

 private:
  Complex omega_;
};

/// Lebesgue exponent in [1, inf]; infinity is a distinguished value and only its
/// reciprocal (0) enters arithmetic.
class Exponent {
 public:
  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(); }
  /// 1/p in [0, 1]; 0 gives infinity.
  static Exponent from_reciprocal(double inv);
  /// "inf" or a number >= 1.
  static Exponent parse(const std::string& text);

  bool is_infinite() const { return inverse_ == 0; }
  double reciprocal() const { return inverse_; }
  /// Finite value; throws for infinity.
  double value() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() = default;
  double inverse_ = 0;
};

std::string to_string(const Exponent& p);

/// Samples of G_w on the grid.
GridFunction sample_kernel(const Grid& grid, Complex omega);

/// Samples of the Gaussian-derivative d^a G_w on the grid.
GridFunction sample_kernel_derivative(const Grid& grid, const MultiIndex& alpha, Complex omega);

/// Discrete frequencies pi k / L, k = 0..N/2-1, -N/2..-1 (FFT order).
std::vector<double> frequencies(const Grid& grid);

/// Unnormalized forward DFT along every axis; coefficients in FFT order.
Samples fourier_transform(const GridFunction& phi);
/// Inverse of fourier_transform (carries the 1/N^n).
GridFunction inverse_fourier_transform(const Grid& grid, Samples spectrum);
/// |xi|^2 at every coefficient of fourier_transform.
Eigen::ArrayXd squared_frequencies(const Grid& grid);

/// F^{-1}(m(xi) F phi) with m evaluated at the discrete frequency vector.
GridFunction apply_multiplier(const GridFunction& phi,
                              const std::function<Complex(std::span<const double>)>& multiplier);

/// e^{w Delta} phi by the multiplier exp(-w |xi|^2). Requires re w >= 0; w = 0 is the identity.
GridFunction apply_fourier(const GridFunction& phi, Complex omega);

/// d^delta phi by the multiplier (i xi)^delta.
GridFunction spectral_derivative(const GridFunction& phi, const MultiIndex& delta);

/// d^delta e^{w Delta} phi through the single multiplier (i xi)^delta exp(-w |xi|^2).
GridFunction heat_derivative(const GridFunction& phi, Complex omega, const MultiIndex& delta);

/// Trapezoid-rule convolution (x^beta G_w) * phi with the exact, non-periodized kernel.
/// The kernel factorizes over axes, so the sum is evaluated one axis at a time.
GridFunction convolve_moment_kernel(const GridFunction& phi, const ComplexParam& omega,
                                    const MultiIndex& beta);

/// e^{w Delta} phi = G_w * phi by quadrature; the slow oracle.
GridFunction apply_direct(const GridFunction& phi, const ComplexParam& omega);

/// (h^n sum |phi|^p)^{1/p}; grid max for p = inf.
double lp_norm(const GridFunction& phi, const Exponent& p);

/// x^alpha phi
GridFunction weight_multiply(const GridFunction& phi, const MultiIndex& alpha);
/// |x|^m phi
GridFunction weight_multiply_radial(const GridFunction& phi, int m);
/// eta(x) phi for an arbitrary real weight.
GridFunction pointwise_multiply(const GridFunction& phi,
                                const std::function<double(std::span<const double>)>& eta);

/// L^1 mass of phi in the band where some |x_j| > L - width.
double boundary_mass(const GridFunction& phi, double width);

/// ||a - ref||_2 / max(||ref||_2, 1e-30)
double relative_l2_error(const GridFunction& a, const GridFunction& ref);

}  // namespace gwc

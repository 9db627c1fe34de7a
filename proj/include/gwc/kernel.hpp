#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>

namespace gwc {

/// Principal branch of (4 pi w)^{-n/2}, computed as exp(-(n/2)(log(4 pi |w|) + i arg w)).
template <typename Scalar>
std::complex<Scalar> kernel_prefactor(std::complex<Scalar> omega, std::size_t n) {
  if (omega == std::complex<Scalar>(0)) throw std::invalid_argument("kernel parameter must be nonzero");
  const Scalar half_n = Scalar(n) / 2;
  const Scalar four_pi = 4 * std::numbers::pi_v<Scalar>;
  return std::exp(std::complex<Scalar>(-half_n * std::log(four_pi * std::abs(omega)),
                                       -half_n * std::arg(omega)));
}

/// Complex Gaussian kernel G_w(x) = (4 pi w)^{-n/2} exp(-|x|^2 / (4 w)).
template <typename Scalar>
std::complex<Scalar> kernel(std::complex<Scalar> omega, std::span<const Scalar> x) {
  Scalar r2 = 0;
  for (Scalar v : x) r2 += v * v;
  return kernel_prefactor(omega, x.size()) * std::exp(-r2 / (Scalar(4) * omega));
}

/// One-dimensional factor g_w(s) = (4 pi w)^{-1/2} exp(-s^2/(4w)); G_w is the product over axes.
template <typename Scalar>
std::complex<Scalar> kernel_1d(std::complex<Scalar> omega, Scalar s) {
  return kernel_prefactor(omega, 1) * std::exp(-s * s / (Scalar(4) * omega));
}

}  // namespace gwc

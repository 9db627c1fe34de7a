#include "gwc/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "gwc/commutator.hpp"
#include "gwc/hermite.hpp"
#include "gwc/kernel.hpp"
#include "gwc/io.hpp"
#include "gwc/numeric.hpp"

namespace gwc {

namespace {

void require_theta(double theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2)) {
    throw std::domain_error("theta must satisfy |theta| < pi/2, got " + std::to_string(theta));
  }
}

double constant_core(std::size_t n, int m, const Exponent& r, double theta) {
  if (m < 1) throw std::invalid_argument("constant needs m >= 1");
  if (n < 1) throw std::invalid_argument("constant needs n >= 1");
  require_theta(theta);
  const double c = std::cos(theta);
  const double inv_r = r.reciprocal();
  const double half_n = double(n) / 2;
  const double gauss = std::pow(4 * std::numbers::pi, -half_n * (1 - inv_r));
  const double spread = inv_r == 0 ? 1.0 : std::pow(2 * inv_r / c, half_n * inv_r);
  const double growth = std::pow(std::sqrt(4 * m / (std::numbers::e * c)) + 1, m) - 1;
  return gauss * spread * growth;
}

std::string label(const Exponent& e) { return to_string(e); }

EstimateReport base_report(std::size_t n, int m, const ExponentTriple& pq, const ComplexParam& omega,
                           const std::string& id) {
  EstimateReport r;
  r.n = n;
  r.m = m;
  r.p = label(pq.p());
  r.q = label(pq.q());
  r.r = label(pq.r());
  r.omega = omega.omega();
  r.theta = omega.theta();
  r.test_function = id;
  return r;
}

// |w|^{-(n/2)(1/q-1/p)} (|w|^{1/2} || |x|^{m-1} phi ||_q + |w|^{m/2} ||phi||_q)
double weighted_rhs_factor(int m, const ExponentTriple& pq, const ComplexParam& omega,
                           const GridFunction& phi) {
  const double n = double(phi.grid().dim());
  const double weighted = lp_norm(weight_multiply_radial(phi, m - 1), pq.q());
  const double plain = lp_norm(phi, pq.q());
  return modulus_power(omega, -(n / 2) * pq.gap()) *
         (modulus_power(omega, 0.5) * weighted + modulus_power(omega, m / 2.0) * plain);
}

// L^r(R) norm of an even nonnegative profile f(s) ~ |s|^k |g_w(s)|; beyond `reach` the
// profile is below e^{-50} of its peak.
double axis_norm(const std::function<double(double)>& f, int k, const Exponent& r, const ComplexParam& w) {
  const double width = std::sqrt(w.modulus() / std::cos(w.theta()));
  const double reach = 2 * width * (std::sqrt(50.0) + 2 * std::sqrt(double(k)) + 1);
  if (r.is_infinite()) {
    constexpr int kSamples = 4096;
    const double step = reach / kSamples;
    int best = 0;
    double best_value = f(0);
    for (int i = 1; i <= kSamples; ++i) {
      const double v = f(i * step);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    const double lo = std::max(0.0, (best - 1) * step);
    const double hi = (best + 1) * step;
    const auto neg = boost::math::tools::brent_find_minima([&](double s) { return -f(s); }, lo, hi, 52).second;
    return std::max(best_value, -neg);
  }
  const double p = r.value();
  auto integrand = [&](double s) { return std::pow(f(s), p); };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  return std::pow(2 * Quad::integrate(integrand, 0.0, reach, 15, 1e-13), 1 / p);
}

}  // namespace

ExponentTriple::ExponentTriple(Exponent p, Exponent q)
    : p_(p), q_(q), r_(Exponent::infinity()) {
  if (q.reciprocal() < p.reciprocal()) throw std::invalid_argument("exponents need q <= p");
  // 1/r = 1/p + 1 - 1/q lies in [0, 1] whenever q <= p
  r_ = Exponent::from_reciprocal(std::clamp(p.reciprocal() + 1 - q.reciprocal(), 0.0, 1.0));
}

double level_multiplicity(std::size_t n, int m) { return level_size(n, m).convert_to<double>(); }

double constant_A(std::size_t n, int m, const Exponent& r, double theta) {
  return level_multiplicity(n, m) * constant_core(n, m, r, theta);
}

double constant_A_tilde(std::size_t n, int m, const Exponent& r, double theta) {
  return constant_core(n, m, r, theta);
}

double sup_gaussian_moment(int k, double theta) {
  if (k < 1) throw std::invalid_argument("moment order must be >= 1");
  require_theta(theta);
  return std::pow(4 * k / (std::numbers::e * std::cos(theta)), k / 2.0);
}

double kernel_moment_norm(const MultiIndex& beta, Complex omega, const Exponent& r) {
  const ComplexParam w(omega);
  const double decay = std::cos(w.theta()) / (4 * w.modulus());  // |G_w| ~ exp(-decay |x|^2)
  const double n = double(beta.dim());
  double value = std::pow(4 * std::numbers::pi * w.modulus(), -n / 2);
  for (int b : beta.components()) {
    if (r.is_infinite()) {
      if (b > 0) value *= std::pow(b / (2 * decay * std::numbers::e), b / 2.0);
    } else {
      const double rr = r.value();
      const double a = rr * b;
      const double log_moment = std::lgamma((a + 1) / 2) - (a + 1) / 2 * std::log(rr * decay);
      value *= std::exp(log_moment / rr);
    }
  }
  return value;
}

double kernel_moment_norm_quadrature(const MultiIndex& beta, Complex omega, const Exponent& r) {
  const ComplexParam w(omega);
  const double pref = std::abs(kernel_prefactor(omega, 1));
  const double decay = std::cos(w.theta()) / (4 * w.modulus());
  double value = 1;
  for (int b : beta.components()) {
    value *= axis_norm([&](double s) { return pref * ipow(s, b) * std::exp(-decay * s * s); }, b, r, w);
  }
  return value;
}

double kernel_derivative_norm_quadrature(const MultiIndex& alpha, Complex omega, const Exponent& r) {
  const ComplexParam w(omega);
  double value = 1;
  for (int a : alpha.components()) {
    // d^a g_w = (-2)^{-a} h_{w,a} g_w with h evaluated from numeric coefficients
    std::vector<Complex> coeff(std::size_t(a) + 1, Complex(0));
    const HermitePoly h = hermite_closed_form(MultiIndex{a}, Flavor::h);
    for (const auto& [beta, c] : h.poly.terms()) {
      coeff[std::size_t(beta[0])] = c.evaluate(omega);
    }
    const double scale = std::ldexp(1.0, -a);
    value *= axis_norm(
        [&](double s) {
          Complex poly = 0;
          for (std::size_t j = coeff.size(); j-- > 0;) poly = poly * s + coeff[j];
          return scale * std::abs(poly * kernel_1d(omega, s));
        },
        a, r, w);
  }
  return value;
}

double modulus_power(const ComplexParam& omega, double e) {
  return std::exp(e * std::log(omega.modulus()));
}

EstimateReport verify_theorem_1_2(int m, const ExponentTriple& pq, const ComplexParam& omega,
                                  const GridFunction& phi, const std::string& test_function) {
  const std::size_t n = phi.grid().dim();
  EstimateReport r = base_report(n, m, pq, omega, test_function);
  const GridFunction heat = apply_direct(phi, omega);
  std::vector<double> parts;
  for (const MultiIndex& alpha : enumerate_level(n, m)) {
    const GridFunction comm = weight_multiply(heat, alpha) - apply_direct(weight_multiply(phi, alpha), omega);
    parts.push_back(lp_norm(comm, pq.p()));
  }
  r.lhs = pairwise_sum(parts);
  r.constant = constant_A(n, m, pq.r(), omega.theta());
  r.rhs = r.constant * weighted_rhs_factor(m, pq, omega, phi);
  finalize(r);
  return r;
}

EstimateReport verify_radial_remark(int m, const ExponentTriple& pq, const ComplexParam& omega,
                                    const GridFunction& phi, const std::string& test_function) {
  const std::size_t n = phi.grid().dim();
  EstimateReport r = base_report(n, m, pq, omega, test_function);
  const GridFunction comm = weight_multiply_radial(apply_direct(phi, omega), m) -
                            apply_direct(weight_multiply_radial(phi, m), omega);
  r.lhs = lp_norm(comm, pq.p());
  r.constant = constant_A_tilde(n, m, pq.r(), omega.theta());
  r.rhs = r.constant * weighted_rhs_factor(m, pq, omega, phi);
  finalize(r);
  return r;
}

LipschitzWeight mollified_coordinate(std::size_t axis, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("mollifier width must be positive");
  return {"eta_" + std::to_string(axis + 1) + "_" + format_double(eps),
          [axis, eps](std::span<const double> x) {
            if (axis >= x.size()) throw std::invalid_argument("mollifier axis out of range");
            double r2 = 0;
            for (double v : x) r2 += v * v;
            return x[axis] * std::exp(-eps * r2);
          },
          2.0};
}

EstimateReport verify_lipschitz_commutator(const LipschitzWeight& eta, const ExponentTriple& pq,
                                           const ComplexParam& omega, const GridFunction& phi,
                                           const std::string& test_function) {
  const std::size_t n = phi.grid().dim();
  EstimateReport r = base_report(n, 1, pq, omega, test_function.empty() ? eta.id : test_function + "/" + eta.id);
  const GridFunction comm = pointwise_multiply(apply_direct(phi, omega), eta.eta) -
                            apply_direct(pointwise_multiply(phi, eta.eta), omega);
  r.lhs = lp_norm(comm, pq.p());
  r.constant = constant_A(n, 1, pq.r(), omega.theta());
  r.rhs = r.constant * modulus_power(omega, -(double(n) / 2) * pq.gap() + 0.5) * eta.gradient_bound *
          lp_norm(phi, pq.q());
  finalize(r);
  return r;
}

EstimateReport verify_smoothing(const MultiIndex& alpha, const ExponentTriple& pq,
                                const ComplexParam& omega, const GridFunction& phi,
                                const std::string& test_function) {
  const std::size_t n = phi.grid().dim();
  EstimateReport r = base_report(n, alpha.order(), pq, omega, test_function);
  r.lhs = lp_norm(heat_derivative(phi, omega.omega(), alpha), pq.p());
  r.constant = kernel_derivative_norm_quadrature(alpha, omega.unit(), pq.r());
  r.rhs = modulus_power(omega, -(double(n) / 2) * pq.gap() - alpha.order() / 2.0) * r.constant *
          lp_norm(phi, pq.q());
  finalize(r);
  return r;
}

EstimateReport verify_moment_chain(const MultiIndex& beta, double theta, const Exponent& r) {
  const std::size_t n = beta.dim();
  const Complex unit = std::polar(1.0, theta);
  EstimateReport rep;
  rep.n = n;
  rep.m = beta.order();
  rep.r = label(r);
  rep.omega = unit;
  rep.theta = theta;
  rep.test_function = "x^" + to_string(beta) + " G";
  rep.lhs = kernel_moment_norm_quadrature(beta, unit, r);
  rep.constant = sup_gaussian_moment(beta.order(), theta);
  rep.rhs = std::pow(2.0, double(n) / 2) * kernel_moment_norm_quadrature(MultiIndex(n), 2.0 * unit, r) *
            rep.constant;
  finalize(rep);
  return rep;
}

}  // namespace gwc

#include "gwc/semigroup.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "gwc/hermite.hpp"
#include "gwc/io.hpp"

namespace gwc {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct AxisLayout {
  std::size_t outer;
  std::size_t inner;
};

AxisLayout layout(const Grid& g, std::size_t axis) {
  AxisLayout l{1, 1};
  for (std::size_t j = 0; j < axis; ++j) l.outer *= g.points();
  for (std::size_t j = axis + 1; j < g.dim(); ++j) l.inner *= g.points();
  return l;
}

void fft_inplace(Samples& data, const Grid& g, bool inverse) {
  const std::size_t N = g.points();
  Eigen::FFT<double> fft;
  std::vector<Complex> line(N), out(N);
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    const AxisLayout l = layout(g, axis);
    for (std::size_t o = 0; o < l.outer; ++o) {
      for (std::size_t k = 0; k < l.inner; ++k) {
        const std::size_t base = o * N * l.inner + k;
        for (std::size_t i = 0; i < N; ++i) line[i] = data[Eigen::Index(base + i * l.inner)];
        if (inverse) {
          fft.inv(out.data(), line.data(), Eigen::Index(N));
        } else {
          fft.fwd(out.data(), line.data(), Eigen::Index(N));
        }
        for (std::size_t i = 0; i < N; ++i) data[Eigen::Index(base + i * l.inner)] = out[i];
      }
    }
  }
}

// T(i, j) = k((i - j) h) h for one axis.
RowMajorMatrix toeplitz(const Grid& g, const std::function<Complex(double)>& k) {
  const Eigen::Index N = Eigen::Index(g.points());
  const double h = g.spacing();
  Eigen::VectorXcd diag(2 * N - 1);
  for (Eigen::Index d = -(N - 1); d <= N - 1; ++d) diag[d + N - 1] = k(double(d) * h) * h;
  RowMajorMatrix T(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) T(i, j) = diag[i - j + N - 1];
  }
  return T;
}

void convolve_axis(Samples& data, const Grid& g, std::size_t axis, const RowMajorMatrix& T) {
  const Eigen::Index N = Eigen::Index(g.points());
  const AxisLayout l = layout(g, axis);
  if (l.inner == 1) {
    Eigen::Map<RowMajorMatrix> M(data.data(), Eigen::Index(l.outer), N);
    M = M * T.transpose();
    return;
  }
  for (std::size_t o = 0; o < l.outer; ++o) {
    Eigen::Map<RowMajorMatrix> B(data.data() + o * N * l.inner, N, Eigen::Index(l.inner));
    B = T * B;
  }
}

}  // namespace

ComplexParam::ComplexParam(Complex omega) : omega_(omega) {
  if (!(omega.real() > 0)) throw std::domain_error("semigroup parameter needs re w > 0");
}

Exponent Exponent::finite(double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw std::invalid_argument("exponent must lie in [1, inf]");
  Exponent e;
  e.inverse_ = 1.0 / p;
  return e;
}

Exponent Exponent::from_reciprocal(double inv) {
  if (!(inv >= 0 && inv <= 1)) throw std::invalid_argument("reciprocal exponent must lie in [0, 1]");
  Exponent e;
  e.inverse_ = inv;
  return e;
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed exponent '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("malformed exponent '" + text + "'");
  return finite(v);
}

double Exponent::value() const {
  if (is_infinite()) throw std::logic_error("value() of infinite exponent");
  return 1.0 / inverse_;
}

std::string to_string(const Exponent& p) {
  if (p.is_infinite()) return "inf";
  return format_double(p.value());
}

GridFunction sample_kernel(const Grid& grid, Complex omega) {
  return GridFunction::sample(grid, [&](std::span<const double> x) { return kernel(omega, x); });
}

GridFunction sample_kernel_derivative(const Grid& grid, const MultiIndex& alpha, Complex omega) {
  const HermitePoly h = hermite_closed_form(alpha, Flavor::h);
  return GridFunction::sample(grid, [&](std::span<const double> x) {
    return gaussian_derivative(h, omega, x);
  });
}

std::vector<double> frequencies(const Grid& grid) {
  const std::size_t N = grid.points();
  std::vector<double> xi(N);
  const double base = std::numbers::pi / grid.half_width();
  for (std::size_t k = 0; k < N; ++k) {
    const double kk = k < N / 2 ? double(k) : double(k) - double(N);
    xi[k] = base * kk;
  }
  return xi;
}

Samples fourier_transform(const GridFunction& phi) {
  Samples data = phi.samples();
  fft_inplace(data, phi.grid(), false);
  return data;
}

GridFunction inverse_fourier_transform(const Grid& grid, Samples spectrum) {
  if (static_cast<std::size_t>(spectrum.size()) != grid.size()) {
    throw std::invalid_argument("spectrum size does not match grid");
  }
  fft_inplace(spectrum, grid, true);
  return {grid, std::move(spectrum)};
}

Eigen::ArrayXd squared_frequencies(const Grid& grid) {
  const std::vector<double> xi = frequencies(grid);
  Eigen::ArrayXd r2(Eigen::Index(grid.size()));
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    std::size_t rest = flat;
    double s = 0;
    for (std::size_t j = 0; j < grid.dim(); ++j) {
      const double v = xi[rest % grid.points()];
      s += v * v;
      rest /= grid.points();
    }
    r2[Eigen::Index(flat)] = s;
  }
  return r2;
}

GridFunction apply_multiplier(const GridFunction& phi,
                              const std::function<Complex(std::span<const double>)>& multiplier) {
  const Grid& g = phi.grid();
  Samples data = phi.samples();
  fft_inplace(data, g, false);
  const std::vector<double> xi_axis = frequencies(g);
  std::vector<double> xi(g.dim());
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = g.dim(); j-- > 0;) {
      xi[j] = xi_axis[rest % g.points()];
      rest /= g.points();
    }
    data[Eigen::Index(flat)] *= multiplier(xi);
  }
  fft_inplace(data, g, true);
  return {g, std::move(data)};
}

GridFunction apply_fourier(const GridFunction& phi, Complex omega) {
  if (omega.real() < 0) throw std::domain_error("e^{w Delta} needs re w >= 0");
  if (omega == Complex(0)) return phi;
  return apply_multiplier(phi, [omega](std::span<const double> xi) {
    double r2 = 0;
    for (double v : xi) r2 += v * v;
    return std::exp(-omega * r2);
  });
}

GridFunction spectral_derivative(const GridFunction& phi, const MultiIndex& delta) {
  if (delta.dim() != phi.grid().dim()) throw std::invalid_argument("derivative index dimension mismatch");
  if (delta.is_zero()) return phi;
  return apply_multiplier(phi, [&delta](std::span<const double> xi) {
    Complex m(1);
    for (std::size_t j = 0; j < xi.size(); ++j) m *= ipow(Complex(0, xi[j]), delta[j]);
    return m;
  });
}

GridFunction heat_derivative(const GridFunction& phi, Complex omega, const MultiIndex& delta) {
  if (delta.dim() != phi.grid().dim()) throw std::invalid_argument("derivative index dimension mismatch");
  if (omega.real() < 0) throw std::domain_error("e^{w Delta} needs re w >= 0");
  return apply_multiplier(phi, [&delta, omega](std::span<const double> xi) {
    Complex m(1);
    double r2 = 0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      m *= ipow(Complex(0, xi[j]), delta[j]);
      r2 += xi[j] * xi[j];
    }
    return m * std::exp(-omega * r2);
  });
}

GridFunction convolve_moment_kernel(const GridFunction& phi, const ComplexParam& omega,
                                    const MultiIndex& beta) {
  const Grid& g = phi.grid();
  if (beta.dim() != g.dim()) throw std::invalid_argument("moment index dimension mismatch");
  const Complex w = omega.omega();
  std::map<int, RowMajorMatrix> cache;
  Samples data = phi.samples();
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    const int b = beta[axis];
    auto it = cache.find(b);
    if (it == cache.end()) {
      it = cache.emplace(b, toeplitz(g, [w, b](double s) { return ipow(s, b) * kernel_1d(w, s); })).first;
    }
    convolve_axis(data, g, axis, it->second);
  }
  return {g, std::move(data)};
}

GridFunction apply_direct(const GridFunction& phi, const ComplexParam& omega) {
  return convolve_moment_kernel(phi, omega, MultiIndex(phi.grid().dim()));
}

double lp_norm(const GridFunction& phi, const Exponent& p) {
  const Eigen::ArrayXd mod = phi.samples().abs();
  if (p.is_infinite()) return mod.size() ? mod.maxCoeff() : 0.0;
  const double vol = phi.grid().cell_volume();
  const double q = p.value();
  if (q == 1) return vol * mod.sum();
  if (q == 2) return std::sqrt(vol * mod.square().sum());
  return std::pow(vol * mod.pow(q).sum(), 1.0 / q);
}

GridFunction weight_multiply(const GridFunction& phi, const MultiIndex& alpha) {
  if (alpha.dim() != phi.grid().dim()) throw std::invalid_argument("weight index dimension mismatch");
  return pointwise_multiply(phi, [&alpha](std::span<const double> x) {
    double w = 1;
    for (std::size_t j = 0; j < x.size(); ++j) w *= ipow(x[j], alpha[j]);
    return w;
  });
}

GridFunction weight_multiply_radial(const GridFunction& phi, int m) {
  if (m < 0) throw std::invalid_argument("radial weight power must be non-negative");
  return pointwise_multiply(phi, [m](std::span<const double> x) {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    return m % 2 == 0 ? ipow(r2, m / 2) : ipow(std::sqrt(r2), m);
  });
}

GridFunction pointwise_multiply(const GridFunction& phi,
                                const std::function<double(std::span<const double>)>& eta) {
  const Grid& g = phi.grid();
  Samples s = phi.samples();
  std::vector<double> x(g.dim());
  for (std::size_t k = 0; k < g.size(); ++k) {
    g.point(k, x);
    s[Eigen::Index(k)] *= eta(x);
  }
  return {g, std::move(s)};
}

double boundary_mass(const GridFunction& phi, double width) {
  const Grid& g = phi.grid();
  const double inner = g.half_width() - width;
  std::vector<double> x(g.dim());
  double mass = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    g.point(k, x);
    bool outside = false;
    for (double v : x) outside = outside || std::abs(v) > inner;
    if (outside) mass += std::abs(phi[k]);
  }
  return mass * g.cell_volume();
}

double relative_l2_error(const GridFunction& a, const GridFunction& ref) {
  require_conformable(a, ref);
  const double num = std::sqrt((a.samples() - ref.samples()).abs2().sum());
  const double den = std::sqrt(ref.samples().abs2().sum());
  return num / std::max(den, 1e-30);
}

}  // namespace gwc

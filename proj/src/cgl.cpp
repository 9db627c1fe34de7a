#include "gwc/cgl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gwc/estimates.hpp"
#include "gwc/kernel.hpp"

namespace gwc {

CGLConfig CGLConfig::gaussian_data(double eps, double sigma, std::size_t n) {
  const Grid g = default_grid(n);
  return CGLConfig{.u0 = Complex(eps) * sample_kernel(g, sigma)};
}

Grid CGLConfig::default_grid(std::size_t n) {
  switch (n) {
    case 1: return {1, 4096, 128.0};
    case 2: return {2, 256, 64.0};
    default: throw std::invalid_argument("no default CGL grid for dimension " + std::to_string(n));
  }
}

void CGLConfig::validate() const {
  const double n = double(u0.grid().dim());
  if (!(nu.real() > 0)) throw std::invalid_argument("CGL needs re nu > 0");
  if (!(p > 1 + 2 / n)) throw std::invalid_argument("CGL needs p > 1 + 2/n");
  if (!(dt > 0) || !(T > 0)) throw std::invalid_argument("CGL needs dt > 0 and T > 0");
  const double size = lp_norm(u0, Exponent::finite(1)) + lp_norm(u0, Exponent::infinity());
  if (size > smallness) {
    throw std::invalid_argument("initial data not small: ||u0||_1 + ||u0||_inf = " + std::to_string(size));
  }
}

GridFunction cgl_nonlinearity(const GridFunction& u, Complex lambda, double p) {
  const Eigen::ArrayXd mod = u.samples().abs();
  Samples f = u.samples();
  for (Eigen::Index k = 0; k < f.size(); ++k) {
    f[k] = mod[k] == 0 ? Complex(0) : lambda * std::pow(mod[k], p - 1) * f[k];
  }
  return {u.grid(), std::move(f)};
}

DuhamelStepper::DuhamelStepper(const Grid& grid, Complex nu, Complex lambda, double p, double dt)
    : grid_(grid), lambda_(lambda), p_(p), dt_(dt) {
  if (!(nu.real() > 0)) throw std::invalid_argument("stepper needs re nu > 0");
  const Eigen::ArrayXcd xi2 = squared_frequencies(grid).cast<Complex>();
  full_ = (-(dt * nu) * xi2).exp();
  half_ = (-(0.5 * dt * nu) * xi2).exp();
}

GridFunction DuhamelStepper::step(const GridFunction& u, double sup_bound) const {
  const Samples u_hat = fourier_transform(u);
  Samples next_hat = full_ * u_hat;
  if (lambda_ != Complex(0)) {
    const Samples f0_hat = fourier_transform(cgl_nonlinearity(u, lambda_, p_));
    const GridFunction mid = inverse_fourier_transform(grid_, half_ * (u_hat + (0.5 * dt_) * f0_hat));
    const Samples fm_hat = fourier_transform(cgl_nonlinearity(mid, lambda_, p_));
    next_hat += dt_ * half_ * fm_hat;
  }
  GridFunction next = inverse_fourier_transform(grid_, std::move(next_hat));
  if (lp_norm(next, Exponent::infinity()) > sup_bound) {
    throw BlowUpError("solution left the small-data regime (sup norm above guard)");
  }
  return next;
}

GridFunction step_duhamel(const GridFunction& u, const CGLConfig& cfg, double dt) {
  const DuhamelStepper stepper(u.grid(), cfg.nu, cfg.lambda, cfg.p, dt);
  return stepper.step(u, 10 * lp_norm(cfg.u0, Exponent::infinity()));
}

std::vector<Snapshot> simulate(const CGLConfig& cfg, double probe_interval) {
  cfg.validate();
  const DuhamelStepper stepper(cfg.u0.grid(), cfg.nu, cfg.lambda, cfg.p, cfg.dt);
  const double guard = 10 * lp_norm(cfg.u0, Exponent::infinity());
  const long steps = std::lround(cfg.T / cfg.dt);

  std::vector<long> probe_steps{0};
  for (double t : {0.25, 0.5, 0.75}) probe_steps.push_back(std::lround(t / cfg.dt));
  for (long k = 1; k * probe_interval <= cfg.T + 1e-9; ++k) {
    probe_steps.push_back(std::lround(k * probe_interval / cfg.dt));
  }
  std::sort(probe_steps.begin(), probe_steps.end());
  probe_steps.erase(std::unique(probe_steps.begin(), probe_steps.end()), probe_steps.end());

  std::vector<Snapshot> out;
  GridFunction u = cfg.u0;
  auto next_probe = probe_steps.begin();
  for (long k = 0;; ++k) {
    if (next_probe != probe_steps.end() && *next_probe == k) {
      out.push_back({double(k) * cfg.dt, u});
      ++next_probe;
    }
    if (k == steps) break;
    u = stepper.step(u, guard);
  }
  return out;
}

bool DecayProbe::bounded() const {
  std::map<double, double> at_one;  // keyed by 1/r
  for (const DecayRecord& d : records) {
    if (std::abs(d.t - 1) < 1e-9) at_one[d.r.reciprocal()] = d.value;
  }
  for (const DecayRecord& d : records) {
    if (!std::isfinite(d.value)) return false;
    if (d.t < 1 - 1e-9) continue;
    auto it = at_one.find(d.r.reciprocal());
    if (it == at_one.end() || d.value > 2 * it->second) return false;
  }
  return true;
}

DecayProbe decay_records(const std::vector<Snapshot>& snaps, const std::vector<Exponent>& rs) {
  DecayProbe probe;
  for (const Snapshot& s : snaps) {
    const double n = double(s.u.grid().dim());
    for (const Exponent& r : rs) {
      const double growth = std::pow(1 + s.t, (n / 2) * (1 - r.reciprocal()));
      probe.records.push_back({s.t, r, growth * lp_norm(s.u, r)});
    }
  }
  return probe;
}

DecayProbe run_decay_probe(const CGLConfig& cfg, const std::vector<Exponent>& rs) {
  return decay_records(simulate(cfg), rs);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs >= 2 paired samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

WeightedProbe weighted_series(const std::vector<Snapshot>& snaps, int m, const Exponent& q, double T) {
  if (m < 1) throw std::invalid_argument("weighted probe needs m >= 1");
  if (q.is_infinite() && m != 1) throw std::invalid_argument("weighted sup-norms are probed for m = 1 only");
  WeightedProbe probe;
  probe.m = m;
  std::vector<double> ts, ws;
  double at_one = 0;
  for (const Snapshot& s : snaps) {
    double W = 0;
    for (const MultiIndex& alpha : enumerate_level(s.u.grid().dim(), m)) {
      W += lp_norm(weight_multiply(s.u, alpha), q);
    }
    const double normalized = W / (1 + std::pow(s.t, m / 2.0));
    probe.series.push_back({s.t, W, normalized});
    if (std::abs(s.t - 1) < 1e-9) at_one = normalized;
    if (s.t >= T / 4 - 1e-9 && s.t > 0) {
      ts.push_back(s.t);
      ws.push_back(W);
    }
    const double mass = lp_norm(s.u, Exponent::finite(1));
    if (mass > 0) {
      const double frac = boundary_mass(s.u, 0.1 * s.u.grid().half_width()) / mass;
      probe.max_boundary_fraction = std::max(probe.max_boundary_fraction, frac);
    }
  }
  probe.slope = ts.size() >= 2 ? loglog_slope(ts, ws) : 0.0;
  double worst = 0;
  for (const WeightedSample& w : probe.series) worst = std::max(worst, w.normalized);
  probe.ratio_bound = at_one > 0 ? worst / at_one : std::numeric_limits<double>::infinity();
  return probe;
}

WeightedProbe run_weighted_probe(const CGLConfig& cfg, int m, const Exponent& q) {
  return weighted_series(simulate(cfg), m, q, cfg.T);
}

MollifiedWeight mollified_weight(const Grid& grid, std::size_t axis, double eps) {
  if (axis >= grid.dim()) throw std::invalid_argument("mollifier axis out of range");
  const LipschitzWeight w = mollified_coordinate(axis, eps);
  return {GridFunction::sample(grid, [&](std::span<const double> x) { return Complex(w.eta(x)); }),
          w.gradient_bound};
}

}  // namespace gwc

#pragma once

#include <stdexcept>
#include <vector>

#include "gwc/grid.hpp"
#include "gwc/semigroup.hpp"

namespace gwc {

/// du/dt - nu Delta u = lambda |u|^{p-1} u on R^n, solved through its integral equation
///   u(t) = e^{t nu Delta} u0 + int_0^t e^{(t-s) nu Delta} f(u(s)) ds.
struct CGLConfig {
  Complex nu{1, 0};
  Complex lambda{-1, 0};
  double p = 4;
  double dt = 0.01;
  double T = 100;
  double smallness = 0.05;  // bound on ||u0||_1 + ||u0||_inf
  GridFunction u0 = GridFunction::zeros(default_grid(1));

  /// u0 = eps G_sigma on the default solver grid (L = 128, N = 4096 for n = 1).
  static CGLConfig gaussian_data(double eps, double sigma = 1.0, std::size_t n = 1);
  static Grid default_grid(std::size_t n);

  /// Throws std::invalid_argument on re nu <= 0, p <= 1 + 2/n, or data above the smallness bound.
  void validate() const;
};

/// Raised when a step leaves the small-data regime.
class BlowUpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lambda |u|^{p-1} u, with f(0) = 0.
GridFunction cgl_nonlinearity(const GridFunction& u, Complex lambda, double p);

/// Exponential midpoint integrator with precomputed multipliers. One step:
///   mid  = E(dt/2) (u + (dt/2) f(u))
///   next = E(dt) u + dt E(dt/2) f(mid)
/// where E(s) = e^{s nu Delta}. With lambda = 0 this is exact heat flow.
class DuhamelStepper {
 public:
  DuhamelStepper(const Grid& grid, Complex nu, Complex lambda, double p, double dt);

  /// Advances one step; throws BlowUpError if ||next||_inf exceeds `sup_bound`.
  GridFunction step(const GridFunction& u, double sup_bound) const;
  double dt() const { return dt_; }

 private:
  Grid grid_;
  Complex lambda_;
  double p_;
  double dt_;
  Eigen::ArrayXcd full_, half_;
};

/// One step of the integrator; the blow-up guard is 10 ||u0||_inf.
GridFunction step_duhamel(const GridFunction& u, const CGLConfig& cfg, double dt);

struct Snapshot {
  double t;
  GridFunction u;
};

/// Solution at t = 0 and at every multiple of `probe_interval` up to T, plus t = 1/4, 1/2, 3/4.
std::vector<Snapshot> simulate(const CGLConfig& cfg, double probe_interval = 1.0);

struct DecayRecord {
  double t;
  Exponent r;
  double value;  // (1+t)^{(n/2)(1-1/r)} ||u(t)||_r
};

struct DecayProbe {
  std::vector<DecayRecord> records;
  /// Every record on t in [1, T] is at most twice its value at t = 1, per exponent.
  bool bounded() const;
};

DecayProbe decay_records(const std::vector<Snapshot>& snaps, const std::vector<Exponent>& rs);
DecayProbe run_decay_probe(const CGLConfig& cfg, const std::vector<Exponent>& rs);

struct WeightedSample {
  double t;
  double W;           // sum_{|alpha|=m} ||x^alpha u(t)||_q
  double normalized;  // W / (1 + t^{m/2})
};

struct WeightedProbe {
  int m = 1;
  std::vector<WeightedSample> series;
  double slope = 0;          // least-squares slope of log W against log t on [T/4, T]
  double ratio_bound = 0;    // max normalized / normalized(t = 1)
  double max_boundary_fraction = 0;  // boundary mass over total mass, worst snapshot

  bool slope_ok() const { return slope <= m / 2.0 + 0.1; }
  bool ratio_ok() const { return ratio_bound <= 3.0; }
};

WeightedProbe weighted_series(const std::vector<Snapshot>& snaps, int m, const Exponent& q, double T);
WeightedProbe run_weighted_probe(const CGLConfig& cfg, int m, const Exponent& q);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Samples of eta_{j,eps}(x) = x_j exp(-eps |x|^2) with the analytic bound ||grad eta||_inf <= 2.
struct MollifiedWeight {
  GridFunction samples;
  double gradient_bound;
};
MollifiedWeight mollified_weight(const Grid& grid, std::size_t axis, double eps);

}  // namespace gwc

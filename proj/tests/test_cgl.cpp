#include <cmath>

#include "doctest.h"
#include "gwc/cgl.hpp"
#include "gwc/estimates.hpp"
#include "oracles.hpp"

using namespace gwc;

namespace {

const Exponent kOne = Exponent::finite(1);
const Exponent kTwo = Exponent::finite(2);
const Exponent kInf = Exponent::infinity();

CGLConfig short_run(Complex lambda, double eps, double T, double dt, Grid grid = Grid(1, 1024, 64.0)) {
  CGLConfig cfg;
  cfg.lambda = lambda;
  cfg.T = T;
  cfg.dt = dt;
  cfg.u0 = Complex(eps) * sample_kernel(grid, 1.0);
  return cfg;
}

}  // namespace

TEST_CASE("configuration checks") {
  CGLConfig cfg = CGLConfig::gaussian_data(0.01);
  CHECK(cfg.u0.grid() == CGLConfig::default_grid(1));
  CHECK_NOTHROW(cfg.validate());
  cfg.p = 3;  // Fujita-critical for n = 1
  CHECK_THROWS(cfg.validate());
  cfg.p = 4;
  cfg.nu = {0, 1};
  CHECK_THROWS(cfg.validate());
  CHECK_THROWS(CGLConfig::gaussian_data(0.2).validate());
  CHECK_THROWS(CGLConfig::default_grid(3));
}

TEST_CASE("nonlinearity") {
  const Grid g(1, 8, 1.0);
  Samples s(8);
  s << 0, 1, Complex(0, 2), -0.5, Complex(3, 4), 0, 0, 1e-300;
  const GridFunction f = cgl_nonlinearity(GridFunction(g, s), {-1, 0.5}, 2.5);
  CHECK(f[0] == Complex(0));
  CHECK(std::abs(f[1] - Complex(-1, 0.5)) < 1e-15);
  CHECK(std::abs(f[4] - Complex(-1, 0.5) * std::pow(5.0, 1.5) * Complex(3, 4)) < 1e-12);
  // phase preserved
  CHECK(std::abs(std::arg(f[2] / Complex(-1, 0.5)) - std::arg(s[2])) < 1e-15);
  CHECK(std::isfinite(std::abs(f[7])));
}

TEST_CASE("linear step is exact heat flow") {
  const Grid g(1, 1024, 64.0);
  CGLConfig cfg = short_run(0, 0.01, 1, 0.5, g);
  const GridFunction u = cfg.u0;
  const GridFunction one = step_duhamel(u, cfg, 0.5);
  CHECK(((one.samples() - apply_fourier(u, 0.5).samples()).abs() == 0).all());
  CHECK(relative_l2_error(one, Complex(0.01) * sample_kernel(g, 1.5)) <= 1e-12);
}

TEST_CASE("linear run reproduces the Gaussian") {
  CGLConfig cfg = short_run(0, 0.01, 10, 0.05);
  cfg.nu = {1, 0};
  const auto snaps = simulate(cfg, 1.0);
  REQUIRE(snaps.back().t == doctest::Approx(10));
  for (const auto& s : snaps) {
    const GridFunction ref = Complex(0.01) * sample_kernel(s.u.grid(), 1 + s.t);
    CHECK(relative_l2_error(s.u, ref) <= 1e-8);
  }
  const auto probe = decay_records(snaps, {kOne, kTwo, kInf});
  CHECK(probe.bounded());
  for (const auto& d : probe.records) {
    if (d.r == kOne) CHECK(std::abs(d.value - 0.01) <= 1e-10);
    if (d.r == kInf) CHECK(std::abs(d.value - 0.01 / std::sqrt(4 * std::numbers::pi)) <= 1e-12);
  }
}

TEST_CASE("complex diffusion coefficient uses the same semigroup") {
  CGLConfig cfg = short_run(0, 0.01, 2, 0.1);
  cfg.nu = {1, 0.5};
  const auto snaps = simulate(cfg, 1.0);
  const GridFunction ref = Complex(0.01) * sample_kernel(cfg.u0.grid(), 1.0 + 2.0 * cfg.nu);
  CHECK(relative_l2_error(snaps.back().u, ref) <= 1e-10);
}

TEST_CASE("snapshot schedule") {
  const auto snaps = simulate(short_run(-1, 0.01, 3, 0.05), 1.0);
  std::vector<double> ts;
  for (const auto& s : snaps) ts.push_back(s.t);
  const std::vector<double> expect{0, 0.25, 0.5, 0.75, 1, 2, 3};
  REQUIRE(ts.size() == expect.size());
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == doctest::Approx(expect[i]));
}

TEST_CASE("second-order convergence in the time step") {
  const Grid g(1, 1024, 64.0);
  CGLConfig base;
  base.lambda = {-1, 0.5};
  base.p = 4;
  base.T = 1;
  base.smallness = 10;
  base.u0 = GridFunction::sample(g, [](std::span<const double> x) { return Complex(std::exp(-x[0] * x[0])); });
  std::vector<GridFunction> finals;
  for (double dt : {0.1, 0.05, 0.025}) {
    CGLConfig cfg = base;
    cfg.dt = dt;
    finals.push_back(simulate(cfg, 1.0).back().u);
  }
  const double coarse = lp_norm(finals[0] - finals[1], kTwo);
  const double fine = lp_norm(finals[1] - finals[2], kTwo);
  const double ratio = coarse / fine;
  INFO("ratio " << ratio);
  CHECK(ratio >= 3.2);
  CHECK(ratio <= 4.8);
}

TEST_CASE("blow-up guard") {
  const Grid g(1, 256, 16.0);
  CGLConfig cfg;
  cfg.lambda = {5, 0};  // focusing and large
  cfg.p = 4;
  cfg.dt = 0.05;
  cfg.u0 = GridFunction::sample(g, [](std::span<const double> x) { return Complex(1.5 * std::exp(-x[0] * x[0])); });
  DuhamelStepper stepper(g, cfg.nu, cfg.lambda, cfg.p, cfg.dt);
  GridFunction u = cfg.u0;
  bool thrown = false;
  try {
    for (int k = 0; k < 400; ++k) u = stepper.step(u, 10 * 1.5);
  } catch (const BlowUpError&) {
    thrown = true;
  }
  CHECK(thrown);
}

TEST_CASE("mass decays monotonically for real absorbing nonlinearity") {
  CGLConfig cfg = short_run(-1, 0.035, 20, 0.01);
  const auto snaps = simulate(cfg, 0.5);
  double previous = lp_norm(snaps.front().u, kOne);
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    const double mass = lp_norm(snaps[i].u, kOne);
    CHECK(mass <= previous * (1 + 1e-13));
    previous = mass;
  }
  CHECK(previous < lp_norm(snaps.front().u, kOne));
}

TEST_CASE("grid refinement leaves probes unchanged") {
  auto probes = [](std::size_t N) {
    CGLConfig cfg = short_run(-1, 0.035, 10, 0.02, Grid(1, N, 64.0));
    const auto snaps = simulate(cfg, 1.0);
    auto decay = decay_records(snaps, {kOne, kTwo, kInf});
    auto w1 = weighted_series(snaps, 1, kOne, cfg.T);
    auto w2 = weighted_series(snaps, 2, kOne, cfg.T);
    std::vector<double> v;
    for (const auto& d : decay.records) v.push_back(d.value);
    for (const auto& s : w1.series) v.push_back(s.W);
    for (const auto& s : w2.series) v.push_back(s.W);
    return v;
  };
  const auto coarse = probes(4096);
  const auto fine = probes(8192);
  REQUIRE(coarse.size() == fine.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    CHECK(std::abs(coarse[i] - fine[i]) <= 1e-4 * std::abs(fine[i]));
  }
}

TEST_CASE("weighted probe on heat flow") {
  CGLConfig cfg = short_run(0, 0.01, 40, 0.1, Grid(1, 2048, 128.0));
  const auto snaps = simulate(cfg, 1.0);
  const auto w1 = weighted_series(snaps, 1, kOne, cfg.T);
  const auto w2 = weighted_series(snaps, 2, kOne, cfg.T);
  // trapezoid sums of |x|^k G_s; exact integrals are 2 sqrt(s/pi) and 2 s
  const Grid& g = cfg.u0.grid();
  auto moment = [&](int k, double s) {
    double sum = 0;
    for (std::size_t i = 0; i < g.points(); ++i) sum += std::pow(std::abs(g.coordinate(i)), k) * oracle::gauss1(s, g.coordinate(i));
    return 0.01 * sum * g.spacing();
  };
  for (const auto& s : w1.series) {
    CHECK(s.W == doctest::Approx(moment(1, 1 + s.t)).epsilon(1e-8));
    CHECK(s.W == doctest::Approx(0.01 * 2 * std::sqrt((1 + s.t) / std::numbers::pi)).epsilon(1e-3));
  }
  for (const auto& s : w2.series) CHECK(s.W == doctest::Approx(0.01 * 2 * (1 + s.t)).epsilon(1e-8));
  CHECK(std::abs(w1.slope - 0.5) <= 0.1);
  CHECK(std::abs(w2.slope - 1.0) <= 0.1);
  CHECK(w1.slope_ok());
  CHECK(w2.ratio_ok());
  CHECK(w1.max_boundary_fraction < 1e-10);
  const auto wi = weighted_series(snaps, 1, kInf, cfg.T);
  CHECK(wi.slope_ok());
  CHECK_THROWS(weighted_series(snaps, 2, kInf, cfg.T));
}

TEST_CASE("log-log slope") {
  std::vector<double> x{1, 2, 4, 8}, y;
  for (double v : x) y.push_back(3 * std::pow(v, 1.5));
  CHECK(loglog_slope(x, y) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK_THROWS(loglog_slope({1}, {1}));
}

TEST_CASE("mollified weight") {
  const Grid g(1, 4096, 64.0);
  for (double eps : {0.1, 0.02}) {
    const auto w = mollified_weight(g, 0, eps);
    CHECK(w.gradient_bound == 2.0);
    const double sup = lp_norm(w.samples, kInf);
    CHECK(std::abs(sup - 1 / std::sqrt(2 * eps * std::numbers::e)) <= 1e-6 * sup + 1e-4);
    double grad = 0;
    for (std::size_t i = 1; i < g.points(); ++i) {
      grad = std::max(grad, std::abs(w.samples[i] - w.samples[i - 1]) / g.spacing());
    }
    CHECK(grad <= 2.0);
  }
  CHECK(std::abs(lp_norm(mollified_weight(g, 0, 0.1).samples, kInf) - 1.35624378555524136) <= 1e-3);
  // eps -> 0 recovers the coordinate on a bounded box
  const Grid small(1, 64, 2.0);
  const auto w = mollified_weight(small, 0, 1e-12);
  for (std::size_t i = 0; i < small.points(); ++i) CHECK(std::abs(w.samples[i] - small.coordinate(i)) <= 1e-11);
  CHECK_THROWS(mollified_weight(small, 1, 0.1));
}

TEST_CASE("sup of the mollified weight by golden-section search") {
  for (double eps : {0.1, 0.5, 2.0}) {
    const auto eta = mollified_coordinate(0, eps);
    auto f = [&](double x) {
      const double p[] = {x};
      return eta.eta(p);
    };
    const double x = oracle::golden_section_argmax(f, 0, 20 / std::sqrt(eps));
    CHECK(std::abs(f(x) - 1 / std::sqrt(2 * eps * std::numbers::e)) <= 1e-6);
  }
}

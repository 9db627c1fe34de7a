// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gwc/catalog.hpp"
#include "gwc/cgl.hpp"
#include "gwc/commutator.hpp"
#include "gwc/estimates.hpp"
#include "gwc/hermite.hpp"
#include "gwc/parallel.hpp"

using namespace gwc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  char timing[96];
  if (budget_s > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s (budget %.0f s)", secs, budget_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
  }
  std::printf("[%s] AC%d %s: %s; %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), timing);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<MultiIndex> indices_up_to(std::size_t n, int max_order, int min_order = 0) {
  std::vector<MultiIndex> out;
  for (int m = min_order; m <= max_order; ++m) {
    for (auto& a : enumerate_level(n, m)) out.push_back(a);
  }
  return out;
}

const Exponent kOne = Exponent::finite(1);
const Exponent kTwo = Exponent::finite(2);
const Exponent kInf = Exponent::infinity();

std::vector<std::pair<Exponent, Exponent>> pq_sweep() {
  return {{kOne, kOne}, {kTwo, kOne}, {kInf, kOne}, {kTwo, kTwo}, {kInf, kTwo}, {kInf, kInf}};
}

Outcome criterion_1() {
  std::size_t count = 0, bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : indices_up_to(n, 8)) {
      ++count;
      if (!(reconstruct_monomial(a) == MixedPoly::monomial(a))) ++bad;
    }
  }
  return {bad == 0, std::to_string(count) + " indices, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion_2() {
  std::size_t count = 0, bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : indices_up_to(n, 8)) {
      for (Flavor f : {Flavor::h, Flavor::H}) {
        ++count;
        if (!(hermite_from_recurrence(a, f).poly == hermite_closed_form(a, f).poly)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(count) + " polynomials, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion_3() {
  struct Case {
    MultiIndex alpha;
    Complex omega;
    std::string family;
  };
  const Complex omegas[] = {{1, 0}, {2, 0}, {1, 0.99}, {0.1, 0.05}};
  const char* families[] = {"gaussian", "gaussian-shifted", "bandlimited-random"};
  std::vector<Case> cases;
  for (std::size_t n : {1u, 2u}) {
    for (const auto& a : indices_up_to(n, 4, 1)) {
      for (Complex w : omegas) {
        for (const char* f : families) cases.push_back({a, w, f});
      }
    }
  }
  const auto worst = parallel_map(cases, [](const Case& c) {
    const std::size_t n = c.alpha.dim();
    const GridFunction phi = catalog_lookup(c.family, n).sample(Grid::default_for(n));
    double e = 0;
    for (const auto& rep : verify_identity(c.alpha, ComplexParam(c.omega), phi)) e = std::max(e, rep.rel_l2_err);
    return e;
  });
  double max_err = 0;
  std::size_t bad = 0;
  for (double e : worst) {
    max_err = std::max(max_err, e);
    if (!(e <= kIdentityTolerance)) ++bad;
  }
  return {bad == 0 && cases.size() >= 100,
          std::to_string(cases.size()) + " cases x 3 pairs, max rel L2 " + fmt("%.2e", max_err) + " (tol 1e-6), " +
              std::to_string(bad) + " failures"};
}

Outcome criterion_4() {
  const Grid g = Grid::default_for(1);
  const GridFunction phi = sample_kernel(g, 0.5);
  const GridFunction ref = sample_kernel(g, 1.5);
  const double ef = relative_l2_error(apply_fourier(phi, 1.0), ref);
  const double ed = relative_l2_error(apply_direct(phi, ComplexParam(1, 0)), ref);
  return {ef <= 1e-8 && ed <= 1e-8, "Fourier " + fmt("%.2e", ef) + ", direct " + fmt("%.2e", ed) + " (tol 1e-8)"};
}

Outcome criterion_5() {
  struct Case {
    std::size_t n;
    std::string family;
    int m;
    Complex omega;
  };
  std::vector<Case> cases;
  for (std::size_t n : {1u, 2u}) {
    for (const char* f : {"gaussian", "gaussian-shifted", "bandlimited-random"}) {
      for (int m = 1; m <= 3; ++m) {
        for (Complex w : {Complex(1, 0), Complex(1, 0.9)}) cases.push_back({n, f, m, w});
      }
    }
  }
  for (int s = 1; s <= 100; ++s) {
    const std::size_t n = s % 4 == 0 ? 2 : 1;
    cases.push_back({n, "gaussian-mixture:" + std::to_string(s), 1 + s % 3, s % 2 ? Complex(1, 0) : Complex(1, 0.9)});
  }
  const auto results = parallel_map(cases, [](const Case& c) {
    const GridFunction phi = catalog_lookup(c.family, c.n).sample(Grid::default_for(c.n));
    std::pair<int, double> r{0, 0.0};  // failures, worst lhs/rhs
    for (const auto& [p, q] : pq_sweep()) {
      const auto rep = verify_theorem_1_2(c.m, ExponentTriple(p, q), ComplexParam(c.omega), phi, c.family);
      if (!rep.pass) ++r.first;
      r.second = std::max(r.second, rep.lhs / rep.rhs);
    }
    return r;
  });
  int bad = 0;
  double worst = 0;
  for (const auto& [f, w] : results) {
    bad += f;
    worst = std::max(worst, w);
  }
  int chain = 0, chain_bad = 0;
  double chain_worst = 0;
  for (std::size_t n : {1u, 2u}) {
    for (const auto& b : indices_up_to(n, 4, 1)) {
      for (double th : {0.0, 0.5, 1.0, 1.4, -0.8}) {
        for (const Exponent& r : {kOne, kTwo, kInf}) {
          const auto rep = verify_moment_chain(b, th, r);
          ++chain;
          if (!rep.pass) ++chain_bad;
          chain_worst = std::max(chain_worst, rep.lhs / rep.rhs);
        }
      }
    }
  }
  return {bad == 0 && chain_bad == 0,
          std::to_string(cases.size() * pq_sweep().size()) + " estimate reports (incl. 100 random mixtures), " +
              std::to_string(bad) + " failures, max lhs/rhs " + fmt("%.3f", worst) + "; moment chain " +
              std::to_string(chain) + " checks, " + std::to_string(chain_bad) + " failures, max ratio " +
              fmt("%.3f", chain_worst)};
}

Outcome criterion_6() {
  const double a = constant_A(1, 1, kOne, 0);
  const double expect = std::sqrt(2.0) * std::sqrt(4 / std::numbers::e);
  const double err = std::abs(a - expect) / expect;
  bool symmetric = true, increasing = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (const Exponent& r : {kOne, kTwo, kInf}) {
        double prev = 0;
        for (int k = 0; k <= 40; ++k) {
          const double th = (std::numbers::pi / 2) * k / 41.0;
          const double v = constant_A(n, m, r, th);
          if (v != constant_A(n, m, r, -th)) symmetric = false;
          if (k > 0 && !(v > prev)) increasing = false;
          prev = v;
        }
      }
    }
  }
  return {err <= 1e-12 && symmetric && increasing,
          "A(1,1,1,0) rel err " + fmt("%.1e", err) + ", symmetric " + (symmetric ? "yes" : "no") +
              ", strictly increasing in |theta| " + (increasing ? "yes" : "no")};
}

Outcome criterion_7() {
  struct Case {
    MultiIndex alpha;
    std::size_t axis;
    Complex omega;
    std::string family;
  };
  std::vector<Case> cases;
  for (const MultiIndex& a : {MultiIndex{1}, MultiIndex{2}, MultiIndex{3}}) {
    for (Complex w : {Complex(1, 0), Complex(1, 0.5), Complex(0.5, -0.3)}) {
      for (const char* f : {"gaussian", "gaussian-shifted"}) cases.push_back({a, 0, w, f});
    }
  }
  for (const MultiIndex& a : {MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{1, 1}, MultiIndex{2, 0}}) {
    for (std::size_t j : {0u, 1u}) {
      for (Complex w : {Complex(1, 0), Complex(0.7, 0.6)}) cases.push_back({a, j, w, "gaussian-shifted"});
    }
  }
  const auto errs = parallel_map(cases, [](const Case& c) {
    const std::size_t n = c.alpha.dim();
    const GridFunction phi = catalog_lookup(c.family, n).sample(Grid::default_for(n));
    return lemma_B2_identity(c.alpha, c.axis, ComplexParam(c.omega), phi).lhs;
  });
  double worst = 0;
  std::size_t bad = 0;
  for (double e : errs) {
    worst = std::max(worst, e);
    if (!(e <= kIdentityTolerance)) ++bad;
  }
  return {bad == 0 && cases.size() >= 20, std::to_string(cases.size()) + " cases, max rel L2 " + fmt("%.2e", worst) +
                                              " (tol 1e-6), " + std::to_string(bad) + " failures"};
}

Outcome criterion_8() {
  struct Case {
    std::size_t n;
    LipschitzWeight eta;
    Complex omega;
  };
  std::vector<Case> cases;
  for (std::size_t n : {1u, 2u}) {
    for (Complex w : {Complex(1, 0), Complex(0.5, 0.45), Complex(2, -1.9)}) {
      for (double eps : {0.01, 0.1, 1.0}) {
        for (std::size_t j = 0; j < n; ++j) cases.push_back({n, mollified_coordinate(j, eps), w});
      }
      cases.push_back({n, {"sin_x1", [](std::span<const double> x) { return std::sin(x[0]); }, 1.0}, w});
      cases.push_back({n, {"const", [](std::span<const double>) { return 2.0; }, 0.0}, w});
    }
  }
  const auto results = parallel_map(cases, [](const Case& c) {
    const GridFunction phi = catalog_lookup("gaussian-shifted", c.n).sample(Grid::default_for(c.n));
    int bad = 0;
    for (const auto& [p, q] : pq_sweep()) {
      if (!verify_lipschitz_commutator(c.eta, ExponentTriple(p, q), ComplexParam(c.omega), phi).pass) ++bad;
    }
    return bad;
  });
  int bad = 0;
  for (int b : results) bad += b;
  return {bad == 0, std::to_string(cases.size() * pq_sweep().size()) +
                        " reports (eta_{j,eps} with Lipschitz bound 2, sin, constant), " + std::to_string(bad) +
                        " failures"};
}

Outcome criterion_9() {
  const double eps = 0.01, sigma = 1.0;
  CGLConfig cfg = CGLConfig::gaussian_data(eps, sigma);
  cfg.lambda = 0;
  cfg.T = 10;
  const auto snaps = simulate(cfg, 1.0);
  const GridFunction ref = Complex(eps) * sample_kernel(cfg.u0.grid(), sigma + cfg.T);
  const double err = relative_l2_error(snaps.back().u, ref);
  const auto probe = decay_records(snaps, {kOne});
  const double first = probe.records.front().value;
  double drift = 0;
  for (const auto& d : probe.records) drift = std::max(drift, std::abs(d.value - first) / first);
  return {err <= 1e-7 && drift <= 1e-8, "u(10) vs eps G_{sigma+10} rel L2 " + fmt("%.2e", err) +
                                            " (tol 1e-7), r=1 record drift " + fmt("%.2e", drift) + " (tol 1e-8)"};
}

Outcome criterion_10() {
  CGLConfig cfg = CGLConfig::gaussian_data(0.01);
  cfg.nu = 1;
  cfg.lambda = -1;
  cfg.p = 4;
  cfg.T = 100;
  const auto snaps = simulate(cfg, 1.0);
  const auto w1 = weighted_series(snaps, 1, kOne, cfg.T);
  const auto w2 = weighted_series(snaps, 2, kOne, cfg.T);
  const bool decay_ok = decay_records(snaps, {kOne, kTwo, kInf}).bounded();
  const bool pass = std::abs(w1.slope - 0.5) <= 0.1 && std::abs(w2.slope - 1.0) <= 0.1 && w1.ratio_ok() &&
                    w2.ratio_ok() && decay_ok;
  return {pass, "slope m=1 " + fmt("%.4f", w1.slope) + ", m=2 " + fmt("%.4f", w2.slope) +
                    " (target m/2 +- 0.1); ratio bound m=1 " + fmt("%.3f", w1.ratio_bound) + ", m=2 " +
                    fmt("%.3f", w2.ratio_bound) + " (<= 3); decay records bounded " + (decay_ok ? "yes" : "no") +
                    "; boundary mass fraction " + fmt("%.1e", std::max(w1.max_boundary_fraction, w2.max_boundary_fraction))};
}

}  // namespace

int main() {
  run(1, "monomial expansion exactness (n<=3, |alpha|<=8)", 10, criterion_1);
  run(2, "recurrence vs closed-form Hermite exactness (n<=3, |alpha|<=8)", 10, criterion_2);
  run(3, "three-way commutator identity sweep", 300, criterion_3);
  run(4, "Gaussian semigroup oracle G_s -> G_{w+s}", 0, criterion_4);
  run(5, "commutator estimate sweep and moment chain", 300, criterion_5);
  run(6, "constant A reference value, symmetry, monotonicity", 0, criterion_6);
  run(7, "shift identity x_j R_alpha", 0, criterion_7);
  run(8, "Lipschitz-weight commutator estimate", 0, criterion_8);
  run(9, "CGL linear oracle and mass record", 0, criterion_9);
  run(10, "CGL weighted growth at desk scale", 600, criterion_10);
  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
  return failures == 0 ? 0 : 1;
}

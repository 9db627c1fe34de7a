#include "gwc/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gwc/kernel.hpp"

namespace gwc {

namespace {

constexpr std::uint64_t kDefaultMixtureSeed = 7;
constexpr std::uint64_t kDefaultBandlimitedSeed = 2;

double coordinate_or_zero(const std::vector<double>& c, std::size_t j) { return j < c.size() ? c[j] : 0.0; }

std::optional<std::uint64_t> seed_suffix(const std::string& id, const std::string& prefix) {
  if (id == prefix) return std::nullopt;
  if (id.size() <= prefix.size() + 1 || id.compare(0, prefix.size() + 1, prefix + ":") != 0) {
    throw std::invalid_argument("unknown test function: " + id);
  }
  const std::string digits = id.substr(prefix.size() + 1);
  std::size_t used = 0;
  const unsigned long long v = std::stoull(digits, &used);
  if (used != digits.size()) throw std::invalid_argument("bad seed in test function id: " + id);
  return v;
}

}  // namespace

GridFunction TestFunctionSpec::sample(const Grid& grid) const {
  const std::size_t n = grid.dim();
  if (kind != Kind::BandlimitedRandom) {
    return GridFunction::sample(grid, [&](std::span<const double> x) {
      Complex s = 0;
      std::vector<double> y(n);
      for (const GaussianBump& b : bumps) {
        for (std::size_t j = 0; j < n; ++j) y[j] = x[j] - coordinate_or_zero(b.center, j);
        s += b.weight * kernel<double>(Complex(b.sigma, 0), y);
      }
      return s;
    });
  }
  SeededUniform rng(seed);
  const auto count = static_cast<std::size_t>(modes);
  std::vector<std::vector<double>> freq(count, std::vector<double>(n));
  std::vector<Complex> amp(count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < n; ++j) freq[k][j] = rng.next(-cutoff, cutoff);
    const double re = rng.next(-1, 1);
    const double im = rng.next(-1, 1);
    amp[k] = {re, im};
  }
  return GridFunction::sample(grid, [&](std::span<const double> x) {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    Complex s = 0;
    for (std::size_t k = 0; k < count; ++k) {
      double phase = 0;
      for (std::size_t j = 0; j < n; ++j) phase += freq[k][j] * x[j];
      s += amp[k] * std::polar(1.0, phase);
    }
    return s * std::exp(-r2 / (4 * envelope));
  });
}

std::optional<double> TestFunctionSpec::l1_norm() const {
  if (kind == Kind::BandlimitedRandom) return std::nullopt;
  double total = 0;
  for (const GaussianBump& b : bumps) {
    if (b.weight < 0) return std::nullopt;
    total += b.weight;
  }
  return total;
}

TestFunctionSpec gaussian_spec(double sigma, std::vector<double> center) {
  if (!(sigma > 0)) throw std::invalid_argument("Gaussian width must be positive");
  TestFunctionSpec s;
  s.kind = TestFunctionSpec::Kind::Gaussian;
  s.bumps = {GaussianBump{sigma, std::move(center), 1.0}};
  s.id = "gaussian";
  return s;
}

TestFunctionSpec random_mixture_spec(std::uint64_t seed, std::size_t n, int components) {
  if (components < 1) throw std::invalid_argument("mixture needs at least one component");
  SeededUniform rng(seed);
  TestFunctionSpec s;
  s.kind = TestFunctionSpec::Kind::GaussianMixture;
  s.seed = seed;
  s.id = "gaussian-mixture:" + std::to_string(seed);
  for (int c = 0; c < components; ++c) {
    GaussianBump b;
    b.sigma = rng.next(0.2, 0.45);
    b.weight = rng.next(0.2, 1.0);
    b.center.resize(n);
    for (auto& v : b.center) v = rng.next(-0.5, 0.5);
    s.bumps.push_back(std::move(b));
  }
  return s;
}

TestFunctionSpec bandlimited_spec(std::uint64_t seed, double cutoff, double envelope) {
  if (!(cutoff > 0) || !(envelope > 0)) throw std::invalid_argument("cutoff and envelope must be positive");
  TestFunctionSpec s;
  s.kind = TestFunctionSpec::Kind::BandlimitedRandom;
  s.seed = seed;
  s.cutoff = cutoff;
  s.envelope = envelope;
  s.id = "bandlimited-random:" + std::to_string(seed);
  return s;
}

TestFunctionSpec catalog_lookup(const std::string& id, std::size_t n) {
  if (id == "gaussian") return gaussian_spec(0.5);
  if (id == "gaussian-shifted") {
    auto s = gaussian_spec(0.4, {0.75, -0.5, 0.25});
    s.bumps[0].center.resize(n);
    s.id = id;
    return s;
  }
  if (id.starts_with("gaussian-mixture")) {
    return random_mixture_spec(seed_suffix(id, "gaussian-mixture").value_or(kDefaultMixtureSeed), n);
  }
  if (id.starts_with("bandlimited-random")) {
    return bandlimited_spec(seed_suffix(id, "bandlimited-random").value_or(kDefaultBandlimitedSeed));
  }
  throw std::invalid_argument("unknown test function: " + id);
}

std::vector<std::string> catalog_ids() {
  return {"gaussian", "gaussian-shifted", "gaussian-mixture", "bandlimited-random"};
}

}  // namespace gwc

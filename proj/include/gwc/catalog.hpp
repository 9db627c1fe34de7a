#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gwc/grid.hpp"

namespace gwc {

/// c G_sigma(x - center) with real sigma > 0.
struct GaussianBump {
  double sigma = 0.5;
  std::vector<double> center;  // padded with zeros to the grid dimension
  double weight = 1.0;
};

/// A rapidly decaying input function identified by a catalog id.
struct TestFunctionSpec {
  enum class Kind { Gaussian, GaussianMixture, BandlimitedRandom };

  std::string id;
  Kind kind = Kind::Gaussian;
  std::vector<GaussianBump> bumps;  // Gaussian: one entry; mixture: several
  std::uint64_t seed = 0;           // bandlimited-random
  double cutoff = 2.0;              // max |frequency| per axis
  double envelope = 0.5;            // envelope exp(-|x|^2/(4 envelope))
  int modes = 8;

  GridFunction sample(const Grid& grid) const;
  /// Exact L^1 norm where it is known in closed form (nonnegative bumps).
  std::optional<double> l1_norm() const;
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne twister draw.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : gen_(seed) {}
  double next() { return double(gen_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 gen_;
};

TestFunctionSpec gaussian_spec(double sigma, std::vector<double> center = {});
/// Nonnegative mixture of `components` bumps with widths in [0.2, 0.45] and centers in [-0.5, 0.5]^n.
TestFunctionSpec random_mixture_spec(std::uint64_t seed, std::size_t n, int components = 3);
TestFunctionSpec bandlimited_spec(std::uint64_t seed, double cutoff = 2.0, double envelope = 0.5);

/// Named entries: gaussian, gaussian-shifted, gaussian-mixture[:SEED],
/// bandlimited-random[:SEED]. Throws std::invalid_argument for unknown ids.
TestFunctionSpec catalog_lookup(const std::string& id, std::size_t n);
std::vector<std::string> catalog_ids();

}  // namespace gwc

#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace gwc {

using Complex = std::complex<double>;
using Samples = Eigen::ArrayXcd;

/// Uniform grid on [-L, L)^n with N points per axis, spacing h = 2L/N.
/// Samples are stored row-major: axis 0 varies slowest.
class Grid {
 public:
  Grid(std::size_t dim, std::size_t points, double half_width);

  /// Box L = 16 with N = 512, 256, 64 for n = 1, 2, 3.
  static Grid default_for(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t points() const { return points_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2 * half_width_ / double(points_); }
  double cell_volume() const;
  std::size_t size() const;
  double coordinate(std::size_t i) const { return -half_width_ + double(i) * spacing(); }
  /// Coordinates of the sample with row-major flat index `flat`.
  void point(std::size_t flat, std::span<double> x) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t dim_;
  std::size_t points_;
  double half_width_;
};

/// Complex samples of a function on a Grid.
class GridFunction {
 public:
  GridFunction(Grid grid, Samples samples);

  static GridFunction zeros(const Grid& grid);

  /// Samples f(x) at every grid point; f takes std::span<const double>.
  template <typename F>
  static GridFunction sample(const Grid& grid, F&& f) {
    Samples s(static_cast<Eigen::Index>(grid.size()));
    std::vector<double> x(grid.dim());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      grid.point(k, x);
      s[static_cast<Eigen::Index>(k)] = f(std::span<const double>(x));
    }
    return {grid, std::move(s)};
  }

  const Grid& grid() const { return grid_; }
  const Samples& samples() const { return samples_; }
  Complex operator[](std::size_t k) const { return samples_[static_cast<Eigen::Index>(k)]; }

  GridFunction operator+(const GridFunction& o) const;
  GridFunction operator-(const GridFunction& o) const;
  GridFunction operator-() const { return {grid_, -samples_}; }
  friend GridFunction operator*(Complex a, const GridFunction& f) { return {f.grid_, a * f.samples_}; }

 private:
  Grid grid_;
  Samples samples_;
};

void require_conformable(const GridFunction& a, const GridFunction& b);

/// Binary layout (little-endian): "GWGF", u32 version, u32 n, u32 N, f64 L,
/// then interleaved (re, im) f64 samples in row-major order.
void write_binary(const GridFunction& f, const std::filesystem::path& path);
GridFunction read_binary(const std::filesystem::path& path);

/// Columns x,re,im; one-dimensional grids only.
void write_csv(const GridFunction& f, const std::filesystem::path& path);

}  // namespace gwc

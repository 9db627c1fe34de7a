#include "gwc/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gwc/io.hpp"

namespace gwc {

namespace {

constexpr char kMagic[4] = {'G', 'W', 'G', 'F'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little, "binary grid format assumes little-endian host");

template <typename T>
void put(std::string& buf, T v) {
  char raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  buf.append(raw, sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) throw std::runtime_error("truncated grid file");
  return v;
}

}  // namespace

Grid::Grid(std::size_t dim, std::size_t points, double half_width)
    : dim_(dim), points_(points), half_width_(half_width) {
  if (dim < 1) throw std::invalid_argument("grid dimension must be at least 1");
  if (points < 8 || !std::has_single_bit(points)) {
    throw std::invalid_argument("grid points per axis must be a power of two >= 8");
  }
  if (!(half_width > 0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid half-width must be positive");
  }
}

Grid Grid::default_for(std::size_t dim) {
  switch (dim) {
    case 1: return {1, 512, 16.0};
    case 2: return {2, 256, 16.0};
    case 3: return {3, 64, 16.0};
    default: throw std::invalid_argument("no default grid for dimension " + std::to_string(dim));
  }
}

double Grid::cell_volume() const { return std::pow(spacing(), double(dim_)); }

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (std::size_t j = 0; j < dim_; ++j) s *= points_;
  return s;
}

void Grid::point(std::size_t flat, std::span<double> x) const {
  for (std::size_t j = dim_; j-- > 0;) {
    x[j] = coordinate(flat % points_);
    flat /= points_;
  }
}

GridFunction::GridFunction(Grid grid, Samples samples) : grid_(grid), samples_(std::move(samples)) {
  if (static_cast<std::size_t>(samples_.size()) != grid_.size()) {
    throw std::invalid_argument("sample count does not match grid");
  }
  if (!samples_.allFinite()) throw std::invalid_argument("grid function samples must be finite");
}

GridFunction GridFunction::zeros(const Grid& grid) {
  return {grid, Samples::Zero(static_cast<Eigen::Index>(grid.size()))};
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
  require_conformable(*this, o);
  return {grid_, samples_ + o.samples_};
}

GridFunction GridFunction::operator-(const GridFunction& o) const {
  require_conformable(*this, o);
  return {grid_, samples_ - o.samples_};
}

void require_conformable(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("grid functions are not conformable");
}

void write_binary(const GridFunction& f, const std::filesystem::path& path) {
  std::string buf(kMagic, 4);
  put<std::uint32_t>(buf, kVersion);
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(f.grid().dim()));
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(f.grid().points()));
  put<double>(buf, f.grid().half_width());
  for (Eigen::Index k = 0; k < f.samples().size(); ++k) {
    put<double>(buf, f.samples()[k].real());
    put<double>(buf, f.samples()[k].imag());
  }
  write_file_atomic(path, buf);
}

GridFunction read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error(path.string() + ": not a GWGF grid file");
  }
  if (const auto v = get<std::uint32_t>(in); v != kVersion) {
    throw std::runtime_error(path.string() + ": unsupported GWGF version " + std::to_string(v));
  }
  const auto n = get<std::uint32_t>(in);
  const auto N = get<std::uint32_t>(in);
  const auto L = get<double>(in);
  Grid grid(n, N, L);
  Samples s(static_cast<Eigen::Index>(grid.size()));
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    s[k] = {re, im};
  }
  if (in.peek() != std::char_traits<char>::eof()) throw std::runtime_error(path.string() + ": trailing bytes");
  return {grid, std::move(s)};
}

void write_csv(const GridFunction& f, const std::filesystem::path& path) {
  if (f.grid().dim() != 1) throw std::invalid_argument("CSV export is for one-dimensional grids");
  std::ostringstream os;
  os << std::setprecision(17) << "x,re,im\n";
  for (std::size_t i = 0; i < f.grid().points(); ++i) {
    os << f.grid().coordinate(i) << ',' << f[i].real() << ',' << f[i].imag() << '\n';
  }
  write_file_atomic(path, os.str());
}

}  // namespace gwc

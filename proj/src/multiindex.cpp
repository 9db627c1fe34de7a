#include "gwc/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gwc {

namespace {

void require_same_dim(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multi-index dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
}

void check_components(const std::vector<int>& c) {
  for (int v : c) {
    if (v < 0) throw std::invalid_argument("multi-index components must be non-negative");
  }
}

// Compositions of m into n ordered parts, first slot descending.
void fill_level(std::vector<int>& work, std::size_t slot, int remaining,
                std::vector<MultiIndex>& out) {
  if (slot + 1 == work.size()) {
    work[slot] = remaining;
    out.emplace_back(work);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    work[slot] = v;
    fill_level(work, slot + 1, remaining - v, out);
  }
}

// Cartesian product of 0..bound_j, returned in graded order.
std::vector<MultiIndex> box(const std::vector<int>& bounds) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(bounds.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      if (cur[j] < bounds[j]) {
        ++cur[j];
        break;
      }
      cur[j] = 0;
      ++j;
    }
    if (j == cur.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> components) : c_(components) {
  check_components(c_);
}

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
  check_components(c_);
}

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("unit multi-index axis out of range");
  MultiIndex e(dim);
  e.c_[axis] = 1;
  return e;
}

int MultiIndex::order() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool MultiIndex::dominated_by(const MultiIndex& alpha) const {
  require_same_dim(*this, alpha);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] > alpha.c_[j]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_dim(*this, other);
  MultiIndex r = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += other.c_[j];
  return r;
}

MultiIndex MultiIndex::scaled(int lambda) const {
  if (lambda < 0) throw std::invalid_argument("multi-index scale must be non-negative");
  MultiIndex r = *this;
  for (int& v : r.c_) v *= lambda;
  return r;
}

MultiIndex MultiIndex::with(std::size_t axis, int value) const {
  if (axis >= c_.size()) throw std::invalid_argument("multi-index axis out of range");
  if (value < 0) throw std::invalid_argument("multi-index components must be non-negative");
  MultiIndex r = *this;
  r.c_[axis] = value;
  return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  // larger tuple first within a level
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (a[j] != b[j]) return b[j] <=> a[j];
  }
  return std::strong_ordering::equal;
}

BigInt factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt factorial(const MultiIndex& alpha) {
  BigInt r = 1;
  for (int v : alpha.components()) r *= factorial(v);
  return r;
}

std::optional<MultiIndex> sub_checked(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  std::vector<int> d(alpha.dim());
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    d[j] = alpha[j] - beta[j];
    if (d[j] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(d));
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> c(a.components().begin(), a.components().end());
  c.insert(c.end(), b.components().begin(), b.components().end());
  return MultiIndex(std::move(c));
}

std::vector<MultiIndex> enumerate_level(std::size_t n, int m) {
  if (n == 0) throw std::invalid_argument("dimension must be at least 1");
  if (m < 0) throw std::invalid_argument("level must be non-negative");
  std::vector<MultiIndex> out;
  std::vector<int> work(n, 0);
  fill_level(work, 0, m, out);
  return out;
}

BigInt level_size(std::size_t n, int m) {
  const int ni = static_cast<int>(n);
  return factorial(ni + m - 1) / (factorial(ni - 1) * factorial(m));
}

std::vector<MultiIndex> enumerate_half_dominated(const MultiIndex& alpha) {
  std::vector<int> bounds(alpha.dim());
  for (std::size_t j = 0; j < alpha.dim(); ++j) bounds[j] = alpha[j] / 2;
  return box(bounds);
}

std::vector<MultiIndex> enumerate_dominated(const MultiIndex& alpha) {
  return box({alpha.components().begin(), alpha.components().end()});
}

std::string to_string(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    if (j) s += '.';
    s += std::to_string(alpha[j]);
  }
  return s;
}

MultiIndex parse_multiindex(std::string_view text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string_view part = text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size() || v < 0) {
      throw std::invalid_argument("malformed multi-index '" + std::string(text) + "'");
    }
    c.push_back(v);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return MultiIndex(std::move(c));
}

}  // namespace gwc

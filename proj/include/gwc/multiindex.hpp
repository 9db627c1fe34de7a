#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gwc {

using BigInt = boost::multiprecision::cpp_int;

/// Multi-index alpha = (alpha_1, ..., alpha_n) with non-negative entries.
///
/// The dimension is a runtime value. Ordering is graded lexicographic:
/// lower total degree first, and within one degree the lexicographically
/// larger tuple first, so level 2 in two dimensions reads (2,0), (1,1), (0,2).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : c_(dim, 0) {}
  MultiIndex(std::initializer_list<int> components);
  explicit MultiIndex(std::vector<int> components);

  /// e_j: zero except for a one in slot `axis` (zero-based).
  static MultiIndex unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return c_.size(); }
  int operator[](std::size_t j) const { return c_[j]; }
  std::span<const int> components() const { return c_; }

  /// |alpha|, recomputed on every call.
  int order() const;
  bool is_zero() const { return order() == 0; }

  /// beta <= alpha componentwise (this plays beta).
  bool dominated_by(const MultiIndex& alpha) const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex scaled(int lambda) const;

  /// Same index with slot `axis` replaced.
  MultiIndex with(std::size_t axis, int value) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> c_;
};

BigInt factorial(int k);

/// alpha! = prod_j alpha_j!
BigInt factorial(const MultiIndex& alpha);

/// alpha - beta when beta <= alpha; nullopt otherwise. Throws on dimension mismatch.
std::optional<MultiIndex> sub_checked(const MultiIndex& alpha, const MultiIndex& beta);

/// Concatenation (alpha, beta) as one index of dimension dim(alpha)+dim(beta).
MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

/// All alpha in Z_{>=0}^n with |alpha| = m, graded lexicographic order.
std::vector<MultiIndex> enumerate_level(std::size_t n, int m);

/// Number of indices of dimension n and order m: (n+m-1)! / ((n-1)! m!).
BigInt level_size(std::size_t n, int m);

/// All beta with 2 beta <= alpha.
std::vector<MultiIndex> enumerate_half_dominated(const MultiIndex& alpha);

/// All beta with beta <= alpha.
std::vector<MultiIndex> enumerate_dominated(const MultiIndex& alpha);

/// Dot-separated form "a1.a2.....an" used in CSV columns.
std::string to_string(const MultiIndex& alpha);
MultiIndex parse_multiindex(std::string_view text);

}  // namespace gwc

#pragma once

#include <complex>
#include <map>
#include <string>

#include "gwc/multiindex.hpp"
#include "gwc/numeric.hpp"

namespace gwc {

/// Exact Laurent polynomial sum_k c_k w^k in the parameter w, integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * w^k
  LaurentPoly(BigInt coefficient, int exponent);

  static LaurentPoly constant(BigInt c) { return {std::move(c), 0}; }

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& s);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const { return LaurentPoly(*this) += o; }
  LaurentPoly operator-(const LaurentPoly& o) const { return LaurentPoly(*this) -= o; }
  LaurentPoly operator-() const;

  /// Multiply by w^k.
  LaurentPoly shifted(int k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  template <typename Scalar>
  std::complex<Scalar> evaluate(std::complex<Scalar> w) const {
    std::complex<Scalar> s{0};
    for (const auto& [k, c] : terms_) s += c.template convert_to<Scalar>() * ipow(w, k);
    return s;
  }

 private:
  void add_term(int k, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// "c*w^k" terms joined by '+', highest exponent first; "0" when empty.
std::string to_string(const LaurentPoly& p);

}  // namespace gwc

#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gwc/kernel.hpp"
#include "gwc/laurent.hpp"
#include "gwc/multiindex.hpp"
#include "gwc/numeric.hpp"

namespace gwc {

/// Polynomial in x in R^n whose coefficients are Laurent polynomials in w:
/// sum_beta c_beta(w) x^beta.
class MixedPoly {
 public:
  explicit MixedPoly(std::size_t dim = 1) : dim_(dim) {}

  /// c(w) x^beta
  static MixedPoly monomial(const MultiIndex& beta, LaurentPoly c = LaurentPoly::constant(1));

  std::size_t dim() const { return dim_; }
  const std::map<MultiIndex, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(const MultiIndex& beta) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& beta, const LaurentPoly& c);
  MixedPoly& operator+=(const MixedPoly& o);
  MixedPoly& operator-=(const MixedPoly& o);
  MixedPoly operator+(const MixedPoly& o) const { return MixedPoly(*this) += o; }
  MixedPoly operator-(const MixedPoly& o) const { return MixedPoly(*this) -= o; }

  MixedPoly times(const LaurentPoly& c) const;
  /// Multiply by x^e.
  MixedPoly times_monomial(const MultiIndex& e) const;

  friend bool operator==(const MixedPoly&, const MixedPoly&) = default;

  template <typename Scalar>
  std::complex<Scalar> evaluate(std::complex<Scalar> w, std::span<const Scalar> x) const {
    std::vector<std::complex<Scalar>> parts;
    parts.reserve(terms_.size());
    for (const auto& [beta, c] : terms_) {
      Scalar mono = 1;
      for (std::size_t j = 0; j < dim_; ++j) mono *= ipow(x[j], beta[j]);
      parts.push_back(c.evaluate(w) * mono);
    }
    return pairwise_sum(parts);
  }

 private:
  std::size_t dim_;
  std::map<MultiIndex, LaurentPoly> terms_;
};

/// Which Hermite family: H_{w,a}(x) = (-1)^{|a|} e^{|x|^2/w} d^a e^{-|x|^2/w},
/// or h_{w,a}(x) = H_{w,a}(x/2).
enum class Flavor { H, h };

struct HermitePoly {
  MultiIndex order;
  Flavor flavor;
  MixedPoly poly;

  template <typename Scalar>
  std::complex<Scalar> evaluate(std::complex<Scalar> w, std::span<const Scalar> x) const {
    return poly.evaluate(w, x);
  }
};

/// Closed form sum_{2b<=a} (-1)^{|b|} a!/(b!(a-2b)!) w^{-|a-b|} x^{a-2b};
/// flavor H carries the extra 2^{|a-2b|} of (2x)^{a-2b}.
HermitePoly hermite_closed_form(const MultiIndex& alpha, Flavor flavor);

/// Same polynomial generated from the constant 1 by the three-term recurrence only.
HermitePoly hermite_from_recurrence(const MultiIndex& alpha, Flavor flavor);

/// Both sides of the three-term recurrence along `axis` (zero-based):
///   h:  x_j h_a        = w h_{a+e_j} + 2 a_j h_{a-e_j}
///   H:  2 x_j H_a      = w H_{a+e_j} + 2 a_j H_{a-e_j}
/// The second right-hand term is absent when a_j = 0.
struct RecurrenceIdentity {
  MixedPoly lhs;
  MixedPoly rhs;
  bool holds() const { return lhs == rhs; }
};
RecurrenceIdentity hermite_recurrence(const MultiIndex& alpha, std::size_t axis,
                                      Flavor flavor = Flavor::h);

/// Inverse expansion x^a = sum_{2b<=a} a!/(b!(a-2b)!) w^{|a-b|} h_{w,a-2b}(x).
struct MonomialTerm {
  MultiIndex beta;
  LaurentPoly weight;
};
std::vector<MonomialTerm> monomial_expand(const MultiIndex& alpha);

/// Substitutes the closed forms into monomial_expand and sums.
MixedPoly reconstruct_monomial(const MultiIndex& alpha);

/// h -> H transport: multiplies the x^beta coefficient by 2^{|beta|}.
MixedPoly rescale_argument_by_two(const MixedPoly& p);

/// (d^a G_w)(x) = (-2)^{-|a|} h_{w,a}(x) G_w(x).
template <typename Scalar>
std::complex<Scalar> gaussian_derivative(const HermitePoly& h_alpha, std::complex<Scalar> omega,
                                         std::span<const Scalar> x) {
  if (h_alpha.flavor != Flavor::h) throw std::invalid_argument("gaussian_derivative needs flavor h");
  const Scalar scale = ipow(Scalar(-2), -h_alpha.order.order());
  return scale * h_alpha.evaluate(omega, x) * kernel(omega, x);
}

template <typename Scalar>
std::complex<Scalar> gaussian_derivative(const MultiIndex& alpha, std::complex<Scalar> omega,
                                         std::span<const Scalar> x) {
  if (alpha.dim() != x.size()) throw std::invalid_argument("point dimension mismatch");
  return gaussian_derivative(hermite_closed_form(alpha, Flavor::h), omega, x);
}

/// Lines "beta<TAB>laurent" in graded order.
std::string format_polynomial(const MixedPoly& p);

}  // namespace gwc

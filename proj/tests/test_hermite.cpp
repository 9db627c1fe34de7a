#include <random>

#include "doctest.h"
#include "gwc/hermite.hpp"
#include "oracles.hpp"

using namespace gwc;

namespace {

LaurentPoly w(long c, int k) { return LaurentPoly(BigInt(c), k); }

MixedPoly poly1(std::initializer_list<std::pair<int, LaurentPoly>> terms) {
  MixedPoly p(1);
  for (const auto& [deg, c] : terms) p.add_term(MultiIndex{deg}, c);
  return p;
}

std::vector<MultiIndex> indices_up_to(std::size_t n, int max_order) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= max_order; ++m) {
    for (auto& a : enumerate_level(n, m)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("LaurentPoly arithmetic") {
  const LaurentPoly a = w(3, -2) + w(1, 1);
  const LaurentPoly b = w(-3, -2) + w(2, 0);
  CHECK((a + b) == w(1, 1) + w(2, 0));
  CHECK((a + b).terms().size() == 2);
  CHECK((a - a).is_zero());
  CHECK((a * b).coefficient(-4) == -9);
  CHECK((a * b).coefficient(-1) == -3);
  CHECK(a.shifted(2) == w(3, 0) + w(1, 3));
  CHECK(to_string(LaurentPoly()) == "0");
  const auto v = a.evaluate(std::complex<double>(2, 0));
  CHECK(v.real() == doctest::Approx(2.75));
}

TEST_CASE("closed form: low orders") {
  CHECK(hermite_closed_form({0}, Flavor::h).poly == MixedPoly::monomial({0}));
  CHECK(hermite_closed_form({0}, Flavor::H).poly == MixedPoly::monomial({0}));
  CHECK(hermite_closed_form({1}, Flavor::h).poly == poly1({{1, w(1, -1)}}));
  CHECK(hermite_closed_form({2}, Flavor::h).poly == poly1({{2, w(1, -2)}, {0, w(-2, -1)}}));
  // H_{w,(2)} = 4 w^-2 x^2 - 2 w^-1
  CHECK(hermite_closed_form({2}, Flavor::H).poly == poly1({{2, w(4, -2)}, {0, w(-2, -1)}}));
}

TEST_CASE("closed form support structure") {
  for (const MultiIndex& a : indices_up_to(3, 6)) {
    for (Flavor f : {Flavor::h, Flavor::H}) {
      const HermitePoly hp = hermite_closed_form(a, f);
      for (const auto& [beta, c] : hp.poly.terms()) {
        const auto d = sub_checked(a, beta);
        REQUIRE(d.has_value());
        for (int v : d->components()) CHECK(v % 2 == 0);
        CHECK_FALSE(c.is_zero());
      }
    }
  }
}

TEST_CASE("closed form matches Rodrigues differentiation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, n == 3 ? 6 : 8)) {
      const MixedPoly H = oracle::rodrigues_H(a);
      CHECK(hermite_closed_form(a, Flavor::H).poly == H);
      bool exact = false;
      CHECK(hermite_closed_form(a, Flavor::h).poly == oracle::halve_argument(H, exact));
      CHECK(exact);
    }
  }
}

TEST_CASE("closed form coefficient checksum") {
  // At w = -1 every 1D coefficient of h_{(k)} has sign (-1)^k and their moduli sum to a(k).
  for (int k = 0; k <= 12; ++k) {
    BigInt total = 0;
    const HermitePoly hp = hermite_closed_form({k}, Flavor::h);
    for (const auto& [beta, c] : hp.poly.terms()) {
      for (const auto& [e, v] : c.terms()) total += (e % 2 == 0 ? v : BigInt(-v));
    }
    CHECK(total == (k % 2 ? BigInt(-1) : BigInt(1)) * oracle::coloured_involutions(k));
  }
}

TEST_CASE("recurrence examples") {
  auto r0 = hermite_recurrence({0}, 0);
  CHECK(r0.holds());
  CHECK(r0.lhs == poly1({{1, w(1, 0)}}));

  auto r1 = hermite_recurrence({1}, 0);
  CHECK(r1.holds());
  CHECK(r1.lhs == poly1({{2, w(1, -1)}}));

  auto r2 = hermite_recurrence({1, 0}, 1);
  CHECK(r2.holds());
  MixedPoly x1x2(2);
  x1x2.add_term({1, 1}, w(1, -1));
  CHECK(r2.lhs == x1x2);
}

TEST_CASE("recurrence holds exactly for both flavors") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, 7)) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(hermite_recurrence(a, j, Flavor::h).holds());
        CHECK(hermite_recurrence(a, j, Flavor::H).holds());
      }
    }
  }
}

TEST_CASE("recurrence generation reproduces the closed form") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, 8)) {
      CHECK(hermite_from_recurrence(a, Flavor::h).poly == hermite_closed_form(a, Flavor::h).poly);
      CHECK(hermite_from_recurrence(a, Flavor::H).poly == hermite_closed_form(a, Flavor::H).poly);
    }
  }
}

TEST_CASE("monomial expansion examples") {
  const auto e0 = monomial_expand({0});
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].weight == w(1, 0));

  const auto e2 = monomial_expand({2});
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].beta == MultiIndex{0});
  CHECK(e2[0].weight == w(1, 2));
  CHECK(e2[1].beta == MultiIndex{1});
  CHECK(e2[1].weight == w(2, 1));

  const auto e11 = monomial_expand({1, 1});
  REQUIRE(e11.size() == 1);
  CHECK(e11[0].weight == w(1, 2));
  CHECK(reconstruct_monomial({1, 1}) == MixedPoly::monomial({1, 1}));
}

TEST_CASE("monomial expansion reconstructs x^alpha exactly") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, 8)) {
      CHECK(reconstruct_monomial(a) == MixedPoly::monomial(a));
    }
  }
}

TEST_CASE("flavor transport by powers of two") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, 6)) {
      CHECK(rescale_argument_by_two(hermite_closed_form(a, Flavor::h).poly) ==
            hermite_closed_form(a, Flavor::H).poly);
    }
  }
}

TEST_CASE("Gaussian derivative examples") {
  const std::complex<double> one(1, 0);
  const double origin[] = {0.0};
  CHECK(std::abs(gaussian_derivative<double>(MultiIndex{0}, one, origin) - 0.282094791773878143) < 1e-16);
  CHECK(std::abs(gaussian_derivative<double>(MultiIndex{1}, one, origin)) == 0.0);
  CHECK(std::abs(gaussian_derivative<double>(MultiIndex{2}, one, origin) + 0.141047395886939072) < 1e-16);
  CHECK_THROWS(gaussian_derivative<double>(MultiIndex{1}, {0, 0}, origin));
  CHECK_THROWS(gaussian_derivative<double>(hermite_closed_form({1}, Flavor::H), one, origin));
}

TEST_CASE("Gaussian derivative agrees with finite differences") {
  std::mt19937_64 gen(20240611);
  std::normal_distribution<double> coord(0.0, 1.0);
  const std::complex<double> omegas[] = {{1, 0}, {0.7, 0.4}, {2, -1.5}};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MultiIndex& a : indices_up_to(n, 3)) {
      for (auto om : omegas) {
        for (int s = 0; s < 20; ++s) {
          std::vector<double> x(n);
          std::vector<oracle::WideReal> xw(n);
          double norm2 = 0;
          for (std::size_t j = 0; j < n; ++j) {
            x[j] = coord(gen);
            xw[j] = x[j];
            norm2 += x[j] * x[j];
          }
          const oracle::WideReal h = oracle::WideReal(1e-4) * (1 + std::sqrt(norm2));
          const auto ref = oracle::to_double(
              oracle::fd_gaussian_derivative_richardson(a, oracle::WideComplex(om.real(), om.imag()), xw, h));
          const auto got = gaussian_derivative<double>(a, om, x);
          INFO("alpha=" << to_string(a) << " omega=" << om << " x0=" << x[0] << " got=" << got << " ref=" << ref);
          CHECK(std::abs(got - ref) / std::abs(ref) <= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("text output") {
  CHECK(format_polynomial(hermite_closed_form({2}, Flavor::h).poly) == "0\t-2*w^-1\n2\t1*w^-2\n");
}

#include "doctest.h"

#include <cmath>
#include <random>

#include "cartanlab/bigint.hpp"
#include "cartanlab/lp.hpp"
#include "cartanlab/powmu.hpp"
#include "cartanlab/rational.hpp"

using namespace cartanlab;

TEST_CASE("bigint arithmetic round trips") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("-987654321098765432109");
  CHECK((a + b - a) == b);
  CHECK((a * b).to_string() == "-121932631137021795226076817523485749121223746380010");
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(BigInt::gcd(BigInt(462), BigInt(-1071)) == BigInt(21));
  CHECK(BigInt(1).shifted_left(100).to_string() == "1267650600228229401496703205376");
  CHECK(BigInt::from_string("1024").log2_abs() == doctest::Approx(10.0));
  long e;
  double m = BigInt(-6).to_double_exp(e);
  CHECK(std::ldexp(m, static_cast<int>(e)) == -6.0);
}

TEST_CASE("rational normalization, parsing and exact double conversion") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1.5e2") == Rational(150));
  CHECK(Rational::parse("2.5e-1") == Rational(1, 4));
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(-1.0) == Rational(-1));
  CHECK(Rational(22, 7).to_double() == doctest::Approx(22.0 / 7.0).epsilon(1e-15));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("linear solving and kernels over the rationals") {
  RatMat A(2, 2);
  A(0, 0) = Rational(2); A(0, 1) = Rational(1);
  A(1, 0) = Rational(1); A(1, 1) = Rational(3);
  RatVec b{Rational(5), Rational(10)};
  RatVec x = solve_linear(A, b);
  CHECK(x[0] == Rational(1));
  CHECK(x[1] == Rational(3));

  RatMat K(1, 3);
  K(0, 0) = Rational(1); K(0, 1) = Rational(1); K(0, 2) = Rational(1);
  auto kern = rat_kernel(K);
  REQUIRE(kern.size() == 2);
  for (const auto& v : kern) CHECK(dot(v, RatVec{Rational(1), Rational(1), Rational(1)}).is_zero());
}

TEST_CASE("exact LP feasibility") {
  {
    // x >= 1, -x >= -2 (i.e. 1 <= x <= 2)
    LinearConstraints lc;
    lc.nvars = 1;
    lc.add_ge({Rational(1)}, Rational(1));
    lc.add_ge({Rational(-1)}, Rational(-2));
    auto r = lp_feasible(lc);
    REQUIRE(r.feasible);
    CHECK(r.point[0] >= Rational(1));
    CHECK(r.point[0] <= Rational(2));
  }
  {
    // x >= 1 and x <= 0: infeasible
    LinearConstraints lc;
    lc.nvars = 1;
    lc.add_ge({Rational(1)}, Rational(1));
    lc.add_ge({Rational(-1)}, Rational(0));
    CHECK_FALSE(lp_feasible(lc).feasible);
  }
  {
    // equality x + y = 1 with x, y >= 0 and x - y >= 1/2
    LinearConstraints lc;
    lc.nvars = 2;
    lc.add_eq({Rational(1), Rational(1)}, Rational(1));
    lc.add_ge({Rational(1), Rational(0)}, Rational(0));
    lc.add_ge({Rational(0), Rational(1)}, Rational(0));
    lc.add_ge({Rational(1), Rational(-1)}, Rational(1, 2));
    auto r = lp_feasible(lc);
    REQUIRE(r.feasible);
    CHECK(r.point[0] + r.point[1] == Rational(1));
    CHECK(r.point[0] - r.point[1] >= Rational(1, 2));
  }
}

TEST_CASE("charpoly of small integer matrices") {
  // [[2,1],[1,2]] -> x^2 - 4x + 3
  std::vector<BigInt> m{BigInt(2), BigInt(1), BigInt(1), BigInt(2)};
  auto c = charpoly(m, 2);
  CHECK(c[2] == BigInt(1));
  CHECK(c[1] == BigInt(-4));
  CHECK(c[0] == BigInt(3));
}

TEST_CASE("exact log singular values of powers agree with direct SVD at k=0") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    Mat g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = u(rng);
    if (std::fabs(g.determinant()) < 1e-3) continue;
    auto exact = log_singular_values_of_power(g, 0);
    auto sv = singular_values(g);
    REQUIRE(exact.size() == 3);
    for (int i = 0; i < 3; ++i)
      CHECK(exact[i] == doctest::Approx(std::log(sv[i])).epsilon(1e-10));
  }
}

TEST_CASE("exact powers on a diagonal matrix") {
  Mat g = Mat::Zero(3, 3);
  g(0, 0) = 2; g(1, 1) = 2; g(2, 2) = 0.25;
  auto logs = log_singular_values_of_power(g, 6);  // g^64
  CHECK(logs[0] == doctest::Approx(64 * std::log(2)).epsilon(1e-13));
  CHECK(logs[1] == doctest::Approx(64 * std::log(2)).epsilon(1e-13));
  CHECK(logs[2] == doctest::Approx(-128 * std::log(2)).epsilon(1e-13));
}

TEST_CASE("exact powers consistent under squaring for generic matrices") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 10; ++t) {
    Mat g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = u(rng);
    g /= std::cbrt(std::fabs(g.determinant()) + 1e-12);
    auto l5 = log_singular_values_of_power(g, 5);
    Mat g2 = g * g;
    auto l4 = log_singular_values_of_power(g2, 4);
    for (int i = 0; i < 3; ++i) CHECK(l5[i] == doctest::Approx(l4[i]).epsilon(1e-9));
  }
}

#include "doctest.h"

#include <cmath>
#include <random>

#include "cartanlab/cartan.hpp"

using namespace cartanlab;

namespace {

Mat diag3(double a, double b, double c) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a; m(1, 1) = b; m(2, 2) = c;
  return m;
}

Mat random_sl(int n, std::mt19937& rng, double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  for (;;) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = u(rng);
    double d = g.determinant();
    if (std::fabs(d) < 1e-3) continue;
    if (d < 0) {
      for (int i = 0; i < n; ++i) g(0, i) = -g(0, i);
      d = -d;
    }
    return g / std::pow(d, 1.0 / n);
  }
}

Mat random_so(int p, int q, std::mt19937& rng, double span = 0.8) {
  std::uniform_real_distribution<double> u(-span, span);
  int n = p + q;
  Mat x = Mat::Zero(n, n);
  // Lie algebra: [[A, B], [B^T, D]] with A, D antisymmetric
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) { x(i, j) = u(rng); x(j, i) = -x(i, j); }
  for (int i = p; i < n; ++i)
    for (int j = i + 1; j < n; ++j) { x(i, j) = u(rng); x(j, i) = -x(i, j); }
  for (int i = 0; i < p; ++i)
    for (int j = p; j < n; ++j) { x(i, j) = u(rng); x(j, i) = x(i, j); }
  return matrix_exp(x);
}

std::vector<double> iota_image(const RootSystem& sys, const std::vector<double>& v) {
  RatMat iota = opposition_involution(sys);
  std::vector<double> r(v.size(), 0.0);
  for (int i = 0; i < sys.ambient_dim; ++i)
    for (int j = 0; j < sys.ambient_dim; ++j) r[i] += iota(i, j).to_double() * v[j];
  return r;
}

double dist_inf(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("mu of the identity and of the stock diagonal element") {
  GroupSpec sl3 = GroupSpec::sl(3);
  auto id = group_identity(sl3);
  CHECK(mu(sl3, id).norm() == doctest::Approx(0.0).epsilon(1e-15));

  auto g = validate_element(sl3, diag3(2, 2, 0.25));
  auto m = mu(sl3, g);
  const double l2 = std::log(2.0);
  CHECK(m.coords[0] == doctest::Approx(l2).epsilon(1e-13));
  CHECK(m.coords[1] == doctest::Approx(l2).epsilon(1e-13));
  CHECK(m.coords[2] == doctest::Approx(-2 * l2).epsilon(1e-13));
}

TEST_CASE("mu agrees with the exact power engine at k = 0") {
  GroupSpec sl3 = GroupSpec::sl(3);
  std::mt19937 rng(2);
  for (int t = 0; t < 25; ++t) {
    auto g = validate_element(sl3, random_sl(3, rng), 1e-8);
    auto a = mu(sl3, g);
    auto b = mu_power(sl3, g, 0);
    CHECK(dist_inf(a.coords, b.coords) < 1e-10);
  }
}

TEST_CASE("mu lies in the closed chamber and sums to zero for SL") {
  GroupSpec sl4 = GroupSpec::sl(4);
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    auto g = validate_element(sl4, random_sl(4, rng), 1e-7);
    auto m = mu(sl4, g);
    double sum = 0;
    for (size_t i = 0; i + 1 < m.coords.size(); ++i) {
      CHECK(m.coords[i] >= m.coords[i + 1] - 1e-12);
      sum += m.coords[i];
    }
    sum += m.coords.back();
    CHECK(std::fabs(sum) < 1e-10);
  }
}

TEST_CASE("opposition property mu(g^-1) = iota mu(g)") {
  std::mt19937 rng(5);
  {
    GroupSpec sl3 = GroupSpec::sl(3);
    RootSystem sys = sl3.root_system();
    for (int t = 0; t < 50; ++t) {
      auto g = validate_element(sl3, random_sl(3, rng), 1e-7);
      auto lhs = mu(sl3, group_inverse(sl3, g));
      auto rhs = iota_image(sys, mu(sl3, g).coords);
      CHECK(dist_inf(lhs.coords, rhs) < 1e-9);
    }
  }
  {
    GroupSpec so32 = GroupSpec::so(3, 2);
    for (int t = 0; t < 50; ++t) {
      auto g = validate_element(so32, random_so(3, 2, rng), 1e-7);
      auto lhs = mu(so32, group_inverse(so32, g));
      auto rhs = mu(so32, g);  // iota is trivial on B2
      CHECK(dist_inf(lhs.coords, rhs.coords) < 1e-9);
    }
  }
}

TEST_CASE("strong subadditivity on random triples") {
  GroupSpec sl3 = GroupSpec::sl(3);
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto g = validate_element(sl3, random_sl(3, rng), 1e-7);
    auto g1 = validate_element(sl3, random_sl(3, rng), 1e-7);
    auto g2 = validate_element(sl3, random_sl(3, rng), 1e-7);
    auto m = mu(sl3, g);
    auto m1 = mu(sl3, g1);
    auto m2 = mu(sl3, g2);
    auto prod = group_product(sl3, g1, group_product(sl3, g, g2));
    auto mp = mu(sl3, prod);
    double diff = 0;
    for (size_t i = 0; i < m.coords.size(); ++i) {
      double d = mp.coords[i] - m.coords[i];
      diff += d * d;
    }
    CHECK(std::sqrt(diff) <= m1.norm() + m2.norm() + 1e-9);
  }
}

TEST_CASE("vector-valued distance properties") {
  GroupSpec sl3 = GroupSpec::sl(3);
  RootSystem sys = sl3.root_system();
  std::mt19937 rng(11);
  auto g = validate_element(sl3, random_sl(3, rng), 1e-7);
  auto gp = validate_element(sl3, random_sl(3, rng), 1e-7);
  auto h = validate_element(sl3, random_sl(3, rng), 1e-7);

  CHECK(vec_distance(sl3, g, g).norm() < 1e-10);

  auto fwd = vec_distance(sl3, g, gp);
  auto bwd = vec_distance(sl3, gp, g);
  CHECK(dist_inf(bwd.coords, iota_image(sys, fwd.coords)) < 1e-9);

  auto hg = group_product(sl3, h, g);
  auto hgp = group_product(sl3, h, gp);
  auto inv = vec_distance(sl3, hg, hgp);
  CHECK(dist_inf(inv.coords, fwd.coords) < 1e-8);
}

TEST_CASE("jordan projection basics") {
  GroupSpec sl3 = GroupSpec::sl(3);
  {
    Mat u = Mat::Identity(3, 3);
    u(0, 1) = 3.5; u(0, 2) = -1; u(1, 2) = 2;
    auto g = validate_element(sl3, u);
    CHECK(jordan(sl3, g).norm() == doctest::Approx(0.0).epsilon(1e-10));
  }
  {
    auto g = validate_element(sl3, diag3(4, 1, 0.25));
    auto l = jordan(sl3, g);
    const double l4 = std::log(4.0);
    CHECK(l.coords[0] == doctest::Approx(l4).epsilon(1e-12));
    CHECK(l.coords[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(l.coords[2] == doctest::Approx(-l4).epsilon(1e-12));
  }
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    auto g = validate_element(sl3, random_sl(3, rng), 1e-7);
    auto l = jordan(sl3, g);
    // |lambda| <= |mu|
    CHECK(l.norm() <= mu(sl3, g).norm() + 1e-10);
    // conjugation invariance
    auto h = validate_element(sl3, random_sl(3, rng), 1e-7);
    auto conj = group_product(sl3, h, group_product(sl3, g, group_inverse(sl3, h)));
    CHECK(dist_inf(jordan(sl3, GroupElement{conj.blocks, 1e-5}).coords, l.coords) < 1e-7);
    // lambda(g^n) = n lambda(g)
    auto g2 = group_product(sl3, g, g);
    auto l2 = jordan(sl3, g2);
    for (int i = 0; i < 3; ++i) CHECK(l2.coords[i] == doctest::Approx(2 * l.coords[i]).epsilon(1e-8));
  }
}

TEST_CASE("SO(p,q): paired singular values and chamber coordinates") {
  GroupSpec so32 = GroupSpec::so(3, 2);
  std::mt19937 rng(17);
  for (int t = 0; t < 25; ++t) {
    Mat g = random_so(3, 2, rng);
    auto e = validate_element(so32, g, 1e-7);
    auto s = singular_values(g);
    // +-pairs: s[i] * s[n-1-i] = 1, middle value 1
    CHECK(s[0] * s[4] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(s[1] * s[3] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(s[2] == doctest::Approx(1.0).epsilon(1e-8));
    auto m = mu(so32, e);
    REQUIRE(m.coords.size() == 2);
    CHECK(m.coords[0] >= m.coords[1] - 1e-12);
    CHECK(m.coords[1] >= -1e-12);
  }
  CHECK_THROWS(GroupSpec::so(2, 3));  // normalize to p >= q first
}

TEST_CASE("complex and quaternionic families") {
  {
    GroupSpec sl2c = GroupSpec::sl(2, 'C');
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = std::complex<double>(0, 2);   // 2i
    m(1, 1) = std::complex<double>(0, -0.5);  // det = 1
    auto g = validate_element(sl2c, m);
    auto v = mu(sl2c, g);
    CHECK(v.coords[0] == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(v.coords[1] == doctest::Approx(-std::log(2)).epsilon(1e-12));
    CHECK(dist_inf(jordan(sl2c, g).coords, v.coords) < 1e-10);
  }
  {
    // diagonal quaternionic element diag(2, 1/2) in the complex realization
    GroupSpec sl2h = GroupSpec::sl(2, 'H');
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = 2; m(1, 1) = 0.5; m(2, 2) = 2; m(3, 3) = 0.5;
    auto g = validate_element(sl2h, m);
    auto v = mu(sl2h, g);
    REQUIRE(v.coords.size() == 2);
    CHECK(v.coords[0] == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(v.coords[1] == doctest::Approx(-std::log(2)).epsilon(1e-12));
    // a non-quaternionic matrix is rejected
    CMat bad = CMat::Identity(4, 4);
    bad(0, 1) = std::complex<double>(0, 1);
    CHECK_THROWS(validate_element(sl2h, bad));
  }
}

TEST_CASE("products project componentwise") {
  GroupSpec prod = GroupSpec::product({GroupSpec::sl(2), GroupSpec::sl(3)});
  std::mt19937 rng(19);
  Mat a = random_sl(2, rng), b = random_sl(3, rng);
  std::vector<LeafMatrix> blocks{LeafMatrix::of(a), LeafMatrix::of(b)};
  auto g = validate_element(prod, blocks, 1e-7);
  auto m = mu(prod, g);
  REQUIRE(m.coords.size() == 5);
  GroupSpec sl2 = GroupSpec::sl(2), sl3 = GroupSpec::sl(3);
  auto ma = mu(sl2, validate_element(sl2, a, 1e-7));
  auto mb = mu(sl3, validate_element(sl3, b, 1e-7));
  CHECK(dist_inf({m.coords[0], m.coords[1]}, ma.coords) < 1e-14);
  CHECK(dist_inf({m.coords[2], m.coords[3], m.coords[4]}, mb.coords) < 1e-14);
}

TEST_CASE("validation failures carry residuals") {
  GroupSpec sl3 = GroupSpec::sl(3);
  CHECK_THROWS_WITH_AS(validate_element(sl3, Mat(2 * Mat::Identity(3, 3))),
                       doctest::Contains("det=1"), std::domain_error);
  Mat nf = Mat::Identity(3, 3);
  nf(1, 1) = std::nan("");
  CHECK_THROWS(validate_element(sl3, nf));
  GroupSpec so21 = GroupSpec::so(2, 1);
  Mat notso = Mat::Identity(3, 3);
  notso(0, 1) = 0.5;
  CHECK_THROWS_WITH_AS(validate_element(so21, notso), doctest::Contains("g^T J g"),
                       std::domain_error);
}

TEST_CASE("exact powers: the cyclic diagonal example and the jordan estimate") {
  GroupSpec sl3 = GroupSpec::sl(3);
  auto g = validate_element(sl3, diag3(2, 2, 0.25));
  auto m64 = mu_power(sl3, g, 6);
  const double l2 = std::log(2.0);
  CHECK(m64.coords[0] == doctest::Approx(64 * l2).epsilon(1e-12));
  CHECK(m64.coords[2] == doctest::Approx(-128 * l2).epsilon(1e-12));

  std::mt19937 rng(23);
  for (int t = 0; t < 5; ++t) {
    auto h = validate_element(sl3, random_sl(3, rng), 1e-7);
    double resid = 0;
    auto est = jordan_power_estimate(sl3, h, 8, &resid);
    auto l = jordan(sl3, h);
    // the estimate approaches the eigenvalue-based projection
    CHECK(dist_inf(est.coords, l.coords) < 0.05 * l.norm() + 1e-3);
    CHECK(resid < 0.2);
  }
}

TEST_CASE("jordan projection for SO(p,q) elements") {
  GroupSpec so32 = GroupSpec::so(3, 2);
  std::mt19937 rng(29);
  for (int t = 0; t < 15; ++t) {
    auto g = validate_element(so32, random_so(3, 2, rng), 1e-7);
    auto l = jordan(so32, g);
    REQUIRE(l.coords.size() == 2);
    CHECK(l.coords[0] >= l.coords[1] - 1e-10);
    CHECK(l.coords[1] >= -1e-10);
    CHECK(l.norm() <= mu(so32, g).norm() + 1e-9);
    auto g2 = group_product(so32, g, g);
    auto l2 = jordan(so32, GroupElement{g2.blocks, 1e-5});
    for (int i = 0; i < 2; ++i)
      CHECK(l2.coords[i] == doctest::Approx(2 * l.coords[i]).epsilon(1e-7));
  }
}

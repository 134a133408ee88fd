#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace omega;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("ring operations keep the term map canonical") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  CHECK((x + y) + (x - y) == x.scaled(rat(2)));
  CHECK(x * x == [] {
    MultiPoly p(2);
    p.add_term({2, 0}, rat(1));
    return p;
  }());
  CHECK((x * x).scaled(rat(0)).is_zero());
  CHECK((x - x).terms().empty());
}

TEST_CASE("operations reject mismatched variable counts") {
  CHECK_THROWS_AS(var(2, 0) + var(3, 0), dimension_error);
  CHECK_THROWS_AS(var(2, 0) * var(3, 0), dimension_error);
}

TEST_CASE("degree and variable caps") {
  MultiPoly p(2);
  CHECK_THROWS_AS(p.add_term({65, 0}, rat(1)), resource_error);
  CHECK_THROWS_AS(MultiPoly(40), resource_error);
}

TEST_CASE("grad golden cases") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  MultiPoly h = (x * x + y * y).scaled(rat(1, 2));
  auto g = grad(h);
  CHECK(g.component(0) == x);
  CHECK(g.component(1) == y);

  MultiPoly cubic = x * x * x;
  auto gc = grad(cubic);
  CHECK(gc.component(0) == (x * x).scaled(rat(3)));
  CHECK(gc.component(1).is_zero());
}

TEST_CASE("grad of a quadratic form is Bx") {
  std::mt19937_64 rng(40);
  Mat b = testutil::random_symmetric(4, rng);
  MultiPoly h(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      h = h + (var(4, i) * var(4, j)).scaled(b(i, j) / 2);
  CHECK(grad(h) == PolyVectorField::linear(b));
}

TEST_CASE("jacobian of a linear field is its matrix") {
  std::mt19937_64 rng(41);
  Mat l = testutil::random_matrix(4, rng);
  auto j = jacobian(PolyVectorField::linear(l));
  CHECK(j == PolyMatrix::from_constant(l, 4));
}

TEST_CASE("homogeneous_parts splits and reassembles") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  std::vector<MultiPoly> comps{y + x * x, -x};
  PolyVectorField f(comps);
  auto parts = homogeneous_parts(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[1].first == 2);
  CHECK(parts[0].second.component(0) == y);
  CHECK(parts[1].second.component(0) == x * x);

  PolyVectorField sum(2);
  for (auto& [d, p] : parts) sum = sum + p;
  CHECK(sum == f);
}

TEST_CASE("homogeneous_parts of a single-degree field") {
  std::vector<MultiPoly> comps{var(2, 1), -var(2, 0)};
  auto parts = homogeneous_parts(PolyVectorField(comps));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == 1);
}

TEST_CASE("euler_integrate golden cases") {
  MultiPoly x = var(2, 0), y = var(2, 1);

  PolyVectorField f1(std::vector<MultiPoly>{x, y});
  CHECK(euler_integrate(f1, 1) == (x * x + y * y).scaled(rat(1, 2)));

  PolyVectorField f2(std::vector<MultiPoly>{(x * x).scaled(rat(3)), MultiPoly(2)});
  CHECK(euler_integrate(f2, 2) == x * x * x);

  PolyVectorField f3(std::vector<MultiPoly>{y, x});
  CHECK(euler_integrate(f3, 1) == x * y);
}

TEST_CASE("euler_integrate rejects bad inputs") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  // Not a gradient: jacobian of (y, -x) is skew, not symmetric.
  PolyVectorField rot(std::vector<MultiPoly>{y, -x});
  CHECK_THROWS_AS(euler_integrate(rot, 1), jacobian_not_symmetric_error);
  // Mixed degrees.
  PolyVectorField mixed(std::vector<MultiPoly>{x + x * x, y});
  CHECK_THROWS_AS(euler_integrate(mixed, 1), not_homogeneous_error);
}

TEST_CASE("property: grad(euler_integrate(f)) = f for gradients") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 25; ++iter) {
    // Start from a random homogeneous H and differentiate.
    unsigned k = 2 + iter % 3;
    MultiPoly h = testutil::random_poly(3, k, rng).homogeneous_part(k);
    if (h.is_zero()) continue;
    auto f = grad(h);
    CHECK(grad(euler_integrate(f, k - 1)) == f);
  }
}

TEST_CASE("property: Euler identity on homogeneous polynomials") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 25; ++iter) {
    unsigned m = 1 + iter % 5;
    MultiPoly h = testutil::random_poly(3, m, rng).homogeneous_part(m);
    MultiPoly sum(3);
    for (std::size_t i = 0; i < 3; ++i)
      sum = sum + MultiPoly::variable(3, i) * h.derivative(i);
    CHECK(sum == h.scaled(rat(long(m))));
  }
}

TEST_CASE("property: jacobian of a gradient is symmetric") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 25; ++iter) {
    MultiPoly h = testutil::random_poly(4, 5, rng);
    CHECK(jacobian(grad(h)).is_symmetric());
  }
}

TEST_CASE("compose_linear and push_linear with the identity") {
  std::mt19937_64 rng(45);
  MultiPoly h = testutil::random_poly(3, 4, rng);
  std::vector<MultiPoly> comps{h, h * h, h + h};
  PolyVectorField f(comps);
  CHECK(compose_linear(f, Mat::identity(3)) == f);
  CHECK(push_linear(f, Mat::identity(3)) == f);
}

TEST_CASE("push_linear scaling case, worked by hand") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  PolyVectorField rot(std::vector<MultiPoly>{y, -x});
  Mat s(2, 2);
  s(0, 0) = 2;
  s(1, 1) = rat(1, 2);
  // S^-1 v = (v1/2, 2 v2), X there = (2 v2, -v1/2), S applied on top
  // gives (4 v2, -v1/4).
  PolyVectorField expect(
      std::vector<MultiPoly>{y.scaled(rat(4)), x.scaled(rat(-1, 4))});
  CHECK(push_linear(rot, s) == expect);

  // The H = xy field (x, -y) really is fixed by this scaling.
  PolyVectorField xy_field(std::vector<MultiPoly>{x, -y});
  CHECK(push_linear(xy_field, s) == xy_field);
}

TEST_CASE("push_linear rejects singular maps") {
  PolyVectorField f(std::vector<MultiPoly>{var(2, 0), var(2, 1)});
  CHECK_THROWS_AS(push_linear(f, Mat::zero(2)), singular_error);
}

TEST_CASE("compose_linear matches a finite-difference chain rule oracle") {
  // d/dt H(S(x + t e_i)) at t=0 should equal (S^T grad H)(Sx)_i; the
  // oracle estimates the left side with central differences in double.
  std::mt19937_64 rng(46);
  for (int iter = 0; iter < 10; ++iter) {
    MultiPoly h = testutil::random_poly(3, 3, rng);
    Mat s = testutil::random_matrix(3, rng, 2);
    MultiPoly hs = h.compose_linear(s);
    std::vector<double> x{0.3, -0.7, 0.5};
    const double eps = 1e-6;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += eps;
      xm[i] -= eps;
      double fd = (hs.eval_d(xp) - hs.eval_d(xm)) / (2 * eps);
      double exact = hs.derivative(i).eval_d(x);
      CHECK(std::fabs(fd - exact) < 1e-6);
    }
  }
}

TEST_CASE("compose_linear exact chain rule identity") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 10; ++iter) {
    MultiPoly h = testutil::random_poly(3, 4, rng);
    Mat s = testutil::random_matrix(3, rng, 2);
    // grad(H o S) = S^T . (grad H) o S
    auto lhs = grad(h.compose_linear(s));
    auto rhs = compose_linear(grad(h), s).apply_matrix(s.transpose());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluation is exact at rational points") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  MultiPoly p = x * x * y - y.scaled(rat(1, 3));
  std::vector<Rational> pt{rat(1, 2), rat(-3)};
  CHECK(p.eval(pt) == rat(1, 4) * rat(-3) - rat(-3) / 3);
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace omega;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("1/2") == rat(1, 2));
  CHECK(parse_rational("-4/8") == rat(-1, 2));
  CHECK(parse_rational("7") == rat(7));
  CHECK(to_string(rat(-4, 8)) == "-1/2");
  CHECK(to_string(rat(0, 5)) == "0");
  CHECK_THROWS_AS(parse_rational("abc"), schema_error);
  CHECK_THROWS_AS(parse_rational("1/0"), schema_error);
  CHECK_THROWS_AS(parse_rational(""), schema_error);
}

TEST_CASE("product: J*J = -I at n=1") {
  Mat j = standard_j(1);
  CHECK(j * j == -Mat::identity(2));
}

TEST_CASE("product: identity is neutral") {
  std::mt19937_64 rng(1);
  Mat m = testutil::random_matrix(4, rng);
  CHECK(Mat::identity(4) * m == m);
  CHECK(m * Mat::identity(4) == m);
}

TEST_CASE("product: Omega*L entry (0,0) of the counterexample pair") {
  Mat prod = testutil::counterexample_omega() * testutil::counterexample_l();
  CHECK(prod(0, 0) == 9);
}

TEST_CASE("product shape mismatch rejected") {
  CHECK_THROWS_AS(Mat(2, 3) * Mat(2, 3), dimension_error);
}

TEST_CASE("determinant golden values") {
  CHECK(standard_j(1).det() == 1);
  // diag(1,-2,1/2,-1) has determinant 1 despite not being symplectic
  // for any form.
  Mat b(4, 4);
  b(0, 0) = 1;
  b(1, 1) = -2;
  b(2, 2) = rat(1, 2);
  b(3, 3) = -1;
  CHECK(b.det() == 1);
  // Pfaffian of the counterexample form is -1, so det = 1.
  CHECK(testutil::counterexample_omega().det() == 1);
}

TEST_CASE("determinant rejects non-square input") {
  CHECK_THROWS_AS(Mat(2, 3).det(), dimension_error);
}

TEST_CASE("inverse golden values") {
  Mat j = standard_j(1);
  CHECK(j.inverse() == -j);
  Mat d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = rat(1, 2);
  Mat dinv(2, 2);
  dinv(0, 0) = rat(1, 2);
  dinv(1, 1) = 2;
  CHECK(d.inverse() == dinv);
  Mat om = testutil::counterexample_omega();
  CHECK(om * om.inverse() == Mat::identity(4));
}

TEST_CASE("inverse rejects singular input") {
  CHECK_THROWS_AS(Mat::zero(3).inverse(), singular_error);
}

TEST_CASE("symmetry predicates") {
  CHECK(standard_j(2).is_skew_symmetric());
  CHECK_FALSE(standard_j(2).is_symmetric());
  CHECK(Mat::identity(4).is_symmetric());
  CHECK_FALSE(Mat::identity(4).is_skew_symmetric());
  CHECK(testutil::counterexample_omega().is_skew_symmetric());
}

TEST_CASE("property: transpose of a product") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    Mat a = testutil::random_matrix(3, rng);
    Mat b = testutil::random_matrix(3, rng);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
}

TEST_CASE("property: determinant is multiplicative") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 25; ++iter) {
    Mat a = testutil::random_matrix(4, rng);
    Mat b = testutil::random_matrix(4, rng);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("property: double inverse is the identity map") {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 20) {
    Mat m = testutil::random_matrix(4, rng);
    if (m.det() == 0) continue;
    CHECK(m.inverse().inverse() == m);
    ++done;
  }
}

TEST_CASE("determinant agrees with cofactor expansion on random 3x3") {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 25; ++iter) {
    Mat m = testutil::random_matrix(3, rng);
    Rational cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(m.det() == cof);
  }
}

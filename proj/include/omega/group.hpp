#pragma once

#include <optional>
#include <random>

#include "omega/form.hpp"
#include "omega/poly.hpp"

namespace omega {

struct not_in_omega_n_error : error {
  using error::error;
};

struct unreachable_lambda_error : error {
  using error::error;
};

enum class GroupKind { Symplectic, Antisymplectic, LambdaSymplectic, Outside };

struct GroupClass {
  GroupKind kind = GroupKind::Outside;
  std::optional<Rational> lambda;  // absent iff Outside

  bool in_omega_n() const {
    return kind == GroupKind::Symplectic || kind == GroupKind::Antisymplectic;
  }
};

// The unique lambda != 0 with B^T.Omega.B = lambda.Omega, if any.
// Lambda is read off the first nonzero entry of Omega, then the full
// identity is verified entrywise.
inline std::optional<Rational> lambda_of(const SymplecticForm& f,
                                         const Mat& b) {
  const std::size_t d = f.dim();
  if (b.rows() != d || b.cols() != d)
    throw dimension_error("matrix dimension must match form");
  const Mat& om = f.matrix();
  Mat lhs = b.transpose() * om * b;

  Rational lambda(0);
  bool found = false;
  for (std::size_t i = 0; i < d && !found; ++i)
    for (std::size_t j = 0; j < d && !found; ++j)
      if (om(i, j) != 0) {
        lambda = lhs(i, j) / omega::Rational(om(i, j));
        lambda.canonicalize();
        found = true;
      }
  if (lambda == 0) return std::nullopt;
  if (lhs != om.scaled(lambda)) return std::nullopt;
  return lambda;
}

inline GroupClass classify(const SymplecticForm& f, const Mat& b) {
  auto lambda = lambda_of(f, b);
  if (!lambda) return GroupClass{GroupKind::Outside, std::nullopt};
  if (*lambda == 1) return GroupClass{GroupKind::Symplectic, lambda};
  if (*lambda == -1) return GroupClass{GroupKind::Antisymplectic, lambda};
  return GroupClass{GroupKind::LambdaSymplectic, lambda};
}

// +1 on the symplectic subgroup, -1 on the antisymplectic coset.
inline int sigma(const SymplecticForm& f, const Mat& b) {
  GroupClass c = classify(f, b);
  if (!c.in_omega_n())
    throw not_in_omega_n_error("matrix is not in the semisymplectic group");
  return c.kind == GroupKind::Symplectic ? 1 : -1;
}

namespace detail {

// Random standard symplectic matrix in J-coordinates: a product of the
// elementary generators [[I,S],[0,I]], [[I,0],[S,I]] (S symmetric) and
// [[A,0],[0,(A^T)^-1]] (A invertible).
inline Mat random_standard_symplectic(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  const std::size_t d = 2 * n;
  Mat b = Mat::identity(d);
  for (int rounds = 0; rounds < 3; ++rounds) {
    int which = pick(rng);
    Mat g = Mat::identity(d);
    if (which < 2) {
      Mat s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = small(rng);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (which == 0)
            g(i, n + j) = s(i, j);
          else
            g(n + i, j) = s(i, j);
        }
    } else {
      // Unit upper triangular with random strict part, so A is
      // always invertible.
      Mat a = Mat::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = small(rng);
      Mat ait = a.transpose().inverse();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          g(i, j) = a(i, j);
          g(n + i, n + j) = ait(i, j);
        }
    }
    b = b * g;
  }
  return b;
}

inline Mat swap_blocks(std::size_t n) {
  Mat k(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    k(i, n + i) = 1;
    k(n + i, i) = 1;
  }
  return k;
}

}  // namespace detail

// Seeded generator of lambda-symplectic members for the given form.
// Reachable lambdas: mu^2 and -mu^2 for rational mu != 0 (scaling a
// symplectic or antisymplectic member by mu).
inline Mat random_member(const SymplecticForm& f, const Rational& lambda,
                         std::uint64_t seed) {
  if (lambda == 0) throw unreachable_lambda_error("lambda must be nonzero");
  const std::size_t n = f.half_dim();

  // lambda = sign * mu^2 with rational mu: both numerator and
  // denominator of |lambda| must be perfect squares.
  Rational abs_l = lambda < 0 ? Rational(-lambda) : lambda;
  mpz_class num = abs_l.get_num(), den = abs_l.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw unreachable_lambda_error(
        "lambda is not +-(rational square); not reachable by this generator");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational mu(rn, rd);
  mu.canonicalize();

  std::mt19937_64 rng(seed);
  Mat bj = detail::random_standard_symplectic(n, rng);
  if (lambda < 0) bj = bj * detail::swap_blocks(n);

  Mat p = darboux_basis(f).p;
  Mat b = (p * bj * p.inverse()).scaled(mu);
  return b;
}

// Exact test that the polynomial map xi scales the form by lambda:
// (d xi)^T . Omega . (d xi) = lambda . Omega as polynomial matrices.
inline bool is_lambda_symplectic_polymap(const SymplecticForm& f,
                                         const PolyVectorField& xi,
                                         const Rational& lambda) {
  if (xi.nvars() != f.dim())
    throw dimension_error("field dimension must match form");
  PolyMatrix m = jacobian(xi);
  PolyMatrix lhs = m.transpose() * PolyMatrix::from_constant(f.matrix(), xi.nvars()) * m;
  PolyMatrix rhs =
      PolyMatrix::from_constant(f.matrix().scaled(lambda), xi.nvars());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) return false;
  return true;
}

}  // namespace omega

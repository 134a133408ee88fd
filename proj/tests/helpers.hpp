#pragma once

#include <random>

#include "omega/omega.hpp"

namespace testutil {

using namespace omega;

// The 4x4 pair from the transpose counterexample: L is a member for
// this form but L^T is not.
inline Mat counterexample_l() {
  return Mat{{-1, 1, -1, 2},
             {3, 0, 4, 1},
             {-1, 2, 0, 2},
             {3, 1, 1, 1}};
}

inline Mat counterexample_omega() {
  return Mat{{0, 1, 0, 2},
             {-1, 0, -1, 0},
             {0, 1, 0, 1},
             {-2, 0, -1, 0}};
}

inline SymplecticForm counterexample_form() {
  return SymplecticForm::validate(counterexample_omega());
}

inline Rational random_rational(std::mt19937_64& rng, int span = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return rat(num(rng), den(rng));
}

inline Mat random_matrix(std::size_t n, std::mt19937_64& rng, int span = 4) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, span);
  return m;
}

inline Mat random_symmetric(std::size_t n, std::mt19937_64& rng) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng);
  return m;
}

// Random skew-symmetric invertible matrix of even dimension; retries
// until the determinant is nonzero.
inline Mat random_skew_invertible(std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        Rational q = random_rational(rng);
        m(i, j) = q;
        m(j, i) = -q;
      }
    if (m.det() != 0) return m;
  }
}

inline SymplecticForm random_form(std::size_t dim, std::mt19937_64& rng) {
  return SymplecticForm::validate(random_skew_invertible(dim, rng));
}

inline MultiPoly random_poly(std::size_t nvars, unsigned max_deg,
                             std::mt19937_64& rng, int nterms = 6) {
  std::uniform_int_distribution<unsigned> deg_dist(0, max_deg);
  std::uniform_int_distribution<std::size_t> var_dist(0, nvars - 1);
  MultiPoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Exponents e(nvars, 0);
    unsigned d = deg_dist(rng);
    for (unsigned k = 0; k < d; ++k) ++e[var_dist(rng)];
    p.add_term(e, random_rational(rng));
  }
  return p;
}

// Six-dimensional field whose linearization has trace 3; never
// Hamiltonian for any form.
inline PolyVectorField trace3_field() {
  auto v = [](std::size_t i) { return MultiPoly::variable(6, i); };
  std::vector<MultiPoly> c;
  c.push_back(v(0) + v(2) + v(4) + v(0) * v(0));
  c.push_back(v(1) + v(3) + v(5) + v(1) * v(3) * v(5));
  c.push_back(-v(2) + v(4) + v(2) * v(4));
  c.push_back(v(3).scaled(rat(3)));
  c.push_back(v(4).scaled(rat(-3)) + v(5) - v(5) * v(5) * v(5));
  c.push_back(v(5).scaled(rat(2)));
  return PolyVectorField(std::move(c));
}

// Cubic field on R^4 with dX_0 = 0 but nonzero Jacobian trace away
// from the origin; never Hamiltonian for any form.
inline PolyVectorField quartic_example_field() {
  auto v = [](std::size_t i) { return MultiPoly::variable(4, i); };
  std::vector<MultiPoly> c;
  c.push_back(v(0) * v(0) * v(2) + v(0) * v(1) * v(3));
  c.push_back(v(0) * v(1) * v(2) + v(1) * v(1) * v(3));
  c.push_back(v(0) * v(2) * v(2) + v(1) * v(2) * v(3));
  c.push_back(v(0) * v(2) * v(3) + v(1) * v(3) * v(3));
  return PolyVectorField(std::move(c));
}

// Random polynomial with no constant term (H(0) = 0).
inline MultiPoly random_hamiltonian(std::size_t nvars, unsigned max_deg,
                                    std::mt19937_64& rng) {
  MultiPoly p = random_poly(nvars, max_deg, rng);
  return p - MultiPoly::constant(nvars, p.constant_term());
}

}  // namespace testutil

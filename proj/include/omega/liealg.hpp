#pragma once

#include <cmath>
#include <vector>

#include "omega/form.hpp"

namespace omega {

struct not_symmetric_error : error {
  using error::error;
};

struct form_mismatch_error : error {
  using error::error;
};

// Exact membership test for the omega-symplectic Lie algebra:
// L^T.Omega + Omega.L = 0. A trace check runs first; the trace of any
// member is zero, so a nonzero trace rejects immediately.
inline bool is_hamiltonian_matrix(const SymplecticForm& f, const Mat& l) {
  if (l.rows() != f.dim() || l.cols() != f.dim())
    throw dimension_error("matrix dimension must match form");
  if (l.trace() != 0) return false;
  const Mat& om = f.matrix();
  return (l.transpose() * om + om * l).is_zero();
}

// A matrix certified to be omega-Hamiltonian for a given form.
class HamiltonianMatrix {
 public:
  HamiltonianMatrix(SymplecticForm form, Mat l)
      : form_(std::move(form)), l_(std::move(l)) {
    if (!is_hamiltonian_matrix(form_, l_))
      throw error("matrix is not omega-Hamiltonian for the given form");
  }

  const SymplecticForm& form() const { return form_; }
  const Mat& matrix() const { return l_; }

 private:
  SymplecticForm form_;
  Mat l_;
};

// L = (Omega^-1)^T . B for symmetric B is always a member.
inline HamiltonianMatrix from_symmetric(const SymplecticForm& f,
                                        const Mat& b) {
  if (b.rows() != f.dim() || b.cols() != f.dim())
    throw dimension_error("matrix dimension must match form");
  if (!b.is_symmetric()) throw not_symmetric_error("matrix is not symmetric");
  return HamiltonianMatrix(f, f.inverse_matrix().transpose() * b);
}

// Recovers the symmetric matrix B = Omega^T . L; exact inverse of
// from_symmetric.
inline Mat to_symmetric(const HamiltonianMatrix& h) {
  return h.form().matrix().transpose() * h.matrix();
}

// Conjugates into the standard algebra: L' = P^-1.L.P with
// L'^T.J + J.L' = 0.
inline Mat conjugate_to_standard(const HamiltonianMatrix& h,
                                 const DarbouxTransform& d) {
  if (d.p.rows() != h.form().dim())
    throw form_mismatch_error("transform dimension must match form");
  if (d.p.transpose() * h.form().matrix() * d.p !=
      standard_j(h.form().half_dim()))
    throw form_mismatch_error("transform does not belong to the form");
  return d.p.inverse() * h.matrix() * d.p;
}

namespace detail {

using DMat = std::vector<std::vector<double>>;

inline DMat dmat_from(const Mat& m) {
  DMat a(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = to_double(m(i, j));
  return a;
}

inline DMat dmat_identity(std::size_t n) {
  DMat a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1.0;
  return a;
}

inline DMat dmat_mul(const DMat& a, const DMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  DMat c(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][p] * b[p][j];
  return c;
}

// Scaling-and-squaring matrix exponential with a Taylor core.
inline DMat dmat_exp(DMat a) {
  const std::size_t n = a.size();
  double norm = 0;
  for (const auto& row : a) {
    double s = 0;
    for (double x : row) s += std::fabs(x);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (double& x : row) x *= scale;

  DMat result = dmat_identity(n);
  DMat term = dmat_identity(n);
  for (int k = 1; k <= 20; ++k) {
    term = dmat_mul(term, a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        term[i][j] /= k;
        result[i][j] += term[i][j];
      }
  }
  for (int s = 0; s < squarings; ++s) result = dmat_mul(result, result);
  return result;
}

}  // namespace detail

// Numeric sanity check that exp(tL) lands in the symplectic group:
// max-norm of exp(tL)^T.Omega.exp(tL) - Omega stays within tol for
// every sample t. Floating point only; never a membership criterion.
inline bool exp_check(const SymplecticForm& f, const Mat& l,
                      const std::vector<double>& t_samples = {0.1, 0.5, 1.0},
                      double tol = 1e-8) {
  if (tol <= 0) throw error("tolerance must be positive");
  if (l.rows() != f.dim() || l.cols() != f.dim())
    throw dimension_error("matrix dimension must match form");
  detail::DMat ld = detail::dmat_from(l);
  detail::DMat om = detail::dmat_from(f.matrix());
  const std::size_t n = f.dim();
  for (double t : t_samples) {
    detail::DMat tl = ld;
    for (auto& row : tl)
      for (double& x : row) x *= t;
    detail::DMat e = detail::dmat_exp(tl);
    detail::DMat et(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) et[i][j] = e[j][i];
    detail::DMat prod = detail::dmat_mul(detail::dmat_mul(et, om), e);
    double err = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        err = std::max(err, std::fabs(prod[i][j] - om[i][j]));
    if (err > tol) return false;
  }
  return true;
}

inline bool exp_check(const HamiltonianMatrix& h,
                      const std::vector<double>& t_samples = {0.1, 0.5, 1.0},
                      double tol = 1e-8) {
  return exp_check(h.form(), h.matrix(), t_samples, tol);
}

// Commutator [A, B] = AB - BA; membership is closed under it.
inline Mat commutator(const Mat& a, const Mat& b) {
  return a * b - b * a;
}

}  // namespace omega

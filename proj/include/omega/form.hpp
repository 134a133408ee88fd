#pragma once

#include <utility>
#include <vector>

#include "omega/matrix.hpp"

namespace omega {

struct odd_dimension_error : error {
  using error::error;
};

struct not_skew_error : error {
  using error::error;
};

struct degenerate_error : error {
  using error::error;
};

// The standard block matrix J = [[0, I], [-I, 0]] of size 2n.
inline Mat standard_j(std::size_t n) {
  if (n == 0) throw dimension_error("n must be positive");
  Mat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

// A validated symplectic form: skew-symmetric, invertible, even dimension.
class SymplecticForm {
 public:
  static SymplecticForm validate(Mat m) {
    if (!m.square() || m.rows() == 0 || m.rows() % 2 != 0)
      throw odd_dimension_error("form dimension must be even and positive");
    if (!m.is_skew_symmetric())
      throw not_skew_error("form matrix must be skew-symmetric");
    if (m.det() == 0) throw degenerate_error("form matrix is degenerate");
    return SymplecticForm(std::move(m));
  }

  static SymplecticForm standard(std::size_t n) {
    return SymplecticForm(standard_j(n));
  }

  std::size_t dim() const { return omega_.rows(); }
  std::size_t half_dim() const { return omega_.rows() / 2; }
  const Mat& matrix() const { return omega_; }

  const Mat& inverse_matrix() const {
    if (inv_.rows() == 0) inv_ = omega_.inverse();
    return inv_;
  }

  Rational evaluate(const std::vector<Rational>& u,
                    const std::vector<Rational>& v) const {
    if (u.size() != dim() || v.size() != dim())
      throw dimension_error("vector length must equal form dimension");
    return dot(u, omega_.apply(v));
  }

  bool is_minus_identity_square() const {
    return omega_ * omega_ == -Mat::identity(dim());
  }

 private:
  explicit SymplecticForm(Mat m) : omega_(std::move(m)) {}
  Mat omega_;
  mutable Mat inv_;
};

// Change of basis P with P^T.Omega.P = J, columns ordered (u_1..u_n,
// v_1..v_n). Skew Gram-Schmidt with lowest-index selection at every
// step, so the result is deterministic.
struct DarbouxTransform {
  Mat p;
};

inline DarbouxTransform darboux_basis(const SymplecticForm& f) {
  const std::size_t d = f.dim();
  const std::size_t n = d / 2;

  std::vector<std::vector<Rational>> remaining;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    remaining.push_back(std::move(e));
  }

  std::vector<std::vector<Rational>> us, vs;
  while (!remaining.empty()) {
    std::vector<Rational> u = remaining.front();
    remaining.erase(remaining.begin());

    std::size_t wi = 0;
    Rational pairing(0);
    for (; wi < remaining.size(); ++wi) {
      pairing = f.evaluate(u, remaining[wi]);
      if (pairing != 0) break;
    }
    // Non-degeneracy of the restricted form guarantees a partner.
    if (wi == remaining.size())
      throw degenerate_error("no symplectic partner found");

    std::vector<Rational> v = remaining[wi];
    remaining.erase(remaining.begin() + wi);
    for (auto& x : v) x /= pairing;

    for (auto& r : remaining) {
      Rational a = f.evaluate(r, v);  // coefficient of u
      Rational b = f.evaluate(r, u);  // -coefficient of v
      for (std::size_t i = 0; i < d; ++i) r[i] -= a * u[i] - b * v[i];
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }

  Mat p(d, d);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      p(i, k) = us[k][i];
      p(i, n + k) = vs[k][i];
    }
  return DarbouxTransform{std::move(p)};
}

}  // namespace omega

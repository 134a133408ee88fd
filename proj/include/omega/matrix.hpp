#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "omega/rational.hpp"

namespace omega {

// Dense rational matrix, row-major. Immutable in spirit: operations
// return new values. Target dimensions are small (<= 20).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw dimension_error("ragged initializer");
      for (long v : r) e_.emplace_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat zero(std::size_t n) { return Mat(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return e_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) += a * o(k, j);
      }
    return r;
  }

  Mat scaled(const Rational& s) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = s * e_[k];
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw dimension_error("matrix-vector shape mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    require_square();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew_symmetric() const {
    require_square();
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, i) != 0) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
  }

  Rational trace() const {
    require_square();
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Fraction-free (Bareiss) determinant: rows are first cleared to
  // integers, then eliminated with exact integer divisions only.
  Rational det() const {
    require_square();
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    Rational row_scale(1);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class d(1);
      for (std::size_t j = 0; j < n; ++j)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(),
                (*this)(i, j).get_den().get_mpz_t());
      row_scale *= Rational(d);
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& q = (*this)(i, j);
        a[i][j] = q.get_num() * (d / q.get_den());
      }
    }

    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
          mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1] * sign);
    d /= row_scale;
    d.canonicalize();
    return d;
  }

  // Gauss-Jordan inverse over exact rationals.
  Mat inverse() const {
    require_square();
    const std::size_t n = rows_;
    Mat a = *this;
    Mat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw singular_error("matrix is singular");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(col, j), a(piv, j));
          std::swap(inv(col, j), inv(piv, j));
        }
      }
      Rational p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rational f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  void require_square() const {
    if (!square()) throw dimension_error("square matrix required");
  }
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_error("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

inline Rational dot(const std::vector<Rational>& u,
                    const std::vector<Rational>& v) {
  if (u.size() != v.size()) throw dimension_error("vector length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace omega

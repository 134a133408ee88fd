#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "omega/matrix.hpp"

namespace omega {

inline std::size_t max_poly_degree() {
  if (const char* env = std::getenv("OMEGA_MAX_DEGREE")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 64;
}

constexpr std::size_t kMaxPolyVars = 32;

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded lexicographic order: lower total degree first, then lex.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Multivariate polynomial with exact rational coefficients. Terms are
// kept canonical: no zero coefficient is ever stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) { check_vars(); }

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw dimension_error("exponent length mismatch");
    if (total_degree(e) > max_poly_degree())
      throw resource_error("polynomial degree exceeds cap");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  MultiPoly operator-() const { return scaled(Rational(-1)); }

  MultiPoly operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly scaled(const Rational& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    if (var >= nvars_) throw dimension_error("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents de = e;
      --de[var];
      r.add_term(de, c * long(e[var]));
    }
    return r;
  }

  MultiPoly homogeneous_part(unsigned deg) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == deg) r.terms_.emplace(e, c);
    return r;
  }

  bool is_homogeneous(unsigned deg) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != deg) return false;
    return true;
  }

  Rational eval(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw dimension_error("evaluation point length");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  double eval_d(const std::vector<double>& x) const {
    if (x.size() != nvars_) throw dimension_error("evaluation point length");
    double s = 0;
    for (const auto& [e, c] : terms_) {
      double t = to_double(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  // Substitutes x_i -> sum_j s(i,j) * y_j.
  MultiPoly compose_linear(const Mat& s) const {
    if (s.rows() != nvars_ || s.cols() != nvars_)
      throw dimension_error("substitution matrix shape mismatch");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < nvars_; ++i) {
      MultiPoly li(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j) {
        Exponents e(nvars_, 0);
        e[j] = 1;
        li.add_term(e, s(i, j));
      }
      images.push_back(std::move(li));
    }
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = MultiPoly::constant(nvars_, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
      r = r + t;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

 private:
  void check_vars() const {
    if (nvars_ > kMaxPolyVars)
      throw resource_error("too many polynomial variables");
  }
  void check_same_vars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
      throw dimension_error("polynomial variable count mismatch");
  }

  std::size_t nvars_;
  TermMap terms_;
};

// Polynomial map V -> V: one component polynomial per coordinate.
class PolyVectorField {
 public:
  explicit PolyVectorField(std::size_t nvars)
      : nvars_(nvars), comps_(nvars, MultiPoly(nvars)) {}

  explicit PolyVectorField(std::vector<MultiPoly> comps)
      : nvars_(comps.size()), comps_(std::move(comps)) {
    for (const auto& c : comps_)
      if (c.nvars() != nvars_)
        throw dimension_error("component variable count mismatch");
  }

  // The linear field x -> Lx.
  static PolyVectorField linear(const Mat& l) {
    if (!l.square()) throw dimension_error("square matrix required");
    std::size_t n = l.rows();
    PolyVectorField x(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Exponents e(n, 0);
        e[j] = 1;
        x.comps_[i].add_term(e, l(i, j));
      }
    return x;
  }

  std::size_t nvars() const { return nvars_; }
  const MultiPoly& component(std::size_t i) const { return comps_.at(i); }
  MultiPoly& component(std::size_t i) { return comps_.at(i); }
  const std::vector<MultiPoly>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
  }

  std::vector<Rational> value_at_zero() const {
    std::vector<Rational> v;
    for (const auto& c : comps_) v.push_back(c.constant_term());
    return v;
  }

  std::vector<Rational> eval(const std::vector<Rational>& x) const {
    std::vector<Rational> v;
    for (const auto& c : comps_) v.push_back(c.eval(x));
    return v;
  }

  std::vector<double> eval_d(const std::vector<double>& x) const {
    std::vector<double> v;
    for (const auto& c : comps_) v.push_back(c.eval_d(x));
    return v;
  }

  PolyVectorField operator+(const PolyVectorField& o) const {
    check_same_vars(o);
    PolyVectorField r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
  }

  PolyVectorField operator-(const PolyVectorField& o) const {
    check_same_vars(o);
    PolyVectorField r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
  }

  PolyVectorField scaled(const Rational& s) const {
    PolyVectorField r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.comps_[i] = comps_[i].scaled(s);
    return r;
  }

  // Matrix acting on the component tuple: (m.X)(v).
  PolyVectorField apply_matrix(const Mat& m) const {
    if (m.cols() != nvars_) throw dimension_error("matrix shape mismatch");
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      MultiPoly p(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j)
        p = p + comps_[j].scaled(m(i, j));
      out.push_back(std::move(p));
    }
    return PolyVectorField(std::move(out));
  }

  bool operator==(const PolyVectorField& o) const {
    return nvars_ == o.nvars_ && comps_ == o.comps_;
  }
  bool operator!=(const PolyVectorField& o) const { return !(*this == o); }

 private:
  void check_same_vars(const PolyVectorField& o) const {
    if (nvars_ != o.nvars_)
      throw dimension_error("vector field variable count mismatch");
  }

  std::size_t nvars_;
  std::vector<MultiPoly> comps_;
};

// Matrix of polynomials; houses Jacobians and residuals.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars),
        e_(rows * cols, MultiPoly(nvars)) {}

  static PolyMatrix from_constant(const Mat& m, std::size_t nvars) {
    PolyMatrix p(m.rows(), m.cols(), nvars);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        p(i, j) = MultiPoly::constant(nvars, m(i, j));
    return p;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) {
    return e_[i * cols_ + j];
  }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  PolyMatrix transpose() const {
    PolyMatrix t(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_error("polynomial matrix shape mismatch");
    PolyMatrix r(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
      throw dimension_error("polynomial matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j)
        for (std::size_t k = 0; k < cols_; ++k)
          r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Mat eval(const std::vector<Rational>& x) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(x);
    return m;
  }

  std::vector<std::vector<double>> eval_d(const std::vector<double>& x) const {
    std::vector<std::vector<double>> m(rows_, std::vector<double>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m[i][j] = (*this)(i, j).eval_d(x);
    return m;
  }

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_, cols_, nvars_;
  std::vector<MultiPoly> e_;
};

inline PolyVectorField grad(const MultiPoly& h) {
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < h.nvars(); ++i) comps.push_back(h.derivative(i));
  return PolyVectorField(std::move(comps));
}

inline PolyMatrix jacobian(const PolyVectorField& x) {
  const std::size_t n = x.nvars();
  PolyMatrix m(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = x.component(i).derivative(j);
  return m;
}

// Splits a field into homogeneous pieces; returns (degree, part) pairs
// in increasing degree, empty parts omitted.
inline std::vector<std::pair<unsigned, PolyVectorField>> homogeneous_parts(
    const PolyVectorField& x) {
  std::vector<std::pair<unsigned, PolyVectorField>> parts;
  for (unsigned d = 0; d <= x.degree(); ++d) {
    std::vector<MultiPoly> comps;
    bool nonzero = false;
    for (const auto& c : x.components()) {
      comps.push_back(c.homogeneous_part(d));
      if (!comps.back().is_zero()) nonzero = true;
    }
    if (nonzero) parts.emplace_back(d, PolyVectorField(std::move(comps)));
  }
  return parts;
}

struct not_homogeneous_error : error {
  using error::error;
};

struct jacobian_not_symmetric_error : error {
  using error::error;
};

// Euler-type integration of a homogeneous gradient field:
// H = (sum_i x_i f_i) / (k+1), exact, with grad(H) = f.
inline MultiPoly euler_integrate(const PolyVectorField& f, unsigned k) {
  if (k < 1) throw not_homogeneous_error("degree must be at least 1");
  for (const auto& c : f.components())
    if (!c.is_homogeneous(k))
      throw not_homogeneous_error("components must be homogeneous of degree k");
  if (!jacobian(f).is_symmetric())
    throw jacobian_not_symmetric_error("field is not a gradient");
  const std::size_t n = f.nvars();
  MultiPoly h(n);
  for (std::size_t i = 0; i < n; ++i)
    h = h + MultiPoly::variable(n, i) * f.component(i);
  return h.scaled(Rational(1, long(k) + 1));
}

// Variable substitution v -> x(S v).
inline PolyVectorField compose_linear(const PolyVectorField& x, const Mat& s) {
  std::vector<MultiPoly> comps;
  for (const auto& c : x.components()) comps.push_back(c.compose_linear(s));
  return PolyVectorField(std::move(comps));
}

// Pushforward along the linear map S: v -> S x(S^{-1} v).
inline PolyVectorField push_linear(const PolyVectorField& x, const Mat& s) {
  return compose_linear(x, s.inverse()).apply_matrix(s);
}

}  // namespace omega

#pragma once

#include <optional>
#include <utility>

#include "omega/group.hpp"
#include "omega/liealg.hpp"
#include "omega/poly.hpp"

namespace omega {

struct constant_part_error : error {
  using error::error;
};

struct jet_condition_error : error {
  using error::error;
};

struct not_lambda_symplectic_error : error {
  using error::error;
};

// A vector field paired with its Hamiltonian, H normalized so H(0) = 0.
struct HamiltonianField {
  SymplecticForm form;
  PolyVectorField field;
  MultiPoly hamiltonian;
};

// X_H = (Omega^-1)^T . grad(H). Any constant term of H is dropped: the
// gradient kills it and H(0) = 0 is the normalization.
inline HamiltonianField field_from_hamiltonian(const SymplecticForm& f,
                                               const MultiPoly& h) {
  if (h.nvars() != f.dim())
    throw dimension_error("Hamiltonian variable count must match form");
  MultiPoly hn = h - MultiPoly::constant(h.nvars(), h.constant_term());
  PolyVectorField x = grad(hn).apply_matrix(f.inverse_matrix().transpose());
  return HamiltonianField{f, std::move(x), std::move(hn)};
}

// Outcome of the polynomial recognition test. On failure the first
// nonzero residual entry is reported, together with the trace of the
// linearization at 0 when that alone already rejects.
struct RecognitionResult {
  bool hamiltonian = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness_entry;
  std::optional<MultiPoly> witness_residual;
  Rational trace_at_zero;

  explicit operator bool() const { return hamiltonian; }
};

// Exact recognition: X is omega-Hamiltonian iff
// M(x)^T.Omega + Omega.M(x) = 0 identically, M = jacobian(X).
// Fields with X(0) != 0 are rejected unless allow_constant is set; the
// accepted extension treats the constant part as the gradient field of
// a linear Hamiltonian term.
inline RecognitionResult is_hamiltonian_field(const SymplecticForm& f,
                                              const PolyVectorField& x,
                                              bool allow_constant = false) {
  if (x.nvars() != f.dim())
    throw dimension_error("field dimension must match form");
  if (!allow_constant) {
    for (const auto& v : x.value_at_zero())
      if (v != 0)
        throw constant_part_error(
            "field has a constant part; pass allow_constant to accept it");
  }

  PolyMatrix m = jacobian(x);
  PolyMatrix omp = PolyMatrix::from_constant(f.matrix(), x.nvars());
  PolyMatrix residual = m.transpose() * omp + omp * m;

  RecognitionResult result;
  std::vector<Rational> zero(x.nvars(), Rational(0));
  result.trace_at_zero = m.eval(zero).trace();
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j)
      if (!residual(i, j).is_zero()) {
        result.hamiltonian = false;
        result.witness_entry = {i, j};
        result.witness_residual = residual(i, j);
        return result;
      }
  result.hamiltonian = true;
  return result;
}

// Inverts the construction: recovers the unique H with H(0) = 0 from a
// recognized field, degree by degree via Euler integration of
// Omega^T . X^j.
inline HamiltonianField recover_hamiltonian(const SymplecticForm& f,
                                            const PolyVectorField& x,
                                            bool allow_constant = false) {
  RecognitionResult rec = is_hamiltonian_field(f, x, allow_constant);
  if (!rec)
    throw error("field is not omega-Hamiltonian; recognition failed");

  const std::size_t n = x.nvars();
  const Mat omt = f.matrix().transpose();
  MultiPoly h(n);
  for (const auto& [deg, part] : homogeneous_parts(x)) {
    PolyVectorField fj = part.apply_matrix(omt);
    if (deg == 0) {
      // Constant part, only under the extension flag: linear term with
      // grad = Omega^T . X(0).
      std::vector<Rational> c = fj.value_at_zero();
      for (std::size_t i = 0; i < n; ++i)
        h = h + MultiPoly::variable(n, i).scaled(c[i]);
      continue;
    }
    // Recognition guarantees symmetry of the per-degree Jacobians; a
    // failure here is an internal contradiction.
    h = h + euler_integrate(fj, deg);
  }
  HamiltonianField out = field_from_hamiltonian(f, h);
  if (out.field != x)
    throw error("internal error: recovered Hamiltonian does not reproduce field");
  return out;
}

struct PushforwardResult {
  PolyVectorField field;
  Rational lambda;
  MultiPoly transported_hamiltonian;  // H o s^-1
};

// Pushforward of X_H along a linear lambda-symplectic map S; verifies
// exactly that S.X_H(S^-1 v) = lambda . X_{H o S^-1}(v).
inline PushforwardResult pushforward(const HamiltonianField& hf, const Mat& s) {
  GroupClass c = classify(hf.form, s);
  if (!c.lambda)
    throw not_lambda_symplectic_error("map is not lambda-symplectic");
  Mat sinv = s.inverse();
  PolyVectorField pushed = push_linear(hf.field, s);
  MultiPoly h_transported = hf.hamiltonian.compose_linear(sinv);
  HamiltonianField expected =
      field_from_hamiltonian(hf.form, h_transported);
  if (pushed != expected.field.scaled(*c.lambda))
    throw error("internal error: pushforward identity failed");
  return PushforwardResult{std::move(pushed), *c.lambda,
                           std::move(h_transported)};
}

// Family construction: H = (1/2) x^T (Omega^T L) x + F with F of zero
// 2-jet at 0; the resulting field has dX_0 = L exactly.
inline HamiltonianField construct_family(const HamiltonianMatrix& l,
                                         const MultiPoly& fpoly) {
  const SymplecticForm& f = l.form();
  const std::size_t n = f.dim();
  if (fpoly.nvars() != n)
    throw dimension_error("remainder variable count must match form");
  for (const auto& [e, c] : fpoly.terms())
    if (total_degree(e) <= 2)
      throw jet_condition_error("remainder must have zero 2-jet at 0");

  Mat b = to_symmetric(l);
  MultiPoly h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) == 0) continue;
      h = h + (MultiPoly::variable(n, i) * MultiPoly::variable(n, j))
                  .scaled(b(i, j) / 2);
    }
  h = h + fpoly;
  return field_from_hamiltonian(f, h);
}

// For skew invertible L, the form with matrix -L^-1 makes L a member.
inline SymplecticForm adapted_form_for_skew(const Mat& l) {
  if (!l.square() || !l.is_skew_symmetric())
    throw not_skew_error("matrix must be skew-symmetric");
  if (l.det() == 0) throw singular_error("matrix is singular");
  return SymplecticForm::validate(-l.inverse());
}

// Dedicated linear fast path: X(x) = Lx is omega-Hamiltonian iff L is
// an omega-Hamiltonian matrix.
inline bool linear_field_check(const SymplecticForm& f, const Mat& l) {
  return is_hamiltonian_matrix(f, l);
}

}  // namespace omega

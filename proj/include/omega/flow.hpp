#pragma once

#include <cmath>
#include <vector>

#include "omega/hamfield.hpp"

namespace omega {

struct non_finite_state_error : error {
  using error::error;
};

// Floating-point trajectory with conservation diagnostics. Everything
// here is approximate by construction and never feeds back into the
// exact modules.
struct FlowTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double energy_drift = 0.0;
  double form_drift = 0.0;
};

struct FlowOptions {
  double dt = 1e-3;
  double t_end = 10.0;
  bool record_states = true;
};

namespace detail {

inline std::vector<double> dvec_from(const std::vector<Rational>& v) {
  std::vector<double> d;
  d.reserve(v.size());
  for (const auto& q : v) d.push_back(to_double(q));
  return d;
}

inline double form_pairing(const DMat& om, const std::vector<double>& u,
                           const std::vector<double>& v) {
  double s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * om[i][j] * v[j];
  return s;
}

}  // namespace detail

// Classical 4th-order one-step integration of x' = X(x), with tangent
// pairs propagated by the variational equation d' = dX_{x(t)} d. One
// tangent pair (e_i, e_j) is tracked per nonzero upper entry of Omega.
inline FlowTrace integrate(const HamiltonianField& hf,
                           std::vector<double> x0, const FlowOptions& opt) {
  if (opt.dt <= 0 || opt.t_end <= 0)
    throw error("dt and t_end must be positive");
  const std::size_t n = hf.form.dim();
  if (x0.size() != n) throw dimension_error("initial state length mismatch");

  const PolyVectorField& field = hf.field;
  const PolyMatrix jac = jacobian(field);
  const detail::DMat om = detail::dmat_from(hf.form.matrix());

  // Tangent pairs at the positions where Omega pairs basis vectors.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (hf.form.matrix()(i, j) != 0) pairs.emplace_back(i, j);

  // State layout: x followed by 2*pairs tangent vectors.
  const std::size_t npairs = pairs.size();
  std::vector<std::vector<double>> tangents;
  for (auto [i, j] : pairs) {
    std::vector<double> u(n, 0.0), v(n, 0.0);
    u[i] = 1.0;
    v[j] = 1.0;
    tangents.push_back(u);
    tangents.push_back(v);
  }

  std::vector<double> initial_pairings(npairs);
  for (std::size_t k = 0; k < npairs; ++k)
    initial_pairings[k] =
        detail::form_pairing(om, tangents[2 * k], tangents[2 * k + 1]);

  const double h0 = hf.hamiltonian.eval_d(x0);

  struct Deriv {
    std::vector<double> dx;
    std::vector<std::vector<double>> dtan;
  };
  auto rhs = [&](const std::vector<double>& x,
                 const std::vector<std::vector<double>>& tan) {
    Deriv d;
    d.dx = field.eval_d(x);
    detail::DMat jx = jac.eval_d(x);
    d.dtan.resize(tan.size());
    for (std::size_t k = 0; k < tan.size(); ++k) {
      d.dtan[k].assign(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d.dtan[k][i] += jx[i][j] * tan[k][j];
    }
    return d;
  };

  FlowTrace trace;
  double t = 0;
  auto record = [&](double time, const std::vector<double>& x) {
    if (opt.record_states) {
      trace.times.push_back(time);
      trace.states.push_back(x);
    }
    for (double c : x)
      if (!std::isfinite(c))
        throw non_finite_state_error("trajectory left the finite range");
    trace.energy_drift =
        std::max(trace.energy_drift, std::fabs(hf.hamiltonian.eval_d(x) - h0));
    for (std::size_t k = 0; k < npairs; ++k)
      trace.form_drift = std::max(
          trace.form_drift,
          std::fabs(detail::form_pairing(om, tangents[2 * k],
                                         tangents[2 * k + 1]) -
                    initial_pairings[k]));
  };
  record(0.0, x0);

  const long steps = static_cast<long>(std::ceil(opt.t_end / opt.dt - 1e-12));
  auto axpy = [&](const std::vector<double>& x,
                  const std::vector<std::vector<double>>& tan, const Deriv& d,
                  double a) {
    std::pair<std::vector<double>, std::vector<std::vector<double>>> out;
    out.first = x;
    for (std::size_t i = 0; i < n; ++i) out.first[i] += a * d.dx[i];
    out.second = tan;
    for (std::size_t k = 0; k < tan.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        out.second[k][i] += a * d.dtan[k][i];
    return out;
  };

  for (long s = 0; s < steps; ++s) {
    double dt = std::min(opt.dt, opt.t_end - t);
    Deriv k1 = rhs(x0, tangents);
    auto [x2, t2] = axpy(x0, tangents, k1, dt / 2);
    Deriv k2 = rhs(x2, t2);
    auto [x3, t3] = axpy(x0, tangents, k2, dt / 2);
    Deriv k3 = rhs(x3, t3);
    auto [x4, t4] = axpy(x0, tangents, k3, dt);
    Deriv k4 = rhs(x4, t4);
    for (std::size_t i = 0; i < n; ++i)
      x0[i] += dt / 6 * (k1.dx[i] + 2 * k2.dx[i] + 2 * k3.dx[i] + k4.dx[i]);
    for (std::size_t k = 0; k < tangents.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        tangents[k][i] += dt / 6 *
                          (k1.dtan[k][i] + 2 * k2.dtan[k][i] +
                           2 * k3.dtan[k][i] + k4.dtan[k][i]);
    t += dt;
    record(t, x0);
  }
  return trace;
}

struct PreservationReport {
  bool pass = false;
  double energy_drift = 0.0;
  double form_drift = 0.0;
};

inline PreservationReport preservation_report(const FlowTrace& trace,
                                              double tol_energy = 1e-8,
                                              double tol_form = 1e-6) {
  PreservationReport r;
  r.energy_drift = trace.energy_drift;
  r.form_drift = trace.form_drift;
  r.pass = trace.energy_drift <= tol_energy && trace.form_drift <= tol_form;
  return r;
}

}  // namespace omega

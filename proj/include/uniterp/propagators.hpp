#pragma once

// Ground-truth time-evolution operators U(t) = U(t, 0) from a Hamiltonian
// spec: second-order Magnus expansion with trapezoidal quadrature, and a
// left-endpoint Trotter product. A 5000-step Trotter run serves as the
// reference oracle.

#include <vector>

#include "uniterp/linalg.hpp"
#include "uniterp/pauli.hpp"

namespace uniterp {

enum class PropMethod { Magnus2, Trotter };

inline std::string to_string(PropMethod m) {
  return m == PropMethod::Magnus2 ? "magnus2" : "trotter";
}

inline PropMethod prop_method_from_string(const std::string& s) {
  if (s == "magnus2") return PropMethod::Magnus2;
  if (s == "trotter") return PropMethod::Trotter;
  throw ContractError("unknown propagator method '" + s + "'");
}

struct PropagatorConfig {
  PropMethod method = PropMethod::Magnus2;
  int steps = 50;
};

inline constexpr int kReferenceSteps = 5000;

struct MagnusTerms {
  CMat o1;  // -i * integral of H
  CMat o2;  // -(1/2) * double-integral commutator term
};

/// Trapezoidal weights for n uniform intervals over [0, t]: h/2 at the
/// endpoints, h inside, h = t/n.
inline std::vector<double> trapezoid_weights(double t, int steps) {
  const double h = t / steps;
  std::vector<double> w(static_cast<std::size_t>(steps) + 1, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

/// First two Magnus terms on a uniform grid of `steps` intervals. The outer
/// integral uses the trapezoidal rule; the inner integral reuses the same
/// grid as a running trapezoidal prefix, so
///   O2 ~ -(1/2) sum_j w_j [H_j, S_j],  S_j = prefix integral of H.
inline MagnusTerms magnus2_terms(const HamiltonianEvaluator& ham, double t, int steps) {
  if (t < 0.0) {
    throw ContractError("magnus2_terms: t must be >= 0");
  }
  if (steps < 1) {
    throw ContractError("magnus2_terms: steps must be >= 1");
  }
  const Eigen::Index d = ham.spec().dim();
  if (t == 0.0) {
    return MagnusTerms{CMat::Zero(d, d), CMat::Zero(d, d)};
  }
  const double h = t / steps;
  const std::vector<double> w = trapezoid_weights(t, steps);
  const cplx mi(0.0, -1.0);

  CMat o1_int = CMat::Zero(d, d);       // integral of H
  CMat o2_int = CMat::Zero(d, d);       // integral of [H, prefix]
  CMat prefix = CMat::Zero(d, d);       // S_j
  CMat h_prev = ham.at(0.0);
  o1_int += w[0] * h_prev;
  for (int j = 1; j <= steps; ++j) {
    const CMat h_j = ham.at(j * h);
    o1_int += w[static_cast<std::size_t>(j)] * h_j;
    prefix += 0.5 * h * (h_prev + h_j);
    o2_int += w[static_cast<std::size_t>(j)] * (h_j * prefix - prefix * h_j);
    h_prev = h_j;
  }
  return MagnusTerms{mi * o1_int, -0.5 * o2_int};
}

inline MagnusTerms magnus2_terms(const HamiltonianSpec& spec, double t, int steps) {
  return magnus2_terms(HamiltonianEvaluator(spec), t, steps);
}

/// U(t) = exp(O1 + O2); unitary by construction since O1 + O2 is
/// anti-Hermitian.
inline UnitaryMatrix magnus2_propagator(const HamiltonianEvaluator& ham, double t,
                                        int steps = 50) {
  const MagnusTerms terms = magnus2_terms(ham, t, steps);
  return UnitaryMatrix{expm_antihermitian(terms.o1 + terms.o2)};
}

inline UnitaryMatrix magnus2_propagator(const HamiltonianSpec& spec, double t,
                                        int steps = 50) {
  return magnus2_propagator(HamiltonianEvaluator(spec), t, steps);
}

/// Left-ordered product of short-time exponentials from Eq.-(7)-style
/// discretization: U = exp(-i H(t_{n-1}) dt) ... exp(-i H(t_0) dt) with
/// t_m = m dt, dt = t/steps. H is evaluated at the left endpoint of each
/// sub-interval.
inline UnitaryMatrix trotter_propagator(const HamiltonianEvaluator& ham, double t,
                                        int steps = 50) {
  if (t < 0.0) {
    throw ContractError("trotter_propagator: t must be >= 0");
  }
  if (steps < 1) {
    throw ContractError("trotter_propagator: steps must be >= 1");
  }
  const Eigen::Index d = ham.spec().dim();
  CMat u = CMat::Identity(d, d);
  if (t == 0.0) {
    return UnitaryMatrix{std::move(u)};
  }
  const double dt = t / steps;
  for (int m = 0; m < steps; ++m) {
    u = expm_hermitian_generator(ham.at(m * dt), dt) * u;
  }
  return UnitaryMatrix{std::move(u)};
}

inline UnitaryMatrix trotter_propagator(const HamiltonianSpec& spec, double t,
                                        int steps = 50) {
  return trotter_propagator(HamiltonianEvaluator(spec), t, steps);
}

/// Fine-grained Trotter oracle used as ground truth in tests and dataset
/// cross-checks.
inline UnitaryMatrix reference_propagator(const HamiltonianEvaluator& ham, double t) {
  return trotter_propagator(ham, t, kReferenceSteps);
}

inline UnitaryMatrix reference_propagator(const HamiltonianSpec& spec, double t) {
  return reference_propagator(HamiltonianEvaluator(spec), t);
}

inline UnitaryMatrix propagate(const HamiltonianEvaluator& ham, double t,
                               const PropagatorConfig& cfg) {
  return cfg.method == PropMethod::Magnus2 ? magnus2_propagator(ham, t, cfg.steps)
                                           : trotter_propagator(ham, t, cfg.steps);
}

inline UnitaryMatrix propagate(const HamiltonianSpec& spec, double t,
                               const PropagatorConfig& cfg) {
  return propagate(HamiltonianEvaluator(spec), t, cfg);
}

}  // namespace uniterp

#pragma once

// N-qubit Pauli-string operators and time-dependent Hamiltonians
//   H(t) = sum_k A_k sin(w_k t + phi_k) * sigma_k
// in two families: General (all 4^N - 1 non-identity strings) and IsingNN
// (N-1 nearest-neighbour ZZ couplings plus N single-site X fields, open
// boundary). Qubit 1 is the leftmost Kronecker factor throughout.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "uniterp/errors.hpp"
#include "uniterp/io.hpp"
#include "uniterp/linalg.hpp"

namespace uniterp {

struct PauliString {
  std::string labels;  // one of I X Y Z per qubit

  int qubits() const { return static_cast<int>(labels.size()); }
  bool is_identity() const { return labels.find_first_not_of('I') == std::string::npos; }

  static PauliString validated(std::string labels) {
    if (labels.empty()) {
      throw ContractError("PauliString: empty label string");
    }
    for (char c : labels) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ContractError(std::string("PauliString: invalid label '") + c + "'");
      }
    }
    return PauliString{std::move(labels)};
  }

  bool operator==(const PauliString& other) const = default;
};

struct CoefficientParams {
  double amplitude = 0.0;  // energy units, hbar = 1
  double omega = 0.0;      // rad per unit time
  double phase = 0.0;      // rad

  double at(double t) const { return amplitude * std::sin(omega * t + phase); }
};

struct HamiltonianTerm {
  PauliString pauli;
  CoefficientParams coeff;
};

enum class Family { General, IsingNN };

inline std::string to_string(Family f) {
  return f == Family::General ? "general" : "ising";
}

inline Family family_from_string(const std::string& s) {
  if (s == "general") return Family::General;
  if (s == "ising") return Family::IsingNN;
  throw ContractError("unknown Hamiltonian family '" + s + "'");
}

struct SamplingRanges {
  double amp_min = 0.0, amp_max = 1.0;
  double omega_min = 0.0, omega_max = 2.0 * std::numbers::pi;
  double phase_min = 0.0, phase_max = 2.0 * std::numbers::pi;

  void validate() const {
    if (!(amp_min <= amp_max) || !(omega_min <= omega_max) || !(phase_min <= phase_max)) {
      throw ContractError("SamplingRanges: min exceeds max");
    }
  }
};

struct HamiltonianSpec {
  int qubits = 0;
  Family family = Family::General;
  std::uint64_t seed = 0;
  SamplingRanges ranges;
  std::vector<HamiltonianTerm> terms;

  Eigen::Index dim() const { return Eigen::Index{1} << qubits; }
};

inline std::int64_t general_term_count(int qubits) {
  std::int64_t n = 1;
  for (int i = 0; i < qubits; ++i) n *= 4;
  return n - 1;
}

inline std::int64_t ising_term_count(int qubits) { return 2 * qubits - 1; }

/// 2^N x 2^N realization as the Kronecker product of single-qubit Paulis,
/// qubit 1 leftmost.
inline CMat pauli_matrix(const PauliString& s) {
  static const cplx i1(0.0, 1.0);
  CMat out = CMat::Identity(1, 1);
  for (char c : s.labels) {
    CMat p(2, 2);
    switch (c) {
      case 'I': p << 1, 0, 0, 1; break;
      case 'X': p << 0, 1, 1, 0; break;
      case 'Y': p << 0, -i1, i1, 0; break;
      case 'Z': p << 1, 0, 0, -1; break;
      default: throw ContractError(std::string("pauli_matrix: invalid label '") + c + "'");
    }
    CMat next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index col = 0; col < out.cols(); ++col) {
        next.block(2 * r, 2 * col, 2, 2) = out(r, col) * p;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// All 4^N - 1 non-identity strings in lexicographic order (I < X < Y < Z,
/// qubit 1 most significant).
inline std::vector<PauliString> enumerate_general_strings(int qubits) {
  static const char kLabels[4] = {'I', 'X', 'Y', 'Z'};
  std::vector<PauliString> out;
  const std::int64_t total = general_term_count(qubits) + 1;
  out.reserve(static_cast<std::size_t>(total - 1));
  for (std::int64_t code = 1; code < total; ++code) {
    std::string labels(static_cast<std::size_t>(qubits), 'I');
    std::int64_t rest = code;
    for (int q = qubits - 1; q >= 0; --q) {
      labels[static_cast<std::size_t>(q)] = kLabels[rest % 4];
      rest /= 4;
    }
    out.push_back(PauliString{std::move(labels)});
  }
  return out;
}

/// Open-boundary Ising layout: Z_i Z_{i+1} for i = 1..N-1, then X_i for
/// i = 1..N. This order fixes the coefficient layout of the effective-
/// Hamiltonian models.
inline std::vector<PauliString> enumerate_ising_strings(int qubits) {
  std::vector<PauliString> out;
  out.reserve(static_cast<std::size_t>(ising_term_count(qubits)));
  for (int i = 0; i + 1 < qubits; ++i) {
    std::string labels(static_cast<std::size_t>(qubits), 'I');
    labels[static_cast<std::size_t>(i)] = 'Z';
    labels[static_cast<std::size_t>(i + 1)] = 'Z';
    out.push_back(PauliString{std::move(labels)});
  }
  for (int i = 0; i < qubits; ++i) {
    std::string labels(static_cast<std::size_t>(qubits), 'I');
    labels[static_cast<std::size_t>(i)] = 'X';
    out.push_back(PauliString{std::move(labels)});
  }
  return out;
}

inline void validate_spec(const HamiltonianSpec& spec) {
  if (spec.qubits < 1) {
    throw ContractError("HamiltonianSpec: qubit count must be >= 1");
  }
  spec.ranges.validate();
  const auto expected = spec.family == Family::General
                            ? enumerate_general_strings(spec.qubits)
                            : enumerate_ising_strings(spec.qubits);
  if (spec.terms.size() != expected.size()) {
    throw ContractError("HamiltonianSpec: family " + to_string(spec.family) + " expects " +
                        std::to_string(expected.size()) + " terms, found " +
                        std::to_string(spec.terms.size()));
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const PauliString& s = spec.terms[k].pauli;
    if (s.qubits() != spec.qubits) {
      throw ContractError("HamiltonianSpec: term label length differs from qubit count");
    }
    if (s.is_identity()) {
      throw ContractError("HamiltonianSpec: identity string is excluded from the basis");
    }
    if (!(s == expected[k])) {
      throw ContractError("HamiltonianSpec: term " + std::to_string(k) +
                          " is '" + s.labels + "', expected '" + expected[k].labels + "'");
    }
    const CoefficientParams& c = spec.terms[k].coeff;
    if (!std::isfinite(c.amplitude) || !std::isfinite(c.omega) || !std::isfinite(c.phase)) {
      throw ContractError("HamiltonianSpec: non-finite coefficient parameter");
    }
  }
}

inline constexpr int kDefaultGeneralQubitCap = 6;

/// Draw a random Hamiltonian of the requested family. Deterministic per
/// seed: parameters are drawn term by term in layout order, A then omega
/// then phi, from a mt19937_64 stream.
inline HamiltonianSpec sample_hamiltonian(int qubits, Family family, std::uint64_t seed,
                                          const SamplingRanges& ranges = {},
                                          int general_qubit_cap = kDefaultGeneralQubitCap) {
  if (qubits < 1) {
    throw ContractError("sample_hamiltonian: qubit count must be >= 1");
  }
  ranges.validate();
  if (family == Family::General && qubits > general_qubit_cap) {
    throw ContractError("sample_hamiltonian: general family capped at " +
                        std::to_string(general_qubit_cap) +
                        " qubits (4^N term blowup); use the ising family");
  }
  auto strings = family == Family::General ? enumerate_general_strings(qubits)
                                           : enumerate_ising_strings(qubits);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(ranges.amp_min, ranges.amp_max);
  std::uniform_real_distribution<double> omega(ranges.omega_min, ranges.omega_max);
  std::uniform_real_distribution<double> phase(ranges.phase_min, ranges.phase_max);

  HamiltonianSpec spec;
  spec.qubits = qubits;
  spec.family = family;
  spec.seed = seed;
  spec.ranges = ranges;
  spec.terms.reserve(strings.size());
  for (auto& s : strings) {
    CoefficientParams c;
    c.amplitude = amp(rng);
    c.omega = omega(rng);
    c.phase = phase(rng);
    spec.terms.push_back(HamiltonianTerm{std::move(s), c});
  }
  return spec;
}

/// Caches the realized term matrices of a spec so H(t) is a cheap
/// coefficient re-sum. Construct once per spec in hot paths.
class HamiltonianEvaluator {
 public:
  explicit HamiltonianEvaluator(const HamiltonianSpec& spec) : spec_(&spec) {
    sigmas_.reserve(spec.terms.size());
    for (const auto& term : spec.terms) {
      sigmas_.push_back(pauli_matrix(term.pauli));
    }
  }

  const std::vector<CMat>& term_matrices() const { return sigmas_; }
  const HamiltonianSpec& spec() const { return *spec_; }

  RVec coefficients(double t) const {
    RVec c(static_cast<Eigen::Index>(spec_->terms.size()));
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      c(k) = spec_->terms[static_cast<std::size_t>(k)].coeff.at(t);
    }
    return c;
  }

  CMat at(double t) const {
    const Eigen::Index d = spec_->dim();
    CMat h = CMat::Zero(d, d);
    for (std::size_t k = 0; k < sigmas_.size(); ++k) {
      h += spec_->terms[k].coeff.at(t) * sigmas_[k];
    }
    return h;
  }

 private:
  const HamiltonianSpec* spec_;
  std::vector<CMat> sigmas_;
};

/// H(t) = sum_k A_k sin(w_k t + phi_k) sigma_k. One-shot convenience; use
/// HamiltonianEvaluator when evaluating many times.
inline CMat evaluate_hamiltonian(const HamiltonianSpec& spec, double t) {
  if (!std::isfinite(t)) {
    throw ContractError("evaluate_hamiltonian: t must be finite");
  }
  return HamiltonianEvaluator(spec).at(t);
}

/// sum_k coeffs[k] sigma_k over the layout's term order; the carrier of the
/// effective-Hamiltonian strategy where a network supplies the coefficients.
inline CMat hamiltonian_from_coeffs(const HamiltonianSpec& layout, const RVec& coeffs) {
  if (static_cast<std::size_t>(coeffs.size()) != layout.terms.size()) {
    throw ContractError("hamiltonian_from_coeffs: expected " +
                        std::to_string(layout.terms.size()) + " coefficients, got " +
                        std::to_string(coeffs.size()));
  }
  const Eigen::Index d = layout.dim();
  CMat h = CMat::Zero(d, d);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    h += coeffs(k) * pauli_matrix(layout.terms[static_cast<std::size_t>(k)].pauli);
  }
  return h;
}

// --- JSON format -----------------------------------------------------------
// {qubits, family, seed, ranges, terms: [{pauli: "XZ...", A, omega, phi}]}

inline json spec_to_json(const HamiltonianSpec& spec) {
  json terms = json::array();
  for (const auto& term : spec.terms) {
    terms.push_back({{"pauli", term.pauli.labels},
                     {"A", term.coeff.amplitude},
                     {"omega", term.coeff.omega},
                     {"phi", term.coeff.phase}});
  }
  return json{{"qubits", spec.qubits},
              {"family", to_string(spec.family)},
              {"seed", spec.seed},
              {"ranges",
               {{"A", {spec.ranges.amp_min, spec.ranges.amp_max}},
                {"omega", {spec.ranges.omega_min, spec.ranges.omega_max}},
                {"phi", {spec.ranges.phase_min, spec.ranges.phase_max}}}},
              {"terms", std::move(terms)}};
}

inline HamiltonianSpec spec_from_json(const json& j) {
  HamiltonianSpec spec;
  try {
    spec.qubits = j.at("qubits").get<int>();
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.seed = j.at("seed").get<std::uint64_t>();
    const json& r = j.at("ranges");
    spec.ranges.amp_min = r.at("A").at(0).get<double>();
    spec.ranges.amp_max = r.at("A").at(1).get<double>();
    spec.ranges.omega_min = r.at("omega").at(0).get<double>();
    spec.ranges.omega_max = r.at("omega").at(1).get<double>();
    spec.ranges.phase_min = r.at("phi").at(0).get<double>();
    spec.ranges.phase_max = r.at("phi").at(1).get<double>();
    for (const json& t : j.at("terms")) {
      HamiltonianTerm term;
      term.pauli = PauliString::validated(t.at("pauli").get<std::string>());
      term.coeff.amplitude = t.at("A").get<double>();
      term.coeff.omega = t.at("omega").get<double>();
      term.coeff.phase = t.at("phi").get<double>();
      spec.terms.push_back(std::move(term));
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("HamiltonianSpec: malformed JSON: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

inline void save_spec(const std::filesystem::path& path, const HamiltonianSpec& spec) {
  write_text_file(path, spec_to_json(spec).dump(2) + "\n");
}

inline HamiltonianSpec load_spec(const std::filesystem::path& path) {
  return spec_from_json(parse_json_file(path));
}

}  // namespace uniterp

#pragma once

// Dense complex matrix kernels: Hermitian eigendecomposition, structure-
// preserving matrix exponentials, nearest-unitary projection, norms and
// gate fidelity. Everything here is a pure function over Eigen matrices.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "uniterp/errors.hpp"

namespace uniterp {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kHermTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kDensityTol = 1e-10;

/// Element-wise l1 norm: sum of complex moduli of all entries.
inline double l1_norm(const CMat& a) { return a.cwiseAbs().sum(); }

inline CMat identity(Eigen::Index d) { return CMat::Identity(d, d); }

/// ||A - A†||_inf, the largest entrywise deviation from Hermiticity.
inline double hermiticity_defect(const CMat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// ||U U† - 1||_1; zero for exact unitaries.
inline double unitarity_defect(const CMat& u) {
  return l1_norm(u * u.adjoint() - identity(u.rows()));
}

inline bool is_hermitian(const CMat& a, double tol = kHermTol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

struct HermEig {
  RVec eigenvalues;   // ascending
  CMat eigenvectors;  // columns, unitary
};

/// Eigendecomposition H = V diag(w) V† of a Hermitian matrix.
inline HermEig herm_eig(const CMat& h, double tol = kHermTol) {
  if (h.rows() != h.cols()) {
    throw ContractError("herm_eig: matrix is not square");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= tol)) {
    throw ContractError("herm_eig: input is not Hermitian (defect " +
                        std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return HermEig{solver.eigenvalues(), solver.eigenvectors()};
}

/// exp(-i s H) for Hermitian H, via the eigendecomposition. The result is
/// structurally unitary up to eigensolver precision.
inline CMat expm_hermitian_generator(const CMat& h, double s) {
  const HermEig eig = herm_eig(h);
  const Eigen::Index d = h.rows();
  CVec phases(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    phases(k) = std::exp(cplx(0.0, -s * eig.eigenvalues(k)));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

/// exp(Omega) for anti-Hermitian Omega, computed through the Hermitian
/// matrix i*Omega so the output stays exactly unitary.
inline CMat expm_antihermitian(const CMat& omega, double tol = kHermTol) {
  const double defect = (omega + omega.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= tol)) {
    throw ContractError("expm_antihermitian: input is not anti-Hermitian (defect " +
                        std::to_string(defect) + ")");
  }
  return expm_hermitian_generator(cplx(0.0, 1.0) * omega, 1.0);
}

/// Polar factor W of A = W P, the unitary closest to A in Frobenius norm.
/// Computed as A (A†A)^{-1/2} from the eigendecomposition of A†A.
inline CMat nearest_unitary(const CMat& a) {
  if (a.rows() != a.cols()) {
    throw ContractError("nearest_unitary: matrix is not square");
  }
  const CMat gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMat> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("nearest_unitary: eigensolver did not converge");
  }
  const RVec& lam = solver.eigenvalues();  // ascending, >= 0 up to roundoff
  const double smax = std::sqrt(std::max(lam(lam.size() - 1), 0.0));
  const double smin = std::sqrt(std::max(lam(0), 0.0));
  if (smin <= 1e-12 * smax || smax == 0.0) {
    throw NumericalError(
        "nearest_unitary: input is numerically rank-deficient "
        "(singular values " + std::to_string(smin) + " .. " + std::to_string(smax) + ")");
  }
  RVec inv_sqrt(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    inv_sqrt(k) = 1.0 / std::sqrt(lam(k));
  }
  const CMat& v = solver.eigenvectors();
  return a * (v * inv_sqrt.asDiagonal() * v.adjoint());
}

/// Gate fidelity |tr(U† V) / d|^2; phase-insensitive, 1 iff V = e^{i phi} U.
inline double gate_fidelity(const CMat& u, const CMat& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ContractError("gate_fidelity: dimension mismatch");
  }
  const cplx overlap = (u.adjoint() * v).trace() / static_cast<double>(u.rows());
  return std::norm(overlap);
}

// Validating wrappers for the two structured matrix roles. Raw model outputs
// stay plain CMat until projected.

struct DensityMatrix {
  CMat m;

  static DensityMatrix checked(CMat rho, double tol = kDensityTol) {
    if (rho.rows() != rho.cols()) {
      throw ContractError("DensityMatrix: matrix is not square");
    }
    if (hermiticity_defect(rho) > tol) {
      throw ContractError("DensityMatrix: not Hermitian within tolerance");
    }
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > tol) {
      throw ContractError("DensityMatrix: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMat> solver(rho);
    if (solver.info() != Eigen::Success || solver.eigenvalues()(0) < -tol) {
      throw ContractError("DensityMatrix: not positive semi-definite");
    }
    return DensityMatrix{std::move(rho)};
  }
};

struct UnitaryMatrix {
  CMat m;

  static UnitaryMatrix checked(CMat u, double tol = kUnitaryTol) {
    if (u.rows() != u.cols()) {
      throw ContractError("UnitaryMatrix: matrix is not square");
    }
    const double defect = unitarity_defect(u);
    if (!(defect <= tol)) {
      throw ContractError("UnitaryMatrix: unitarity defect " +
                          std::to_string(defect) + " exceeds tolerance");
    }
    return UnitaryMatrix{std::move(u)};
  }
};

/// U rho U†. Preserves trace and spectrum.
inline DensityMatrix evolve_state(const DensityMatrix& rho0, const UnitaryMatrix& u) {
  if (rho0.m.rows() != u.m.rows()) {
    throw ContractError("evolve_state: dimension mismatch");
  }
  return DensityMatrix{u.m * rho0.m * u.m.adjoint()};
}

}  // namespace uniterp

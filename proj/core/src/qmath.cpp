// Copyright 2026 The ccxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccx/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ccx/error.hpp"

namespace ccx {

std::string_view category_name(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::Usage: return "usage";
        case ErrorCategory::Schema: return "schema";
        case ErrorCategory::Numerical: return "numerical";
        case ErrorCategory::Io: return "io";
    }
    return "unknown";
}

std::size_t qubits_for_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim || (dim & (dim - 1)) != 0) {
        throw usage_error("BadDimension",
                          "dimension " + std::to_string(dim) + " is not a power of two in [1, 64]");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    return n;
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw numerical_error("DimensionMismatch", "matrix shapes differ");
    }
    return max_abs(a - b);
}

double hermiticity_error(const ComplexMatrix &m) {
    return max_abs(m - m.adjoint());
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw numerical_error("NotUnitary", "unitary must be square");
    }
    if (!m_.allFinite()) {
        throw numerical_error("NotUnitary", "non-finite entry in unitary");
    }
    qubits_for_dim(static_cast<std::size_t>(m_.rows()));
    const ComplexMatrix id = ComplexMatrix::Identity(m_.rows(), m_.cols());
    const double err = max_abs(m_.adjoint() * m_ - id);
    if (err > tolerance) {
        throw numerical_error("NotUnitary", "max |U^dag U - I| = " + std::to_string(err));
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    return UnitaryMatrix(ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(dim)));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(m_.adjoint());
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &rhs) const {
    if (dim() != rhs.dim()) {
        throw numerical_error("DimensionMismatch", "unitary product of different dimensions");
    }
    return UnitaryMatrix(m_ * rhs.m_);
}

// ---------------------------------------------------------------------------

StateVector::StateVector(ComplexVector amplitudes, double tolerance) : v_(std::move(amplitudes)) {
    qubits_for_dim(static_cast<std::size_t>(v_.size()));
    if (!v_.allFinite()) {
        throw numerical_error("NotNormalized", "non-finite amplitude");
    }
    const double norm = v_.norm();
    if (std::abs(norm - 1.0) > tolerance) {
        throw numerical_error("NotNormalized", "state norm " + std::to_string(norm));
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw usage_error("BadIndex", "basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

ComplexMatrix StateVector::projector() const {
    return v_ * v_.adjoint();
}

Eigen::VectorXd StateVector::probabilities() const {
    return v_.cwiseAbs2();
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw numerical_error("NotDensity", "density matrix must be square");
    }
    qubits_for_dim(static_cast<std::size_t>(m_.rows()));
    if (!m_.allFinite()) {
        throw numerical_error("NotDensity", "non-finite entry");
    }
    const double herm = hermiticity_error(m_);
    if (herm > tol::kConstruction) {
        throw numerical_error("NotHermitian", "max |rho - rho^dag| = " + std::to_string(herm));
    }
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) {
        throw numerical_error("NotDensity", "trace " + std::to_string(tr));
    }
    const double lo = hermitian_eigen(m_).values.minCoeff();
    if (lo < -1e-9) {
        throw numerical_error("NotPSD", "minimum eigenvalue " + std::to_string(lo));
    }
}

DensityMatrix::DensityMatrix(const StateVector &psi) : m_(psi.projector()) {}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

Eigen::VectorXd DensityMatrix::probabilities() const {
    Eigen::VectorXd p = m_.diagonal().real();
    return p.cwiseMax(0.0);
}

// ---------------------------------------------------------------------------

HermitianEigen hermitian_eigen(const ComplexMatrix &h) {
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("EigenFailure", "Hermitian eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Eigenvalues this close to zero are solver noise; keeping them would put
// spurious O(1e-8) square roots into every downstream fidelity.
double spectral_floor(const Eigen::VectorXd &values) {
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    return 64.0 * std::numeric_limits<double>::epsilon() * scale *
           static_cast<double>(values.size());
}

ComplexMatrix sqrt_from_eigen(const HermitianEigen &eig) {
    const double floor = spectral_floor(eig.values);
    Eigen::VectorXd roots(eig.values.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        const double v = eig.values(i);
        roots(i) = v > floor ? std::sqrt(v) : 0.0;
    }
    return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &h) {
    if (h.rows() != h.cols()) {
        throw numerical_error("NotHermitian", "matrix must be square");
    }
    const double herm = hermiticity_error(h);
    if (herm > tol::kValidation) {
        throw numerical_error("NotHermitian", "max |h - h^dag| = " + std::to_string(herm));
    }
    const HermitianEigen eig = hermitian_eigen(h);
    if (eig.values.size() > 0 && eig.values.minCoeff() < -tol::kValidation) {
        throw numerical_error("NotPSD",
                              "eigenvalue " + std::to_string(eig.values.minCoeff()) + " < 0");
    }
    return sqrt_from_eigen(eig);
}

double uhlmann_fidelity(const ComplexMatrix &rho, const ComplexMatrix &lam) {
    if (rho.rows() != lam.rows() || rho.cols() != lam.cols()) {
        throw numerical_error("DimensionMismatch", "state_fidelity: dimensions " +
                                                       std::to_string(rho.rows()) + " vs " +
                                                       std::to_string(lam.rows()));
    }
    // Tr sqrt(sqrt(rho) lam sqrt(rho)) is the trace norm of sqrt(rho) sqrt(lam):
    // with A = sqrt(rho) sqrt(lam), sqrt(rho) lam sqrt(rho) = A A^dag.
    const ComplexMatrix a = matrix_sqrt_psd(rho) * matrix_sqrt_psd(lam);
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const double root = svd.singularValues().sum();
    return std::clamp(root * root, 0.0, 1.0);
}

double state_fidelity(const DensityMatrix &rho, const DensityMatrix &lam) {
    return uhlmann_fidelity(rho.matrix(), lam.matrix());
}

double state_fidelity(const StateVector &psi, const DensityMatrix &rho) {
    if (psi.dim() != rho.dim()) {
        throw numerical_error("DimensionMismatch", "state_fidelity: dimension mismatch");
    }
    const double f = (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

double state_fidelity(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw numerical_error("DimensionMismatch", "state_fidelity: dimension mismatch");
    }
    return std::clamp(std::norm(a.amplitudes().dot(b.amplitudes())), 0.0, 1.0);
}

DensityMatrix project_to_density(const ComplexMatrix &h) {
    if (h.rows() != h.cols()) {
        throw numerical_error("NotSquare", "project_to_density: matrix must be square");
    }
    const HermitianEigen eig = hermitian_eigen(h);
    const Eigen::VectorXd &w = eig.values;  // ascending
    const double trace = w.sum();
    Eigen::VectorXd p;
    if (trace > std::numeric_limits<double>::min()) {
        // Euclidean projection of the normalized spectrum onto the simplex.
        const Eigen::VectorXd v = w / trace;
        const Eigen::Index n = v.size();
        double cumulative = 0.0;
        double shift = 0.0;
        for (Eigen::Index i = n - 1, kept = 1; i >= 0; --i, ++kept) {
            cumulative += v(i);
            const double t = (cumulative - 1.0) / static_cast<double>(kept);
            if (v(i) - t > 0.0) shift = t;
            else break;
        }
        p = (v.array() - shift).cwiseMax(0.0);
    } else {
        p = w.cwiseMax(0.0);
    }
    const double total = p.sum();
    if (!(total > std::numeric_limits<double>::min())) {
        throw numerical_error("ZeroTrace", "all eigenvalues clipped to zero");
    }
    p /= total;
    ComplexMatrix rho = eig.vectors * p.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(rho));
}

}  // namespace ccx

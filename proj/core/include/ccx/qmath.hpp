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

#ifndef CCX_QMATH_HPP
#define CCX_QMATH_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace ccx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double kConstruction = 1e-10;  // invariants checked when a value is built
inline constexpr double kValidation = 1e-6;     // accepting caller-supplied matrices
inline constexpr double kAlgebraic = 1e-8;      // algebraic identities between results
}  // namespace tol

/// Largest dimension handled anywhere (six qubits).
inline constexpr std::size_t kMaxDim = 64;

/// Returns log2(dim) or throws if dim is not a power of two in [1, 64].
std::size_t qubits_for_dim(std::size_t dim);

double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double hermiticity_error(const ComplexMatrix &m);

/// Standard Kronecker product; `a` is the most significant factor.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Square matrix satisfying U^dagger U = I.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix m, double tolerance = tol::kConstruction);
    static UnitaryMatrix identity(std::size_t dim);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    std::size_t num_qubits() const { return qubits_for_dim(dim()); }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    UnitaryMatrix adjoint() const;
    /// Matrix product `*this * rhs` (rhs acts first).
    UnitaryMatrix operator*(const UnitaryMatrix &rhs) const;

  private:
    ComplexMatrix m_;
};

/// Normalized pure state.
class StateVector {
  public:
    explicit StateVector(ComplexVector amplitudes, double tolerance = tol::kConstruction);
    /// Computational basis state |index> on `num_qubits` qubits.
    static StateVector basis(std::size_t num_qubits, std::size_t index);

    const ComplexVector &amplitudes() const noexcept { return v_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(v_.size()); }
    std::size_t num_qubits() const { return qubits_for_dim(dim()); }
    Complex operator[](Eigen::Index i) const { return v_(i); }

    /// Outer product |psi><psi|.
    ComplexMatrix projector() const;
    /// Born-rule probabilities in the computational basis.
    Eigen::VectorXd probabilities() const;

  private:
    ComplexVector v_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);
    explicit DensityMatrix(const StateVector &psi);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    std::size_t num_qubits() const { return qubits_for_dim(dim()); }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    double purity() const;
    Eigen::VectorXd probabilities() const;

  private:
    ComplexMatrix m_;
};

/// Eigenvalues and eigenvectors of the Hermitian part of `h`, ascending.
struct HermitianEigen {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};
HermitianEigen hermitian_eigen(const ComplexMatrix &h);

/// Principal square root of a Hermitian PSD matrix via its spectral
/// decomposition. Eigenvalues below zero (within tolerance) are clipped.
/// Throws NotHermitian / NotPSD past the validation tolerance.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &h);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) lam sqrt(rho)))^2, clamped to [0, 1].
double state_fidelity(const DensityMatrix &rho, const DensityMatrix &lam);
/// (Tr sqrt(sqrt(a) b sqrt(a)))^2 for unit-trace PSD matrices that have not
/// been wrapped in DensityMatrix (Choi matrices, for one).
double uhlmann_fidelity(const ComplexMatrix &a, const ComplexMatrix &b);
double state_fidelity(const StateVector &psi, const DensityMatrix &rho);
double state_fidelity(const StateVector &a, const StateVector &b);

/// Closest density matrix in Frobenius norm to the Hermitian part of `h`
/// rescaled to unit trace: eigenvalues are shifted down by a common amount
/// and clipped at zero so they sum to one. Falls back to plain clipping when
/// the trace is not positive. Throws ZeroTrace when nothing survives.
DensityMatrix project_to_density(const ComplexMatrix &h);

}  // namespace ccx

#endif  // CCX_QMATH_HPP

#pragma once

#include <span>
#include <string>
#include <vector>

#include "skewinfo/matrix.hpp"

namespace skewinfo {

/// Positive-semidefinite unit-trace Hermitian matrix together with its
/// eigendecomposition. Rank-deficient (boundary) states are accepted.
class DensityMatrix {
 public:
  /// Validates and decomposes `m`. Violations raise ValidationError whose
  /// message starts with the violated invariant: "hermitian", "trace" or
  /// "positivity".
  static DensityMatrix from_matrix(const ComplexMatrix& m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectral() const noexcept { return spectral_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  /// Eigenvalues below this are treated as exact zeros.
  double rank_tolerance() const noexcept { return rank_tolerance_; }

  /// Ascending eigenvalues with values below rank_tolerance() set to zero.
  std::vector<double> clamped_eigenvalues() const;
  double min_eigenvalue() const { return spectral_.eigenvalues.front(); }

 private:
  DensityMatrix(ComplexMatrix m, SpectralDecomposition s, double rank_tol)
      : matrix_(std::move(m)), spectral_(std::move(s)), rank_tolerance_(rank_tol) {}

  ComplexMatrix matrix_;
  SpectralDecomposition spectral_;
  double rank_tolerance_;
};

/// Hermitian operator.
class Observable {
 public:
  /// Throws NotHermitian.
  explicit Observable(ComplexMatrix m, double tol = kHermTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

enum class CompletenessCheck { enforce, skip };

/// Channel given by an ordered Kraus list. Zero operators are allowed so that
/// channels of different Kraus rank can be padded to a common length.
class QuantumChannel {
 public:
  /// Throws DimensionMismatch for mixed sizes or an empty list, and
  /// CompletenessViolation if sum K^dagger K deviates from I by more than
  /// 1e-9 in Frobenius norm (unless the check is skipped).
  QuantumChannel(std::string name, std::vector<ComplexMatrix> kraus,
                 CompletenessCheck check = CompletenessCheck::enforce);

  const std::string& name() const noexcept { return name_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  std::size_t dim() const noexcept { return kraus_.front().dim(); }
  std::size_t kraus_count() const noexcept { return kraus_.size(); }
  /// False only for channels built with CompletenessCheck::skip that are not
  /// trace preserving.
  bool complete() const noexcept { return complete_; }

  /// sum_i K_i rho K_i^dagger
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::string name_;
  std::vector<ComplexMatrix> kraus_;
  bool complete_;
};

/// Frobenius distance of sum K^dagger K from the identity.
double completeness_defect(std::span<const ComplexMatrix> kraus);

/// (I + r.sigma) / 2. Throws BlochVectorTooLong if |r|^2 > 1 + 1e-12.
DensityMatrix bloch_qubit(double rx, double ry, double rz);

/// lambda |psi(theta)><psi(theta)| + (1 - lambda) sigma_0 on two qubits, with
/// |psi> = sin(theta)|01> - cos(theta)|10> and
/// sigma_0 = (|00><00| + |11><11|) / 2. Basis order {00, 01, 10, 11}.
/// Throws ParameterOutOfRange unless 0 <= lambda <= 1 and 0 <= theta <= 2 pi.
DensityMatrix gisin_state(double lambda, double theta);

enum class PauliAxis { x, y, z };
enum class TensorSide { left, right };

Observable pauli(PauliAxis axis);
/// sigma (x) I for TensorSide::left, I (x) sigma for TensorSide::right.
Observable lifted_pauli(PauliAxis axis, TensorSide side);

/// {sqrt(1-p) I, sqrt(p) sigma_x}
QuantumChannel bit_flip_channel(double p);
/// {sqrt(1-p) I, sqrt(p) sigma_z}
QuantumChannel phase_flip_channel(double p);

/// Second amplitude-damping Kraus operator. `standard` is sqrt(p)|0><1|,
/// the usual decay towards |0>. `literal` is sqrt(p)|1><1|, which turns the
/// pair into a dephasing channel; it is built without the completeness check.
enum class AmplitudeDampingForm { standard, literal };

/// {|0><0| + sqrt(1-p)|1><1|, K2(p)}
QuantumChannel amplitude_damping_channel(double p,
                                         AmplitudeDampingForm form = AmplitudeDampingForm::standard);

/// {U}. Throws NotUnitary if ||U^dagger U - I||_F > 1e-10.
QuantumChannel unitary_channel(const ComplexMatrix& u, std::string name = "U");

/// The real rotation cos(t)|0><0| + sin(t)|0><1| - sin(t)|1><0| + cos(t)|1><1|.
ComplexMatrix rotation_unitary(double angle);

/// Appends zero operators so every channel has the largest Kraus count in
/// the list. Throws DimensionMismatch when channel dimensions differ.
std::vector<QuantumChannel> pad_kraus(std::span<const QuantumChannel> channels);

/// Tr_B of an operator on C^{dim_a} (x) C^{dim_b}.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

}  // namespace skewinfo

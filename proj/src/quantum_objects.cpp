#include "skewinfo/quantum_objects.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "skewinfo/errors.hpp"

namespace skewinfo {

namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::ParameterOutOfRange, std::string(what) + ": p = " + std::to_string(p) +
                                             " is outside [0, 1]");
  }
}

ComplexMatrix pauli_matrix(PauliAxis axis) {
  const Complex i(0.0, 1.0);
  switch (axis) {
    case PauliAxis::x: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case PauliAxis::y: return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case PauliAxis::z: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  return ComplexMatrix(2);
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (!is_hermitian(m, tol.hermitian)) {
    fail(ErrorCode::ValidationError,
         "hermitian: ||rho - rho^dagger||_F = " + std::to_string(frobenius_distance(m, m.adjoint())));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.hermitian) {
    fail(ErrorCode::ValidationError, "trace: Tr(rho) = " + std::to_string(tr.real()) +
                                         ", expected 1");
  }
  SpectralDecomposition spectral = hermitian_eigendecomposition(m, tol);
  if (spectral.eigenvalues.front() < -tol.eigenvalue) {
    fail(ErrorCode::ValidationError, "positivity: minimum eigenvalue " +
                                         std::to_string(spectral.eigenvalues.front()));
  }
  return DensityMatrix(m, std::move(spectral), tol.eigenvalue);
}

std::vector<double> DensityMatrix::clamped_eigenvalues() const {
  std::vector<double> out = spectral_.eigenvalues;
  for (double& lambda : out) {
    if (lambda < rank_tolerance_) lambda = 0.0;
  }
  return out;
}

Observable::Observable(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  if (!is_hermitian(matrix_, tol)) {
    fail(ErrorCode::NotHermitian, "observable is not Hermitian");
  }
}

double completeness_defect(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) return 0.0;
  ComplexMatrix acc(kraus.front().dim());
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return frobenius_distance(acc, ComplexMatrix::identity(acc.dim()));
}

QuantumChannel::QuantumChannel(std::string name, std::vector<ComplexMatrix> kraus,
                               CompletenessCheck check)
    : name_(std::move(name)), kraus_(std::move(kraus)), complete_(true) {
  if (kraus_.empty()) fail(ErrorCode::DimensionMismatch, "channel '" + name_ + "' has no Kraus operators");
  for (const auto& k : kraus_) {
    if (k.dim() != kraus_.front().dim()) {
      fail(ErrorCode::DimensionMismatch, "channel '" + name_ + "' mixes Kraus operator sizes");
    }
  }
  const double defect = completeness_defect(kraus_);
  complete_ = defect <= kCompletenessTol;
  if (check == CompletenessCheck::enforce && !complete_) {
    fail(ErrorCode::CompletenessViolation,
         "channel '" + name_ + "': ||sum K^dagger K - I||_F = " + std::to_string(defect));
  }
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out(rho.dim());
  for (const auto& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix bloch_qubit(double rx, double ry, double rz) {
  const double r2 = rx * rx + ry * ry + rz * rz;
  if (!(r2 <= 1.0 + 1e-12)) {
    fail(ErrorCode::BlochVectorTooLong, "|r|^2 = " + std::to_string(r2));
  }
  const Complex i(0.0, 1.0);
  const auto rho = ComplexMatrix::from_rows({{0.5 * (1.0 + rz), 0.5 * (rx - i * ry)},
                                             {0.5 * (rx + i * ry), 0.5 * (1.0 - rz)}});
  return DensityMatrix::from_matrix(rho);
}

DensityMatrix gisin_state(double lambda, double theta) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    fail(ErrorCode::ParameterOutOfRange, "gisin_state: lambda = " + std::to_string(lambda));
  }
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
    fail(ErrorCode::ParameterOutOfRange, "gisin_state: theta = " + std::to_string(theta));
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  // |psi> has amplitude s on |01> (index 1) and -c on |10> (index 2).
  ComplexMatrix rho(4);
  rho(0, 0) = 0.5 * (1.0 - lambda);
  rho(3, 3) = 0.5 * (1.0 - lambda);
  rho(1, 1) = lambda * s * s;
  rho(2, 2) = lambda * c * c;
  rho(1, 2) = -lambda * s * c;
  rho(2, 1) = -lambda * s * c;
  return DensityMatrix::from_matrix(rho);
}

Observable pauli(PauliAxis axis) { return Observable(pauli_matrix(axis)); }

Observable lifted_pauli(PauliAxis axis, TensorSide side) {
  const auto sigma = pauli_matrix(axis);
  const auto id = ComplexMatrix::identity(2);
  return Observable(side == TensorSide::left ? kron(sigma, id) : kron(id, sigma));
}

QuantumChannel bit_flip_channel(double p) {
  require_probability(p, "bit_flip_channel");
  return QuantumChannel("bit_flip", {ComplexMatrix::identity(2) * Complex(std::sqrt(1.0 - p)),
                                     pauli_matrix(PauliAxis::x) * Complex(std::sqrt(p))});
}

QuantumChannel phase_flip_channel(double p) {
  require_probability(p, "phase_flip_channel");
  return QuantumChannel("phase_flip", {ComplexMatrix::identity(2) * Complex(std::sqrt(1.0 - p)),
                                       pauli_matrix(PauliAxis::z) * Complex(std::sqrt(p))});
}

QuantumChannel amplitude_damping_channel(double p, AmplitudeDampingForm form) {
  require_probability(p, "amplitude_damping_channel");
  ComplexMatrix k1(2);
  k1(0, 0) = 1.0;
  k1(1, 1) = std::sqrt(1.0 - p);
  ComplexMatrix k2(2);
  if (form == AmplitudeDampingForm::standard) {
    k2(0, 1) = std::sqrt(p);
    return QuantumChannel("amplitude_damping", {k1, k2});
  }
  k2(1, 1) = std::sqrt(p);
  return QuantumChannel("amplitude_damping_literal", {k1, k2}, CompletenessCheck::skip);
}

QuantumChannel unitary_channel(const ComplexMatrix& u, std::string name) {
  const double defect = frobenius_distance(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
  if (defect > kUnitaryTol) {
    fail(ErrorCode::NotUnitary, "||U^dagger U - I||_F = " + std::to_string(defect));
  }
  return QuantumChannel(std::move(name), {u});
}

ComplexMatrix rotation_unitary(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return ComplexMatrix::from_rows({{c, s}, {-s, c}});
}

std::vector<QuantumChannel> pad_kraus(std::span<const QuantumChannel> channels) {
  std::vector<QuantumChannel> out(channels.begin(), channels.end());
  if (out.empty()) return out;
  const std::size_t d = out.front().dim();
  std::size_t longest = 0;
  for (const auto& ch : out) {
    if (ch.dim() != d) {
      fail(ErrorCode::DimensionMismatch, "pad_kraus: channel '" + ch.name() + "' has dimension " +
                                             std::to_string(ch.dim()) + ", expected " +
                                             std::to_string(d));
    }
    longest = std::max(longest, ch.kraus_count());
  }
  for (auto& ch : out) {
    if (ch.kraus_count() == longest) continue;
    auto kraus = ch.kraus();
    kraus.resize(longest, ComplexMatrix::zeros(d));
    ch = QuantumChannel(ch.name(), std::move(kraus),
                        ch.complete() ? CompletenessCheck::enforce : CompletenessCheck::skip);
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a * dim_b != m.dim()) {
    fail(ErrorCode::DimensionMismatch, "partial_trace_second: " + std::to_string(dim_a) + " x " +
                                           std::to_string(dim_b) + " != " +
                                           std::to_string(m.dim()));
  }
  ComplexMatrix out(dim_a);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    }
  }
  return out;
}

}  // namespace skewinfo

#pragma once

namespace skewinfo {

/// Numerical thresholds shared by every module. Each operation that needs one
/// takes a `Tolerances` argument defaulted to these values so callers can
/// tighten or loosen them uniformly.
struct Tolerances {
  /// ||H - H^dagger||_F allowed, relative to max(1, ||H||_F).
  double hermitian = 1e-10;
  /// Frobenius reconstruction error accepted from an eigendecomposition.
  double reconstruction = 1e-9;
  /// Eigenvalues in [-eigenvalue, 0) are treated as exact zeros.
  double eigenvalue = 1e-12;
  /// Jacobi stops once off(H)_F <= jacobi_threshold * ||H||_F.
  double jacobi_threshold = 1e-12;
  int max_sweeps = 100;
};

inline constexpr double kHermTol = 1e-10;
inline constexpr double kReconTol = 1e-9;
inline constexpr double kEigTol = 1e-12;

/// Slack used when checking that a lower bound does not exceed the quantity it
/// bounds.
inline constexpr double kBoundTol = 1e-9;

}  // namespace skewinfo

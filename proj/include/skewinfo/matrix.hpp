#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "skewinfo/tolerances.hpp"

namespace skewinfo {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major. Sized for small quantum
/// systems (d <= 16); nothing here is tuned for large dimensions.
class ComplexMatrix {
 public:
  /// Zero matrix of dimension `dim` (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Builds from nested rows; every row must have as many entries as there
  /// are rows.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Row-major entries; `entries.size()` must be a perfect square.
  static ComplexMatrix from_entries(std::span<const Complex> entries);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool is_zero() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= Complex(-1.0); }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison: max |a_ij - b_ij| <= abs_tol. Dimensions must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol);

/// Kronecker product with the first factor as the most significant index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Returns U^dagger X U.
ComplexMatrix change_basis(const ComplexMatrix& x, const ComplexMatrix& u);

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascend; column k of
/// `eigenvectors` belongs to eigenvalues[k] and has its largest-magnitude
/// component real and positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// U diag(f(lambda)) U^dagger.
  template <typename F>
  ComplexMatrix apply(F&& f) const;
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws NotHermitian or NoConvergence.
SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& h,
                                                   const Tolerances& tol = {});

/// M^s for positive-semidefinite M and s in (0, 1], with 0^s = 0. Eigenvalues
/// in [-tol.eigenvalue, tol.eigenvalue] count as zero, so rounding noise on a
/// null space is not amplified by small exponents.
ComplexMatrix matrix_power(const ComplexMatrix& m, double s, const Tolerances& tol = {});

/// Same as above for an already decomposed matrix.
ComplexMatrix matrix_power(const SpectralDecomposition& spectral, double s,
                           const Tolerances& tol = {});

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(AB) as sum_kl A_kl B_lk, without forming AB.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

template <typename F>
ComplexMatrix SpectralDecomposition::apply(F&& f) const {
  const std::size_t d = eigenvectors.dim();
  std::vector<double> mapped(d);
  for (std::size_t k = 0; k < d; ++k) mapped[k] = f(eigenvalues[k]);
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        acc += eigenvectors(i, k) * mapped[k] * std::conj(eigenvectors(j, k));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace skewinfo

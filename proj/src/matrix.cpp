#include "skewinfo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewinfo/errors.hpp"

namespace skewinfo {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": " + std::to_string(a.dim()) +
                                           " vs " + std::to_string(b.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

// Zeroes a(p, q) with a unitary G acting on columns p and q:
//   G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  a(p, q) = |a(p, q)| e^{i phi}.
// The phase factor reduces the 2x2 block to a real symmetric one, which the
// real rotation [[c, s], [-s, c]] then diagonalizes.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const Complex phase_conj = std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t d = a.dim();
  // A <- A G
  for (std::size_t k = 0; k < d; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  // A <- G^dagger A
  for (std::size_t k = 0; k < d; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V G
  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

// Rotates column `col` so its largest-magnitude entry is real and positive.
// Near-ties go to the lowest row index.
void fix_phase(ComplexMatrix& v, std::size_t col) {
  const std::size_t d = v.dim();
  double largest = 0.0;
  for (std::size_t r = 0; r < d; ++r) largest = std::max(largest, std::abs(v(r, col)));
  if (largest == 0.0) return;
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < d; ++r) {
    if (std::abs(v(r, col)) >= largest * (1.0 - 1e-10)) {
      pivot = r;
      break;
    }
  }
  const Complex rot = std::conj(v(pivot, col)) / std::abs(v(pivot, col));
  for (std::size_t r = 0; r < d; ++r) v(r, col) *= rot;
  v(pivot, col) = std::abs(v(pivot, col));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) fail(ErrorCode::DimensionMismatch, "matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      fail(ErrorCode::DimensionMismatch, "from_rows: matrix must be square");
    }
    std::size_t c = 0;
    for (const auto& value : row) m(r, c++) = value;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_entries(std::span<const Complex> entries) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(entries.size()))));
  if (d == 0 || d * d != entries.size()) {
    fail(ErrorCode::DimensionMismatch,
         "from_entries: " + std::to_string(entries.size()) + " entries is not a square count");
  }
  ComplexMatrix m(d);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

bool ComplexMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) { return z == 0.0; });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t d = lhs.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol) {
  require_same_dim(a, b, "approx_equal");
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (std::abs(a.entries()[i] - b.entries()[i]) > abs_tol) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return frobenius_distance(m, m.adjoint()) <= tol * std::max(1.0, m.frobenius_norm());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix change_basis(const ComplexMatrix& x, const ComplexMatrix& u) {
  return u.adjoint() * (x * u);
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return apply([](double lambda) { return lambda; });
}

SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& h, const Tolerances& tol) {
  if (!is_hermitian(h, tol.hermitian)) {
    fail(ErrorCode::NotHermitian,
         "||H - H^dagger||_F = " + std::to_string(frobenius_distance(h, h.adjoint())));
  }
  const std::size_t d = h.dim();
  // Symmetrize so roundoff in the input cannot leak into the rotations.
  ComplexMatrix a = (h + h.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double threshold = tol.jacobi_threshold * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= tol.max_sweeps) {
      fail(ErrorCode::NoConvergence,
           "Jacobi exceeded " + std::to_string(tol.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  SpectralDecomposition out{std::vector<double>(d), ComplexMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    fix_phase(out.eigenvectors, k);
  }
  return out;
}

ComplexMatrix matrix_power(const SpectralDecomposition& spectral, double s,
                           const Tolerances& tol) {
  if (!(s > 0.0 && s <= 1.0)) {
    fail(ErrorCode::ParameterOutOfRange, "matrix_power exponent must lie in (0, 1], got " +
                                             std::to_string(s));
  }
  for (double lambda : spectral.eigenvalues) {
    if (lambda < -tol.eigenvalue) {
      fail(ErrorCode::NegativeEigenvalue, "eigenvalue " + std::to_string(lambda));
    }
  }
  const double zero = tol.eigenvalue;
  return spectral.apply([s, zero](double lambda) { return lambda <= zero ? 0.0 : std::pow(lambda, s); });
}

ComplexMatrix matrix_power(const ComplexMatrix& m, double s, const Tolerances& tol) {
  return matrix_power(hermitian_eigendecomposition(m, tol), s, tol);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  const ComplexMatrix ab = a * b;
  const ComplexMatrix ba = b * a;
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = ab(i, j) - ba(i, j);
  }
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_product");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t l = 0; l < a.dim(); ++l) acc += a(k, l) * b(l, k);
  }
  return acc;
}

}  // namespace skewinfo

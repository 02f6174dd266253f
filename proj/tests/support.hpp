#pragma once

// Shared helpers for the test suites: seeded random generators for states,
// observables, unitaries and channels, plus naive reference implementations
// of the bounds written term by term from their defining formulas.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/matrix.hpp"
#include "skewinfo/metric.hpp"
#include "skewinfo/observable_bounds.hpp"
#include "skewinfo/quantum_objects.hpp"

namespace testing {

using skewinfo::Complex;
using skewinfo::ComplexMatrix;
using skewinfo::DensityMatrix;
using skewinfo::MetricSpec;
using skewinfo::Observable;
using skewinfo::QuantumChannel;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = gaussian_complex(rng);
  }
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d);
  return (g + g.adjoint()) * Complex(0.5);
}

// Columns orthonormalized by modified Gram-Schmidt; Haar-ish is not needed.
inline ComplexMatrix orthonormal_columns(ComplexMatrix m) {
  const std::size_t d = m.dim();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += std::conj(m(i, j)) * m(i, k);
      for (std::size_t i = 0; i < d; ++i) m(i, k) -= dot * m(i, j);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(m(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) m(i, k) /= norm;
  }
  return m;
}

inline ComplexMatrix random_unitary(Rng& rng, std::size_t d) {
  return orthonormal_columns(random_matrix(rng, d));
}

// rank = 0 means full rank.
inline DensityMatrix random_state(Rng& rng, std::size_t d, std::size_t rank = 0) {
  if (rank == 0) rank = d;
  std::vector<double> w(d, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < rank; ++k) {
    w[k] = uniform(rng, 0.05, 1.0);
    total += w[k];
  }
  for (double& x : w) x /= total;
  const ComplexMatrix u = random_unitary(rng, d);
  const ComplexMatrix rho = u * ComplexMatrix::diagonal(w) * u.adjoint();
  ComplexMatrix sym = (rho + rho.adjoint()) * Complex(0.5);
  return DensityMatrix::from_matrix(sym);
}

inline std::vector<Observable> random_observables(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<Observable> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(random_hermitian(rng, d));
  return out;
}

// Kraus operators K_i = sqrt(w_i) V_i with V_i taken from blocks of a random
// isometry: stack m random d x d blocks, orthonormalize the md x d matrix.
inline QuantumChannel random_channel(Rng& rng, std::size_t d, std::size_t m, const char* name = "random") {
  const std::size_t rows = m * d;
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(rows));
  for (auto& c : cols) {
    for (auto& z : c) z = gaussian_complex(rng);
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < rows; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < rows; ++i) cols[k][i] -= dot * cols[j][i];
    }
    double norm = 0.0;
    for (auto& z : cols[k]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[k]) z /= norm;
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t b = 0; b < m; ++b) {
    ComplexMatrix k(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) k(i, j) = cols[j][b * d + i];
    }
    kraus.push_back(k);
  }
  return QuantumChannel(name, std::move(kraus));
}

inline std::vector<MetricSpec> all_metrics() {
  return {skewinfo::wy_metric(), skewinfo::sld_metric(),
          skewinfo::wyd_metric(skewinfo::WydParameter(1.0 / 3.0)),
          skewinfo::wyd_metric(skewinfo::WydParameter(0.5)),
          skewinfo::wyd_metric(skewinfo::WydParameter(0.8))};
}

inline bool close(double a, double b, double abs_tol, double rel_tol = 0.0) {
  return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
}

// -- reference implementations ---------------------------------------------

struct NaiveBounds {
  double sum = 0.0;
  double lb1 = 0.0;  // only meaningful for n > 2
  double lb2 = 0.0;
  double lb3 = 0.0;
  double lb4 = 0.0;
};

// Bounds written out directly with explicit pair loops and square roots.
inline NaiveBounds naive_observable_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                           const std::vector<ComplexMatrix>& ops) {
  const double n = double(ops.size());
  auto I = [&](const ComplexMatrix& x) { return skewinfo::skew_information(metric, rho, x); };
  NaiveBounds out;
  ComplexMatrix total = ComplexMatrix::zeros(rho.dim());
  for (const auto& a : ops) {
    out.sum += I(a);
    total += a;
  }
  double sp = 0.0, sm = 0.0, rp = 0.0, rm = 0.0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const double ip = I(ops[i] + ops[j]);
      const double im = I(ops[i] - ops[j]);
      sp += ip;
      sm += im;
      rp += std::sqrt(ip);
      rm += std::sqrt(im);
    }
  }
  if (ops.size() > 2) out.lb1 = (sp - rp * rp / ((n - 1) * (n - 1))) / (n - 2);
  out.lb2 = I(total) / n + 2.0 / (n * n * (n - 1)) * rm * rm;
  out.lb3 = (2.0 / (n * (n - 1)) * rp * rp + sm) / (2 * n - 2);
  out.lb4 = (2.0 / (n * (n - 1)) * rm * rm + sp) / (2 * n - 2);
  return out;
}

// Full search over every assignment (first permutation not fixed), row sums
// recomputed from scratch each time.
inline NaiveBounds naive_channel_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                        const std::vector<QuantumChannel>& channels) {
  const std::size_t N = channels.size();
  const std::size_t m = channels.front().kraus_count();
  const double n = double(N);
  auto I = [&](const ComplexMatrix& x) { return skewinfo::skew_information(metric, rho, x); };

  NaiveBounds out;
  for (const auto& c : channels) {
    for (const auto& k : c.kraus()) out.sum += I(k);
  }
  out.lb1 = out.lb2 = out.lb3 = out.lb4 = -1e300;

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> choice(N, 0);
  while (true) {
    double sp = 0, sm = 0, rp2 = 0, rm2 = 0, tot = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<ComplexMatrix> row;
      for (std::size_t t = 0; t < N; ++t) row.push_back(channels[t].kraus()[perms[choice[t]][i]]);
      double rp = 0, rm = 0;
      ComplexMatrix total = ComplexMatrix::zeros(rho.dim());
      for (std::size_t t = 0; t < N; ++t) {
        total += row[t];
        for (std::size_t s = t + 1; s < N; ++s) {
          const double ip = I(row[t] + row[s]);
          const double im = I(row[t] - row[s]);
          sp += ip;
          sm += im;
          rp += std::sqrt(ip);
          rm += std::sqrt(im);
        }
      }
      rp2 += rp * rp;
      rm2 += rm * rm;
      tot += I(total);
    }
    if (N > 2) out.lb1 = std::max(out.lb1, (sp - rp2 / ((n - 1) * (n - 1))) / (n - 2));
    out.lb2 = std::max(out.lb2, tot / n + 2.0 / (n * n * (n - 1)) * rm2);
    out.lb3 = std::max(out.lb3, (2.0 / (n * (n - 1)) * rp2 + sm) / (2 * n - 2));
    out.lb4 = std::max(out.lb4, (2.0 / (n * (n - 1)) * rm2 + sp) / (2 * n - 2));

    std::size_t t = N;
    while (t > 0) {
      --t;
      if (++choice[t] < perms.size()) break;
      choice[t] = 0;
      if (t == 0) return out;
    }
  }
}

inline std::vector<ComplexMatrix> matrices(const std::vector<Observable>& obs) {
  std::vector<ComplexMatrix> out;
  for (const auto& o : obs) out.push_back(o.matrix());
  return out;
}

}  // namespace testing

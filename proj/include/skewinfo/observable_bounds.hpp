#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewinfo/metric.hpp"
#include "skewinfo/quantum_objects.hpp"

namespace skewinfo {

/// Sum of skew informations of n observables and the four lower bounds on it.
///
///   lb1  (n > 2)   1/(n-2) [ S+ - (R+)^2 / (n-1)^2 ]
///   lb2            I(sum A_i) / n + 2 / (n^2 (n-1)) (R-)^2
///   lb3            1/(2n-2) [ 2/(n(n-1)) (R+)^2 + S- ]
///   lb4            1/(2n-2) [ 2/(n(n-1)) (R-)^2 + S+ ]
///
/// with S+- = sum_{i<j} I(A_i +- A_j) and R+- = sum_{i<j} sqrt I(A_i +- A_j).
struct ObservableBoundReport {
  double sum = 0.0;
  /// max(lb1_raw, 0); absent when n == 2.
  std::optional<double> lb1;
  /// lb1 as the formula gives it; may be negative.
  std::optional<double> lb1_raw;
  double lb2 = 0.0;
  double lb3 = 0.0;
  double lb4 = 0.0;
  std::string metric_name;
  std::size_t n = 0;
};

double sum_skew(const MetricSpec& metric, const DensityMatrix& rho,
                std::span<const Observable> observables);

/// Raw value of lb1; throws RequiresThreeObservables when n <= 2.
double lb1(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables);
double lb2(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables);
double lb3(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables);
double lb4(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables);

/// Everything at once, sharing the skew evaluations. Needs n >= 2.
ObservableBoundReport observable_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                        std::span<const Observable> observables);

/// Pair statistics of a vector family, the inputs of every bound formula.
/// For channels the root terms are summed row by row, i.e. they hold
/// sum_rows (sum_{t<s} |a_t + a_s|)^2 rather than a single square.
struct PairTerms {
  double plus_sq = 0.0;           // sum_{i<j} |a_i + a_j|^2
  double minus_sq = 0.0;          // sum_{i<j} |a_i - a_j|^2
  double plus_root_squared = 0.0;   // (sum_{i<j} |a_i + a_j|)^2
  double minus_root_squared = 0.0;  // (sum_{i<j} |a_i - a_j|)^2
};

namespace formulas {
/// n is the family size (observables, or channels for the channel bounds);
/// `total` is |sum a_i|^2.
double lb1(const PairTerms& p, double n);
double lb2(const PairTerms& p, double total, double n);
double lb3(const PairTerms& p, double n);
double lb4(const PairTerms& p, double n);
}  // namespace formulas

/// sum_i |a_i|^2 and the right-hand sides of the two vector inequalities
/// underlying lb3/lb4, plus the lb2-shaped expression they dominate.
struct NormInequalityValues {
  double lhs = 0.0;
  double plus_root_rhs = 0.0;  // 1/(2n-2) [ 2/(n(n-1)) (sum |a_i + a_j|)^2 + sum |a_i - a_j|^2 ]
  double minus_root_rhs = 0.0;  // 1/(2n-2) [ 2/(n(n-1)) (sum |a_i - a_j|)^2 + sum |a_i + a_j|^2 ]
  double total_norm_rhs = 0.0;  // |sum a_i|^2 / n + 2/(n^2 (n-1)) (sum |a_i - a_j|)^2
};

/// Evaluates NormInequalityValues for n >= 2 complex vectors of equal length. Throws
/// RequiresTwoObservables or DimensionMismatch.
NormInequalityValues norm_inequality_check(std::span<const std::vector<Complex>> vectors);

}  // namespace skewinfo

#include "skewinfo/observable_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewinfo/errors.hpp"

namespace skewinfo {

namespace {

double safe_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

void require_common_dim(const DensityMatrix& rho, std::span<const Observable> observables) {
  for (const auto& a : observables) {
    if (a.dim() != rho.dim()) {
      fail(ErrorCode::DimensionMismatch, "observable is " + std::to_string(a.dim()) +
                                             "-dimensional, state is " + std::to_string(rho.dim()));
    }
  }
}

void require_at_least_two(std::size_t n) {
  if (n < 2) fail(ErrorCode::RequiresTwoObservables, "need n >= 2, got " + std::to_string(n));
}

struct Evaluated {
  std::vector<double> single;  // I(A_i)
  PairTerms pairs;
  double total;  // I(sum A_i)
};

Evaluated evaluate(const MetricSpec& metric, const DensityMatrix& rho,
                   std::span<const Observable> observables) {
  if (observables.empty()) fail(ErrorCode::EmptyList, "no observables given");
  require_common_dim(rho, observables);
  const SkewEvaluator skew(metric, rho);
  std::vector<ComplexMatrix> tilde;
  tilde.reserve(observables.size());
  for (const auto& a : observables) tilde.push_back(skew.to_eigenbasis(a.matrix()));

  Evaluated out{{}, {}, 0.0};
  ComplexMatrix total(rho.dim());
  for (const auto& t : tilde) {
    out.single.push_back(skew.in_eigenbasis(t));
    total += t;
  }
  out.total = skew.in_eigenbasis(total);
  double plus_root = 0.0;
  double minus_root = 0.0;
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    for (std::size_t j = i + 1; j < tilde.size(); ++j) {
      const double plus = skew.in_eigenbasis(tilde[i] + tilde[j]);
      const double minus = skew.in_eigenbasis(tilde[i] - tilde[j]);
      out.pairs.plus_sq += plus;
      out.pairs.minus_sq += minus;
      plus_root += safe_sqrt(plus);
      minus_root += safe_sqrt(minus);
    }
  }
  out.pairs.plus_root_squared = plus_root * plus_root;
  out.pairs.minus_root_squared = minus_root * minus_root;
  return out;
}

}  // namespace

namespace formulas {

double lb1(const PairTerms& p, double n) {
  return (p.plus_sq - p.plus_root_squared / ((n - 1.0) * (n - 1.0))) / (n - 2.0);
}

double lb2(const PairTerms& p, double total, double n) {
  return total / n + 2.0 / (n * n * (n - 1.0)) * p.minus_root_squared;
}

double lb3(const PairTerms& p, double n) {
  return (2.0 / (n * (n - 1.0)) * p.plus_root_squared + p.minus_sq) / (2.0 * n - 2.0);
}

double lb4(const PairTerms& p, double n) {
  return (2.0 / (n * (n - 1.0)) * p.minus_root_squared + p.plus_sq) / (2.0 * n - 2.0);
}

}  // namespace formulas

double sum_skew(const MetricSpec& metric, const DensityMatrix& rho,
                std::span<const Observable> observables) {
  if (observables.empty()) fail(ErrorCode::EmptyList, "no observables given");
  require_common_dim(rho, observables);
  const SkewEvaluator skew(metric, rho);
  double acc = 0.0;
  for (const auto& a : observables) acc += skew(a.matrix());
  return acc;
}

double lb1(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables) {
  if (observables.size() <= 2) {
    fail(ErrorCode::RequiresThreeObservables, "lb1 needs n > 2, got " + std::to_string(observables.size()));
  }
  const auto e = evaluate(metric, rho, observables);
  return formulas::lb1(e.pairs, double(observables.size()));
}

double lb2(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables) {
  require_at_least_two(observables.size());
  const auto e = evaluate(metric, rho, observables);
  return formulas::lb2(e.pairs, e.total, double(observables.size()));
}

double lb3(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables) {
  require_at_least_two(observables.size());
  const auto e = evaluate(metric, rho, observables);
  return formulas::lb3(e.pairs, double(observables.size()));
}

double lb4(const MetricSpec& metric, const DensityMatrix& rho, std::span<const Observable> observables) {
  require_at_least_two(observables.size());
  const auto e = evaluate(metric, rho, observables);
  return formulas::lb4(e.pairs, double(observables.size()));
}

ObservableBoundReport observable_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                        std::span<const Observable> observables) {
  require_at_least_two(observables.size());
  const auto e = evaluate(metric, rho, observables);
  const double n = double(observables.size());
  ObservableBoundReport report;
  report.metric_name = metric.name();
  report.n = observables.size();
  for (double v : e.single) report.sum += v;
  if (observables.size() > 2) {
    report.lb1_raw = formulas::lb1(e.pairs, n);
    report.lb1 = std::max(*report.lb1_raw, 0.0);
  }
  report.lb2 = formulas::lb2(e.pairs, e.total, n);
  report.lb3 = formulas::lb3(e.pairs, n);
  report.lb4 = formulas::lb4(e.pairs, n);
  return report;
}

NormInequalityValues norm_inequality_check(std::span<const std::vector<Complex>> vectors) {
  require_at_least_two(vectors.size());
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != len) fail(ErrorCode::DimensionMismatch, "norm_inequality_check: vectors differ in length");
  }
  auto norm_sq = [len](const std::vector<Complex>& a, const std::vector<Complex>& b, double sign) {
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) acc += std::norm(a[k] + sign * b[k]);
    return acc;
  };
  const double n = double(vectors.size());
  NormInequalityValues out;
  std::vector<Complex> total(len);
  PairTerms p;
  double plus_root = 0.0;
  double minus_root = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t k = 0; k < len; ++k) {
      out.lhs += std::norm(vectors[i][k]);
      total[k] += vectors[i][k];
    }
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const double plus = norm_sq(vectors[i], vectors[j], 1.0);
      const double minus = norm_sq(vectors[i], vectors[j], -1.0);
      p.plus_sq += plus;
      p.minus_sq += minus;
      plus_root += std::sqrt(plus);
      minus_root += std::sqrt(minus);
    }
  }
  p.plus_root_squared = plus_root * plus_root;
  p.minus_root_squared = minus_root * minus_root;
  double total_sq = 0.0;
  for (const auto& z : total) total_sq += std::norm(z);
  out.plus_root_rhs = formulas::lb3(p, n);
  out.minus_root_rhs = formulas::lb4(p, n);
  out.total_norm_rhs = formulas::lb2(p, total_sq, n);
  return out;
}

}  // namespace skewinfo

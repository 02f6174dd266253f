#include "skewinfo/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "skewinfo/errors.hpp"

namespace skewinfo {

namespace {

// (x^a - y^a) / (x - y) for x, y >= 0, not both zero; a x^(a-1) on the diagonal.
double power_divided_difference(double x, double y, double a) {
  if (x == y) return a * std::pow(x, a - 1.0);
  if (x < y) std::swap(x, y);
  if (y == 0.0) return std::pow(x, a - 1.0);
  const double u = std::log(x / y);
  return std::pow(y, a - 1.0) * std::expm1(a * u) / std::expm1(u);
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

void invalid(const MetricSpec& metric, const std::string& what) {
  fail(ErrorCode::InvalidMetric, "metric '" + metric.name() + "': " + what);
}

}  // namespace

WydParameter::WydParameter(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " must lie in (0, 1)");
  }
}

MetricSpec wy_metric() {
  return MetricSpec(
      "wy",
      [](double t) {
        const double h = 0.5 * (1.0 + std::sqrt(t));
        return h * h;
      },
      [](double x, double y) {
        const double s = std::sqrt(x) + std::sqrt(y);
        return 4.0 / (s * s);
      },
      [](double x, double y) {
        const double d = std::sqrt(x) - std::sqrt(y);
        return 4.0 * d * d;
      },
      0.25);
}

MetricSpec wyd_metric(WydParameter alpha) {
  const double a = alpha.value();
  const double norm = a * (1.0 - a);
  auto c = [a, norm](double x, double y) {
    return power_divided_difference(x, y, a) * power_divided_difference(x, y, 1.0 - a) / norm;
  };
  return MetricSpec(
      wyd_name(a), [c](double t) { return 1.0 / c(t, 1.0); }, c,
      [a, norm](double x, double y) {
        return (std::pow(x, a) - std::pow(y, a)) * (std::pow(x, 1.0 - a) - std::pow(y, 1.0 - a)) /
               norm;
      },
      norm);
}

MetricSpec sld_metric() {
  return MetricSpec(
      "sld", [](double t) { return 0.5 * (1.0 + t); },
      [](double x, double y) { return 2.0 / (x + y); },
      [](double x, double y) {
        const double s = x + y;
        return s == 0.0 ? 0.0 : 2.0 * (x - y) * (x - y) / s;
      },
      0.5);
}

MetricSpec metric_from_generator(std::string name, MetricSpec::Generator f) {
  const double m = f(0.0);
  auto c = [f](double x, double y) { return 1.0 / (y * f(x / y)); };
  auto chat = [f, m](double x, double y) {
    if (x == y) return 0.0;
    if (y == 0.0) return x / m;
    if (x == 0.0) return y / m;
    return (x - y) * (x - y) / (y * f(x / y));
  };
  MetricSpec spec(std::move(name), std::move(f), std::move(c), std::move(chat), m);
  validate_metric(spec);
  return spec;
}

void validate_metric(const MetricSpec& metric) {
  const double m = metric.metric_constant();
  if (!(m > 0.0) || !std::isfinite(m)) invalid(metric, "metric constant must be positive (regular metric)");
  if (!close(metric.f(1.0), 1.0, 1e-12)) invalid(metric, "f(1) != 1");
  if (!close(metric.f(0.0), m, 1e-6)) invalid(metric, "metric constant differs from f(0)");
  for (double t : {1e-3, 0.1, 0.5, 2.0, 7.3, 1e3}) {
    if (!close(t * metric.f(1.0 / t), metric.f(t), 1e-9)) invalid(metric, "t f(1/t) != f(t)");
  }
  const double samples[] = {1e-6, 0.05, 0.2, 0.5, 0.7, 1.0};
  for (double x : samples) {
    if (std::abs(metric.chat(x, x)) > 1e-12) invalid(metric, "chat(x, x) != 0");
    if (!close(metric.chat(x, 0.0), x / m, 1e-9) || !close(metric.chat(0.0, x), x / m, 1e-9)) {
      invalid(metric, "chat(x, 0) != x / m(c)");
    }
    for (double y : samples) {
      if (std::abs(metric.chat(x, y) - metric.chat(y, x)) > 1e-12) invalid(metric, "chat not symmetric");
      if (!close(metric.c(x, y), metric.c(y, x), 1e-12)) invalid(metric, "c not symmetric");
      if (x != y && !close(metric.chat(x, y), (x - y) * (x - y) * metric.c(x, y), 1e-8)) {
        invalid(metric, "chat != (x - y)^2 c");
      }
    }
  }
}

bool is_wyd_name(std::string_view name) {
  return name == "wyd" || name.starts_with("wyd:");
}

std::string wyd_name(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "wyd:%.12g", alpha);
  return buf;
}

MetricRegistry MetricRegistry::with_builtins() {
  MetricRegistry reg;
  reg.add(wy_metric());
  reg.add(sld_metric());
  return reg;
}

void MetricRegistry::add(MetricSpec metric) {
  validate_metric(metric);
  std::string key = metric.name();
  metrics_.insert_or_assign(std::move(key), std::move(metric));
}

MetricSpec MetricRegistry::resolve(std::string_view name) const {
  if (auto it = metrics_.find(name); it != metrics_.end()) return it->second;
  if (name == "wyd") {
    fail(ErrorCode::ConfigInvalid, "metric 'wyd' needs an exponent, e.g. wyd:0.3333");
  }
  if (name.starts_with("wyd:")) {
    const std::string suffix(name.substr(4));
    char* end = nullptr;
    const double alpha = std::strtod(suffix.c_str(), &end);
    if (suffix.empty() || end != suffix.c_str() + suffix.size()) {
      fail(ErrorCode::ConfigInvalid, "cannot parse WYD exponent '" + suffix + "'");
    }
    return wyd_metric(WydParameter(alpha));
  }
  fail(ErrorCode::UnknownMetric, "unknown metric '" + std::string(name) + "'");
}

std::vector<std::string> MetricRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [key, _] : metrics_) out.push_back(key);
  out.push_back("wyd:<alpha>");
  return out;
}

MetricSpec parse_metric(std::string_view name) {
  return MetricRegistry::with_builtins().resolve(name);
}

Complex metric_value(const MetricSpec& metric, const DensityMatrix& rho, const ComplexMatrix& a,
                     const ComplexMatrix& b) {
  if (a.dim() != rho.dim() || b.dim() != rho.dim()) {
    fail(ErrorCode::DimensionMismatch, "metric_value: operator and state sizes differ");
  }
  if (rho.min_eigenvalue() <= kEigTol) {
    fail(ErrorCode::SingularState, "metric_value needs a positive definite state, min eigenvalue " +
                                       std::to_string(rho.min_eigenvalue()));
  }
  const auto& spectral = rho.spectral();
  const ComplexMatrix at = change_basis(a, spectral.eigenvectors);
  const ComplexMatrix bt = change_basis(b, spectral.eigenvectors);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < rho.dim(); ++k) {
    for (std::size_t l = 0; l < rho.dim(); ++l) {
      acc += metric.c(spectral.eigenvalues[k], spectral.eigenvalues[l]) * std::conj(at(k, l)) *
             bt(k, l);
    }
  }
  return acc;
}

SkewEvaluator::SkewEvaluator(const MetricSpec& metric, const DensityMatrix& rho)
    : basis_(rho.spectral().eigenvectors), weights_(rho.dim() * rho.dim()) {
  const auto lambda = rho.clamped_eigenvalues();
  const double half_m = 0.5 * metric.metric_constant();
  const std::size_t d = rho.dim();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      weights_[k * d + l] = k == l ? 0.0 : half_m * metric.chat(lambda[k], lambda[l]);
    }
  }
}

ComplexMatrix SkewEvaluator::to_eigenbasis(const ComplexMatrix& x) const {
  if (x.dim() != basis_.dim()) {
    fail(ErrorCode::DimensionMismatch, "skew information: operator is " + std::to_string(x.dim()) +
                                           "x" + std::to_string(x.dim()) + ", state is " +
                                           std::to_string(basis_.dim()) + "x" +
                                           std::to_string(basis_.dim()));
  }
  return change_basis(x, basis_);
}

double SkewEvaluator::in_eigenbasis(const ComplexMatrix& x_tilde) const {
  double acc = 0.0;
  const auto entries = x_tilde.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) acc += weights_[i] * std::norm(entries[i]);
  return acc < 0.0 ? 0.0 : acc;
}

double skew_information(const MetricSpec& metric, const DensityMatrix& rho, const ComplexMatrix& x) {
  return SkewEvaluator(metric, rho)(x);
}

double wyd_skew_information_direct(WydParameter alpha, const DensityMatrix& rho,
                                   const ComplexMatrix& x) {
  if (x.dim() != rho.dim()) {
    fail(ErrorCode::DimensionMismatch, "wyd_skew_information_direct: operator and state sizes differ");
  }
  const ComplexMatrix rho_a = matrix_power(rho.matrix(), alpha.value());
  const ComplexMatrix rho_b = matrix_power(rho.matrix(), 1.0 - alpha.value());
  const Complex tr = trace_product(commutator(rho_a, x.adjoint()), commutator(rho_b, x));
  return -0.5 * tr.real();
}

}  // namespace skewinfo

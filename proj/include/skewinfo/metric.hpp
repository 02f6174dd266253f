#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skewinfo/matrix.hpp"
#include "skewinfo/quantum_objects.hpp"

namespace skewinfo {

/// Exponent of the Wigner-Yanase-Dyson family, strictly inside (0, 1).
class WydParameter {
 public:
  /// Throws AlphaOutOfRange.
  explicit WydParameter(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// A regular symmetric monotone metric, described by its operator-monotone
/// generator f (f(1) = 1, t f(1/t) = f(t)) and the derived kernels
///
///   c(x, y)    = 1 / (y f(x / y))          Morozova-Chentsov function
///   chat(x, y) = (x - y)^2 c(x, y)
///   m(c)       = f(0) > 0                  metric constant
///
/// `chat` is the kernel used for skew information. It is extended to the
/// boundary of the state space by continuity: condition t f(1/t) = f(t)
/// gives chat(x, 0) = x / f(0) = x / m(c), and chat(0, 0) = 0. This is what
/// lets rank-deficient states be evaluated. Each built-in metric supplies a
/// closed form for chat so that nearly degenerate eigenvalues never go
/// through a 0 * inf product.
class MetricSpec {
 public:
  using Kernel = std::function<double(double, double)>;
  using Generator = std::function<double(double)>;

  MetricSpec(std::string name, Generator f, Kernel c, Kernel chat, double metric_constant)
      : name_(std::move(name)),
        f_(std::move(f)),
        c_(std::move(c)),
        chat_(std::move(chat)),
        metric_constant_(metric_constant) {}

  const std::string& name() const noexcept { return name_; }
  double f(double t) const { return f_(t); }
  /// Defined for x, y > 0.
  double c(double x, double y) const { return c_(x, y); }
  /// Defined for x, y >= 0.
  double chat(double x, double y) const { return chat_(x, y); }
  double metric_constant() const noexcept { return metric_constant_; }

 private:
  std::string name_;
  Generator f_;
  Kernel c_;
  Kernel chat_;
  double metric_constant_;
};

/// Wigner-Yanase: c = 4 / (sqrt x + sqrt y)^2, m = 1/4.
MetricSpec wy_metric();
/// Wigner-Yanase-Dyson with exponent alpha, m = alpha (1 - alpha).
MetricSpec wyd_metric(WydParameter alpha);
/// Symmetric logarithmic derivative (Bures): c = 2 / (x + y), m = 1/2.
MetricSpec sld_metric();

/// Builds a metric from its generator alone; f must accept t = 0 and return
/// the limit there. The result is validated (see validate_metric).
MetricSpec metric_from_generator(std::string name, MetricSpec::Generator f);

/// Checks f(1) = 1, the symmetry t f(1/t) = f(t), regularity m(c) = f(0) > 0,
/// and the kernel identities chat(x, x) = 0, chat(x, y) = chat(y, x),
/// chat(x, 0) = x / m(c) on sample points. Operator monotonicity of f is not
/// checked. Throws InvalidMetric.
void validate_metric(const MetricSpec& metric);

/// Name-to-metric lookup. Names: "wy", "sld", "wyd:<alpha>" and anything
/// registered with add(). Populate before sharing across threads.
class MetricRegistry {
 public:
  static MetricRegistry with_builtins();

  /// Validates, then stores under metric.name().
  void add(MetricSpec metric);
  /// Throws UnknownMetric, AlphaOutOfRange, or ConfigInvalid for a malformed
  /// "wyd:<alpha>" suffix.
  MetricSpec resolve(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, MetricSpec, std::less<>> metrics_;
};

/// Built-in lookup, equivalent to MetricRegistry::with_builtins().resolve().
MetricSpec parse_metric(std::string_view name);

/// True when the name selects the Wigner-Yanase-Dyson family ("wyd" or
/// "wyd:<alpha>").
bool is_wyd_name(std::string_view name);

/// Canonical "wyd:<alpha>" name with 12 significant digits.
std::string wyd_name(double alpha);

/// K_rho(A, B) = Tr[A^dagger c(L_rho, R_rho) B], evaluated as
/// sum_kl c(lambda_k, lambda_l) conj(A~_kl) B~_kl in rho's eigenbasis.
/// Requires a strictly positive definite rho (SingularState otherwise).
///
/// No normalization is applied: for rho = I/n, K(I, I) = n^2 here, since
/// c(1/n, 1/n) = n; divide by n^2 to recover the K_{I/n}(I, I) = 1 convention.
Complex metric_value(const MetricSpec& metric, const DensityMatrix& rho, const ComplexMatrix& a,
                     const ComplexMatrix& b);

/// Precomputed eigenbasis and chat weights for repeated skew-information
/// evaluations against one (metric, rho) pair.
class SkewEvaluator {
 public:
  SkewEvaluator(const MetricSpec& metric, const DensityMatrix& rho);

  std::size_t dim() const noexcept { return basis_.dim(); }

  /// U^dagger X U.
  ComplexMatrix to_eigenbasis(const ComplexMatrix& x) const;
  /// Skew information of an operator already expressed in rho's eigenbasis.
  double in_eigenbasis(const ComplexMatrix& x_tilde) const;
  double operator()(const ComplexMatrix& x) const { return in_eigenbasis(to_eigenbasis(x)); }

 private:
  ComplexMatrix basis_;
  std::vector<double> weights_;  // (m/2) chat(lambda_k, lambda_l), row-major
};

/// I^c_rho(X) = (m/2) sum_kl chat(lambda_k, lambda_l) |X~_kl|^2, clamped at 0.
/// X may be non-Hermitian (Kraus operators). rho may be singular.
double skew_information(const MetricSpec& metric, const DensityMatrix& rho, const ComplexMatrix& x);

/// -(1/2) Tr([rho^alpha, X^dagger][rho^(1-alpha), X]) by direct matrix
/// arithmetic. Independent of the chat route; used to cross-check it.
double wyd_skew_information_direct(WydParameter alpha, const DensityMatrix& rho,
                                   const ComplexMatrix& x);

}  // namespace skewinfo

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewinfo/metric.hpp"
#include "skewinfo/quantum_objects.hpp"

namespace skewinfo {

/// One permutation per channel. perms[t][i] is the (0-based) index of the
/// Kraus operator of channel t placed in row i of the bound expressions.
struct PermutationAssignment {
  std::vector<std::vector<std::size_t>> perms;

  /// Cycle notation over 1-based indices, e.g. "{(1),(12),(12)}".
  std::string to_string() const;
  friend bool operator==(const PermutationAssignment&, const PermutationAssignment&) = default;
};

/// Cycle notation of a single 0-based permutation: "(1)" for the identity,
/// "(12)", "(123)(45)", ...
std::string cycle_notation(std::span<const std::size_t> perm);

struct SearchOptions {
  /// Maximum number of assignments enumerated before SearchSpaceTooLarge.
  std::size_t budget = 1'000'000;
  /// Fix the first channel's permutation to the identity. Relabelling all
  /// rows at once leaves every bound unchanged, so this loses nothing.
  bool fix_first = true;
};

/// Every assignment, in odometer order: the last channel's permutation varies
/// fastest and each channel runs through S_n in lexicographic order.
std::vector<PermutationAssignment> enumerate_assignments(std::size_t channels, std::size_t kraus_count,
                                                         const SearchOptions& options = {});

/// Maximum of one bound over all assignments. `index` is the position of
/// `argmax` in enumeration order (first maximum wins).
struct BoundChoice {
  double value = 0.0;
  PermutationAssignment argmax;
  std::size_t index = 0;
};

/// Total channel skew information and the four permutation-maximized lower
/// bounds. Each bound applies its observable counterpart row by row (row i
/// collects K^t_{pi_t(i)} across channels t), summing the pair terms over rows:
///
///   clb1 (N > 2)   1/(N-2) { S+ - 1/(N-1)^2 sum_i (R+_i)^2 }
///   clb2           1/N sum_i I(sum_t K^t) + 2/(N^2 (N-1)) sum_i (R-_i)^2
///   clb3           1/(2N-2) { 2/(N(N-1)) sum_i (R+_i)^2 + S- }
///   clb4           1/(2N-2) { 2/(N(N-1)) sum_i (R-_i)^2 + S+ }
struct ChannelBoundReport {
  double sum = 0.0;
  std::optional<BoundChoice> clb1;
  BoundChoice clb2;
  BoundChoice clb3;
  BoundChoice clb4;
  std::string metric_name;
  std::size_t channel_count = 0;
  std::size_t kraus_count = 0;
};

/// sum_i I(K_i). Zero Kraus operators contribute nothing.
double channel_skew_information(const MetricSpec& metric, const DensityMatrix& rho,
                                const QuantumChannel& channel);

/// Channels must already share one Kraus count (see pad_kraus); otherwise
/// DimensionMismatch. clb1 needs N > 2 (RequiresThreeChannels), the others
/// N >= 2 (RequiresTwoChannels).
BoundChoice clb1(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options = {});
BoundChoice clb2(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options = {});
BoundChoice clb3(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options = {});
BoundChoice clb4(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options = {});

/// All four bounds from one pass over the assignments.
ChannelBoundReport channel_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                  std::span<const QuantumChannel> channels,
                                  const SearchOptions& options = {});

/// Label of an assignment for three two-operator channels, following the
/// listing {(1),(1),(1)} = A1, {(1),(12),(12)} = A2, {(1),(1),(12)} = A3,
/// {(1),(12),(1)} = A4 (first permutation normalized to the identity).
/// Other shapes get "#<index+1>" from `index`.
std::string case_label(const PermutationAssignment& assignment, std::size_t index);

}  // namespace skewinfo

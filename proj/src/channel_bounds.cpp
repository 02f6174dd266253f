#include "skewinfo/channel_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "skewinfo/errors.hpp"
#include "skewinfo/observable_bounds.hpp"

namespace skewinfo {

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// (n!)^free_slots, or nullopt once it exceeds `cap`.
std::optional<std::size_t> assignment_count(std::size_t n, std::size_t free_slots, std::size_t cap) {
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    factorial *= k;
    if (factorial > cap) return free_slots == 0 ? std::optional<std::size_t>(1) : std::nullopt;
  }
  std::size_t count = 1;
  for (std::size_t k = 0; k < free_slots; ++k) {
    if (factorial != 0 && count > cap / factorial) return std::nullopt;
    count *= factorial;
  }
  return count;
}

void require_padded(std::span<const QuantumChannel> channels, const DensityMatrix& rho) {
  if (channels.size() < 2) {
    fail(ErrorCode::RequiresTwoChannels, "need N >= 2 channels, got " + std::to_string(channels.size()));
  }
  const std::size_t n = channels.front().kraus_count();
  for (const auto& ch : channels) {
    if (ch.dim() != rho.dim()) {
      fail(ErrorCode::DimensionMismatch, "channel '" + ch.name() + "' acts on dimension " +
                                             std::to_string(ch.dim()) + ", state has " +
                                             std::to_string(rho.dim()));
    }
    if (ch.kraus_count() != n) {
      fail(ErrorCode::DimensionMismatch,
           "channels have different Kraus counts; pad them with pad_kraus first");
    }
  }
}

double safe_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

enum Which : unsigned { kClb1 = 1u, kClb2 = 2u, kClb3 = 4u, kClb4 = 8u, kAll = 15u };

// Evaluates the bound expressions for every assignment and keeps the first
// maximizer of each. Pair skew informations are cached per (t, s, a, b);
// the clb2 total is cached per row tuple.
class BoundSearch {
 public:
  BoundSearch(const MetricSpec& metric, const DensityMatrix& rho,
              std::span<const QuantumChannel> channels)
      : skew_(metric, rho), channels_(channels.size()), kraus_(channels.front().kraus_count()) {
    tilde_.resize(channels_);
    for (std::size_t t = 0; t < channels_; ++t) {
      for (const auto& k : channels[t].kraus()) tilde_[t].push_back(skew_.to_eigenbasis(k));
    }
    const std::size_t n = kraus_;
    plus_.assign(channels_ * channels_ * n * n, 0.0);
    minus_.assign(channels_ * channels_ * n * n, 0.0);
    for (std::size_t t = 0; t < channels_; ++t) {
      for (std::size_t s = t + 1; s < channels_; ++s) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            plus_[pair_index(t, s, a, b)] = skew_.in_eigenbasis(tilde_[t][a] + tilde_[s][b]);
            minus_[pair_index(t, s, a, b)] = skew_.in_eigenbasis(tilde_[t][a] - tilde_[s][b]);
          }
        }
      }
    }
  }

  struct Values {
    double clb1 = 0.0, clb2 = 0.0, clb3 = 0.0, clb4 = 0.0;
  };

  Values evaluate(const PermutationAssignment& assignment, unsigned which) {
    const double big_n = double(channels_);
    PairTerms terms;
    double total = 0.0;
    for (std::size_t i = 0; i < kraus_; ++i) {
      double plus_root = 0.0;
      double minus_root = 0.0;
      for (std::size_t t = 0; t < channels_; ++t) {
        for (std::size_t s = t + 1; s < channels_; ++s) {
          const std::size_t idx = pair_index(t, s, assignment.perms[t][i], assignment.perms[s][i]);
          terms.plus_sq += plus_[idx];
          terms.minus_sq += minus_[idx];
          plus_root += safe_sqrt(plus_[idx]);
          minus_root += safe_sqrt(minus_[idx]);
        }
      }
      terms.plus_root_squared += plus_root * plus_root;
      terms.minus_root_squared += minus_root * minus_root;
      if (which & kClb2) total += row_total(assignment, i);
    }
    Values v;
    if (which & kClb1) v.clb1 = formulas::lb1(terms, big_n);
    if (which & kClb2) v.clb2 = formulas::lb2(terms, total, big_n);
    if (which & kClb3) v.clb3 = formulas::lb3(terms, big_n);
    if (which & kClb4) v.clb4 = formulas::lb4(terms, big_n);
    return v;
  }

 private:
  std::size_t pair_index(std::size_t t, std::size_t s, std::size_t a, std::size_t b) const {
    return ((t * channels_ + s) * kraus_ + a) * kraus_ + b;
  }

  double row_total(const PermutationAssignment& assignment, std::size_t row) {
    std::size_t key = 0;
    for (std::size_t t = 0; t < channels_; ++t) key = key * kraus_ + assignment.perms[t][row];
    if (auto it = totals_.find(key); it != totals_.end()) return it->second;
    ComplexMatrix sum = tilde_[0][assignment.perms[0][row]];
    for (std::size_t t = 1; t < channels_; ++t) sum += tilde_[t][assignment.perms[t][row]];
    const double value = skew_.in_eigenbasis(sum);
    totals_.emplace(key, value);
    return value;
  }

  SkewEvaluator skew_;
  std::size_t channels_;
  std::size_t kraus_;
  std::vector<std::vector<ComplexMatrix>> tilde_;
  std::vector<double> plus_;
  std::vector<double> minus_;
  std::unordered_map<std::size_t, double> totals_;
};

struct SearchResult {
  std::optional<BoundChoice> clb1;
  BoundChoice clb2, clb3, clb4;
};

SearchResult search(const MetricSpec& metric, const DensityMatrix& rho,
                    std::span<const QuantumChannel> channels, const SearchOptions& options,
                    unsigned which) {
  require_padded(channels, rho);
  if ((which & kClb1) && channels.size() <= 2) {
    fail(ErrorCode::RequiresThreeChannels, "clb1 needs N > 2 channels, got " +
                                               std::to_string(channels.size()));
  }
  const auto assignments = enumerate_assignments(channels.size(), channels.front().kraus_count(), options);
  BoundSearch evaluator(metric, rho, channels);

  SearchResult result;
  bool first = true;
  auto consider = [&](BoundChoice& best, double value, std::size_t idx) {
    if (first || value > best.value) {
      best.value = value;
      best.argmax = assignments[idx];
      best.index = idx;
    }
  };
  BoundChoice c1;
  for (std::size_t idx = 0; idx < assignments.size(); ++idx) {
    const auto v = evaluator.evaluate(assignments[idx], which);
    if (which & kClb1) consider(c1, v.clb1, idx);
    if (which & kClb2) consider(result.clb2, v.clb2, idx);
    if (which & kClb3) consider(result.clb3, v.clb3, idx);
    if (which & kClb4) consider(result.clb4, v.clb4, idx);
    first = false;
  }
  if (which & kClb1) result.clb1 = c1;
  return result;
}

}  // namespace

std::string cycle_notation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      out += std::to_string(k + 1);
    }
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

std::string PermutationAssignment::to_string() const {
  std::string out = "{";
  for (std::size_t t = 0; t < perms.size(); ++t) {
    if (t > 0) out += ',';
    out += cycle_notation(perms[t]);
  }
  return out + "}";
}

std::vector<PermutationAssignment> enumerate_assignments(std::size_t channels, std::size_t kraus_count,
                                                         const SearchOptions& options) {
  if (channels == 0 || kraus_count == 0) {
    fail(ErrorCode::ParameterOutOfRange, "enumerate_assignments needs N >= 1 and n >= 1");
  }
  const std::size_t free_slots = options.fix_first ? channels - 1 : channels;
  const auto count = assignment_count(kraus_count, free_slots, options.budget);
  if (!count || *count > options.budget) {
    fail(ErrorCode::SearchSpaceTooLarge, std::to_string(kraus_count) + "!^" +
                                             std::to_string(free_slots) + " assignments exceed budget " +
                                             std::to_string(options.budget));
  }
  const auto perms = all_permutations(kraus_count);
  std::vector<PermutationAssignment> out;
  out.reserve(*count);
  std::vector<std::size_t> digits(free_slots, 0);
  std::vector<std::size_t> identity(kraus_count);
  std::iota(identity.begin(), identity.end(), 0);
  for (std::size_t k = 0; k < *count; ++k) {
    PermutationAssignment a;
    if (options.fix_first) a.perms.push_back(identity);
    for (std::size_t d : digits) a.perms.push_back(perms[d]);
    out.push_back(std::move(a));
    // Increment with the last digit fastest.
    for (std::size_t pos = free_slots; pos-- > 0;) {
      if (++digits[pos] < perms.size()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

double channel_skew_information(const MetricSpec& metric, const DensityMatrix& rho,
                                const QuantumChannel& channel) {
  if (channel.dim() != rho.dim()) {
    fail(ErrorCode::DimensionMismatch, "channel '" + channel.name() + "' acts on dimension " +
                                           std::to_string(channel.dim()) + ", state has " +
                                           std::to_string(rho.dim()));
  }
  const SkewEvaluator skew(metric, rho);
  double acc = 0.0;
  for (const auto& k : channel.kraus()) acc += skew(k);
  return acc;
}

BoundChoice clb1(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options) {
  return *search(metric, rho, channels, options, kClb1).clb1;
}

BoundChoice clb2(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options) {
  return search(metric, rho, channels, options, kClb2).clb2;
}

BoundChoice clb3(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options) {
  return search(metric, rho, channels, options, kClb3).clb3;
}

BoundChoice clb4(const MetricSpec& metric, const DensityMatrix& rho,
                 std::span<const QuantumChannel> channels, const SearchOptions& options) {
  return search(metric, rho, channels, options, kClb4).clb4;
}

ChannelBoundReport channel_bounds(const MetricSpec& metric, const DensityMatrix& rho,
                                  std::span<const QuantumChannel> channels,
                                  const SearchOptions& options) {
  const unsigned which = channels.size() > 2 ? kAll : (kClb2 | kClb3 | kClb4);
  auto found = search(metric, rho, channels, options, which);
  ChannelBoundReport report;
  report.metric_name = metric.name();
  report.channel_count = channels.size();
  report.kraus_count = channels.front().kraus_count();
  for (const auto& ch : channels) report.sum += channel_skew_information(metric, rho, ch);
  report.clb1 = std::move(found.clb1);
  report.clb2 = std::move(found.clb2);
  report.clb3 = std::move(found.clb3);
  report.clb4 = std::move(found.clb4);
  return report;
}

std::string case_label(const PermutationAssignment& assignment, std::size_t index) {
  const auto& p = assignment.perms;
  const bool three_qubit_pairs = p.size() == 3 && std::all_of(p.begin(), p.end(), [](const auto& perm) {
                             return perm.size() == 2;
                           });
  if (!three_qubit_pairs) return "#" + std::to_string(index + 1);
  // Relabel rows so the first channel's permutation becomes the identity.
  const bool first_swapped = p[0][0] == 1;
  auto swapped = [&](std::size_t t) { return (p[t][0] == 1) != first_swapped; };
  const bool second = swapped(1);
  const bool third = swapped(2);
  if (!second && !third) return "A1";
  if (second && third) return "A2";
  if (!second && third) return "A3";
  return "A4";
}

}  // namespace skewinfo

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "voi/core.hpp"

namespace voi {

/// A distribution on a smaller alphabet obtained by summing disjoint groups
/// of components of a larger one.
struct Aggregation {
  /// Target bin per source index.
  std::vector<std::size_t> partition;
  /// The aggregated distribution (bin j = sum of its group).
  Distribution psi_a;
  std::size_t source_n;
  std::size_t target_m;
};

/// An aggregation together with its entropy and its distance to the source,
/// d(phi, psi_a) = H(phi) - H(psi_a). The distance formula is exact for
/// aggregations: V(phi, psi_a) = 0, so no coupling solve is needed.
struct ReduceResult {
  Aggregation aggregation;
  double entropy;
  double distance;
};

/// Outcome of the greedy-aggregation deviation bound: the total variation
/// between the produced loads and the requested capacities, and the
/// worst-case guarantee 0.25 * m * max(phi).
struct DeviationCheck {
  double deviation;
  double bound;
  bool ok;
};

/// Sums phi over the given partition. The partition must assign every source
/// index a bin below m.
Aggregation aggregate(const Distribution& phi, const std::vector<std::size_t>& partition,
                      std::size_t m);

/// Searches for a partition witnessing that psi is an aggregation of phi,
/// with per-bin mismatch at most tol. Backtracking over bins in index order
/// with residual pruning; the first witness in lexicographic order is
/// returned, or nullopt. Worst case m^n, capped.
std::optional<std::vector<std::size_t>> is_aggregation(const Distribution& phi,
                                                       const Distribution& psi, double tol = 1e-9,
                                                       std::uint64_t size_cap = kDefaultSizeCap);

/// Best-fit aggregation of phi into m equal bins of size 1/m. Items are
/// processed in the given order, or sorted descending first when presort is
/// set (the two can differ materially).
ReduceResult greedy_reduce(const Distribution& phi, std::size_t m, bool presort = false,
                           LogBase base = LogBase::natural);

/// The maximum-entropy aggregation of phi into at most m bins, found by
/// enumerating set partitions (restricted growth strings, so bin-label
/// symmetry is never explored). Ties resolve to the lexicographically
/// smallest assignment vector.
ReduceResult exact_reduce(const Distribution& phi, std::size_t m,
                          std::uint64_t size_cap = kDefaultSizeCap,
                          LogBase base = LogBase::natural);

/// Runs best-fit overstuffing of phi into the given capacity vector and
/// checks the worst-case deviation guarantee
/// total_variation(loads, capacities) <= 0.25 * m * max(phi).
DeviationCheck best_fit_bound_check(const Distribution& phi, const Distribution& capacities);

/// b * H([lambda, 1-lambda]) - H([c1 + lambda*b, c2 + (1-lambda)*b]) for
/// c1, c2, b > 0 summing to one: the objective profile of shifting a split
/// row's mass between two bins. Its maximum sits at c1/(c1+c2) and it
/// decreases toward both endpoints, so interior splits always lose to one of
/// the endpoints.
double two_bin_split_profile(double c1, double c2, double b, double lambda,
                             LogBase base = LogBase::natural);

}  // namespace voi

#pragma once

#include <cstdint>
#include <vector>

#include "voi/core.hpp"

namespace voi {

/// Items to be packed into bins of given capacities. For metric and reduction
/// use both sides sum to one, but general positive instances are accepted.
struct PackingInstance {
  std::vector<double> items;
  std::vector<double> capacities;
};

/// Sentinel assignment value for an item that overflowed (overflow mode).
inline constexpr int kUnplaced = -1;

struct PackingResult {
  /// Bin index per item, kUnplaced if the item overflowed.
  std::vector<int> assignment;
  /// Total mass assigned per bin.
  std::vector<double> loads;
  /// (load - capacity)+ per bin.
  std::vector<double> excess;
  /// (capacity - load)+ per bin.
  std::vector<double> slack;
  /// Overstuff mode only: the residual capacity of each bin just before the
  /// item that first made it heavy; -1 for bins that never went heavy.
  std::vector<double> preplacement_residual;
  /// Overflow mode only: item indices that fit in no bin, ascending.
  std::vector<std::size_t> overflow_set;
  /// Overflow mode only: final unused capacity per bin (the alpha vector).
  std::vector<double> residual_capacities;
};

/// Aggregate mismatch statistics of a completed packing: total mismatch,
/// total unused capacity, total overstuffing. When items and capacities have
/// equal mass, mismatch = 2 * unused = 2 * overstuff.
struct MismatchStats {
  double mismatch;
  double unused_capacity;
  double overstuff;
};

/// Places each item, in the given order, into the bin with the largest
/// remaining capacity if it fits there (tolerance 1e-12); items fitting
/// nowhere land in the overflow set. Ties between equally-empty bins go to
/// the lowest bin index. No bin is ever loaded past its capacity.
PackingResult best_fit_overflow(const PackingInstance& instance);

/// Same placement rule, but every item is placed; bins may be loaded past
/// capacity (their residual goes negative, and they are never chosen again
/// while a nonnegative-residual bin exists).
PackingResult best_fit_overstuff(const PackingInstance& instance);

/// Mismatch statistics of a fully-placed packing. Throws if any item
/// overflowed.
MismatchStats mismatch(const PackingResult& result, const PackingInstance& instance);

/// Exhaustively minimizes unused capacity over all bin assignments
/// (m^n candidates, capped). Among minimizers returns the lexicographically
/// smallest assignment vector.
PackingResult exact_pack(const PackingInstance& instance,
                         std::uint64_t size_cap = kDefaultSizeCap);

/// The per-bin index sets I_j of a packing, each ascending.
std::vector<std::vector<std::size_t>> bin_index_sets(const PackingResult& result,
                                                     std::size_t bin_count);

}  // namespace voi

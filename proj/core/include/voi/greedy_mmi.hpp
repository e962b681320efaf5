#pragma once

#include <vector>

#include "voi/core.hpp"

namespace voi {

/// One round of the greedy bound: the (rescaled) round distributions, the
/// best-fit outcome, and the round's conditional matrices and values.
struct RoundRecord {
  std::size_t round;  // 1-based
  std::size_t n;
  std::size_t m;
  Distribution phi;
  Distribution psi;
  /// Items assigned to each bin (indices into this round's phi), ascending.
  std::vector<std::vector<std::size_t>> bin_items;
  /// Overflowed item indices, ascending.
  std::vector<std::size_t> overflow;
  /// Unused capacity per bin after the round.
  std::vector<double> residual_capacities;
  /// Total unused capacity c_s (equals the overflowed mass).
  double residual_total;
  double v_value;
  double u_value;
  Matrix conditional;          // P_s, n x m
  Matrix reverse_conditional;  // Q_s, m x n
};

struct GreedyOptions {
  /// When the recursion bottoms out on a two-bin round with at most this
  /// many items, the round is solved exactly (the closed-form machinery is
  /// exponential in the item count, so this stays small; inner rounds have
  /// at most m items anyway).
  std::size_t exact_base_max_items = 20;
  LogBase base = LogBase::natural;
};

/// Output of the greedy bound: a feasible conditional matrix P with
/// phi P = psi, the bound d(phi, psi) <= v_bound + u_bound, and the full
/// per-round trace.
struct GreedyMmiTrace {
  std::vector<RoundRecord> rounds;
  double v_bound;  // J_phi(P), an upper bound on V(phi, psi)
  double u_bound;  // J_psi(Q) = v_bound + H(phi) - H(psi)
  double d_bound;  // v_bound + u_bound >= d(phi, psi)
  /// The constructed n x m conditional matrix, rows/columns in the caller's
  /// original order (zero-mass rows get a unit row on bin 0; zero-capacity
  /// columns are all zero).
  ConditionalMatrix conditional;
  /// True when phi had fewer components than psi: the bound is computed on
  /// the swapped pair (the trace records that run) and converted back.
  bool arguments_swapped;
};

/// Multi-round best-fit upper bound on the variation-of-information
/// distance.
///
/// Each forward round packs the current items into the current bins with
/// best fit; overflowed items and leftover capacities, rescaled by the
/// unused capacity c_s, form the next (strictly smaller) round. The backward
/// pass embeds each round's reverse conditional into its parent and corrects
/// the costs, yielding a feasible P for the original pair.
GreedyMmiTrace greedy_metric_bound(const Distribution& phi, const Distribution& psi,
                                   const GreedyOptions& options = {});

}  // namespace voi

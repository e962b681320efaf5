#pragma once

#include <cstdint>
#include <vector>

#include "voi/core.hpp"

namespace voi {

/// Exact minimum-entropy-coupling quantities between two distributions.
struct MetricResult {
  /// W: minimum joint entropy over all couplings of (phi, psi).
  double min_joint_entropy;
  /// V(phi, psi) = W - H(phi): minimum conditional entropy H(Y|X).
  double v_phi_psi;
  /// V(psi, phi) = W - H(psi).
  double v_psi_phi;
  /// d = 2W - H(phi) - H(psi) = V(phi,psi) + V(psi,phi): the variation of
  /// information distance.
  double distance;
  /// A minimizing coupling (deterministic choice among ties).
  JointDistribution argmin_joint;
  /// Its forward conditional matrix.
  ConditionalMatrix argmin_conditional;
};

/// All vertices of the transportation polytope
/// { theta >= 0 : row sums = phi, column sums = psi }, deduplicated.
///
/// Enumerates every spanning tree of the complete bipartite graph on the two
/// alphabets (there are n^(m-1) * m^(n-1); the cap guards this count), solves
/// the marginal equations on the tree edges by leaf elimination, and keeps
/// the nonnegative basic solutions. Every vertex has at most n+m-1 positive
/// entries.
std::vector<JointDistribution> vertex_joints(const Distribution& phi, const Distribution& psi,
                                             std::uint64_t size_cap = kDefaultSizeCap);

/// Exact W, V, d by vertex enumeration: joint entropy is concave, so its
/// minimum over the polytope is attained at a vertex. The reported argmin is
/// the first optimum in canonical tree-enumeration order (edge lists in
/// lexicographic order).
MetricResult exact_metric(const Distribution& phi, const Distribution& psi,
                          std::uint64_t size_cap = kDefaultSizeCap,
                          LogBase base = LogBase::natural);

/// x * H([u/x, 1-u/x]) = h(u) + h(x-u) - h(x): the entropy cost of splitting
/// an item of mass x into parts u and x-u. Strictly increasing in x for fixed
/// u. Requires 0 < u < x.
double split_entropy_cost(double u, double x, LogBase base = LogBase::natural);

/// Value and minimizing conditional matrix of an n x 2 (or 2 x 2) problem.
struct Nx2Result {
  double value;
  ConditionalMatrix conditional;
};

/// Closed-form minimum conditional entropy for 2 x 2 problems. Both
/// candidate extreme points of the feasible set are evaluated and the
/// cheaper one returned, which also covers boundary ties.
Nx2Result closed_form_2x2(const Distribution& phi, const Distribution& psi,
                          LogBase base = LogBase::natural);

/// Exact minimum conditional entropy for an n x 2 problem.
///
/// If psi is an aggregation of phi the value is zero with a 0/1 matrix.
/// Otherwise the optimal packing of phi into the two bins is solved
/// exhaustively; when the smallest item sits in the overstuffed bin the
/// optimal matrix routes that item's slack to the underfilled bin and costs
/// split_entropy_cost(c, smallest). When it does not, no closed form is
/// available and the minimum is taken over all single-split-row candidates
/// (one positive row, the rest unit rows), which by the restriction
/// principle contains an optimum.
Nx2Result exact_nx2(const Distribution& phi, const Distribution& psi,
                    std::uint64_t size_cap = kDefaultSizeCap, LogBase base = LogBase::natural);

}  // namespace voi

#include "voi/greedy_mmi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "voi/binpack.hpp"
#include "voi/transport.hpp"

namespace voi {

namespace {

struct WorkRound {
  std::vector<double> phi;
  std::vector<double> psi;
  std::vector<std::vector<std::size_t>> bin_items;
  std::vector<std::size_t> overflow;
  std::vector<double> alpha;
  double c = 0.0;
  double v = 0.0;  // nats
  double u = 0.0;  // nats
  Matrix p;
  Matrix q;
};

std::vector<double> rescaled_unit(std::vector<double> v) {
  double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& x : v) x /= s;
  return v;
}

Matrix reverse_conditional_of(const std::vector<double>& phi, const Matrix& p,
                              const std::vector<double>& psi) {
  Matrix q(p.cols, p.rows);
  for (std::size_t j = 0; j < p.cols; ++j)
    for (std::size_t i = 0; i < p.rows; ++i) q(j, i) = phi[i] * p(i, j) / psi[j];
  return q;
}

Matrix unit_row_matrix(const std::vector<std::vector<std::size_t>>& bin_items, std::size_t n,
                       std::size_t m) {
  Matrix p(n, m, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i : bin_items[j]) p(i, j) = 1.0;
  return p;
}

}  // namespace

GreedyMmiTrace greedy_metric_bound(const Distribution& phi, const Distribution& psi,
                                   const GreedyOptions& options) {
  const std::size_t n = phi.size();
  const std::size_t m = psi.size();

  if (n < m) {
    // Solve the transposed problem and convert P back through the joint.
    GreedyMmiTrace t = greedy_metric_bound(psi, phi, options);
    Matrix p(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        p(i, j) = phi[i] > 0.0 ? psi[j] * t.conditional(j, i) / phi[i] : psi[j];
      }
    }
    double v = t.u_bound;
    double u = t.v_bound;
    return GreedyMmiTrace{std::move(t.rounds), v, u, t.d_bound,
                          ConditionalMatrix(std::move(p), Orientation::forward), true};
  }

  // Working frame: zero-mass items and zero-capacity bins are set aside,
  // remaining bins sorted descending (stable, so ties keep original order).
  std::vector<std::size_t> work_rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (phi[i] > 0.0) work_rows.push_back(i);
  }
  std::vector<std::size_t> work_cols;
  for (std::size_t j = 0; j < m; ++j) {
    if (psi[j] > 0.0) work_cols.push_back(j);
  }
  std::stable_sort(work_cols.begin(), work_cols.end(),
                   [&](std::size_t a, std::size_t b) { return psi[a] > psi[b]; });

  std::vector<double> cur_phi(work_rows.size());
  for (std::size_t k = 0; k < work_rows.size(); ++k) cur_phi[k] = phi[work_rows[k]];
  std::vector<double> cur_psi(work_cols.size());
  for (std::size_t k = 0; k < work_cols.size(); ++k) cur_psi[k] = psi[work_cols[k]];
  cur_phi = rescaled_unit(std::move(cur_phi));
  cur_psi = rescaled_unit(std::move(cur_psi));

  std::vector<WorkRound> rounds;
  while (true) {
    WorkRound r;
    r.phi = cur_phi;
    r.psi = cur_psi;
    PackingResult packed = best_fit_overflow(PackingInstance{cur_phi, cur_psi});
    r.bin_items = bin_index_sets(packed, cur_psi.size());
    r.overflow = packed.overflow_set;
    r.alpha = packed.residual_capacities;
    r.c = std::accumulate(r.alpha.begin(), r.alpha.end(), 0.0);
    const std::size_t ns = r.phi.size();
    const std::size_t ms = r.psi.size();

    if (r.overflow.size() <= 1) {
      if (r.overflow.empty()) {
        r.v = 0.0;
        r.p = unit_row_matrix(r.bin_items, ns, ms);
      } else {
        const std::size_t k = r.overflow.front();
        if (std::abs(r.phi[k] - r.c) > 1e-9) {
          throw Error("greedy_metric_bound: leftover item does not match unused capacity");
        }
        if (ms == 2 && ns <= options.exact_base_max_items) {
          Nx2Result ex = exact_nx2(Distribution(r.phi), Distribution(r.psi));
          r.v = ex.value;
          r.p = ex.conditional.matrix();
        } else {
          r.p = unit_row_matrix(r.bin_items, ns, ms);
          double hv = 0.0;
          for (std::size_t j = 0; j < ms; ++j) {
            double share = r.alpha[j] / r.c;
            r.p(k, j) = share;
            hv += detail::h_nats(share);
          }
          r.v = r.c * hv;
        }
      }
      r.u = r.v + detail::entropy_nats(r.phi) - detail::entropy_nats(r.psi);
      r.q = reverse_conditional_of(r.phi, r.p, r.psi);
      rounds.push_back(std::move(r));
      break;
    }

    std::vector<double> next_psi(r.overflow.size());
    for (std::size_t t = 0; t < r.overflow.size(); ++t) {
      next_psi[t] = r.phi[r.overflow[t]] / r.c;
    }
    std::vector<double> next_phi(r.alpha.size());
    for (std::size_t j = 0; j < r.alpha.size(); ++j) next_phi[j] = r.alpha[j] / r.c;
    rounds.push_back(std::move(r));
    cur_phi = rescaled_unit(std::move(next_phi));
    cur_psi = rescaled_unit(std::move(next_psi));
  }

  // Backward pass: embed each deeper round's reverse conditional at the
  // overflow rows (t-th row of Q_{s+1} at the t-th smallest overflow index)
  // and correct the costs.
  for (std::size_t s = rounds.size() - 1; s-- > 0;) {
    WorkRound& r = rounds[s];
    const WorkRound& next = rounds[s + 1];
    r.v = r.c * next.u;
    r.u = r.v + detail::entropy_nats(r.phi) - detail::entropy_nats(r.psi);
    r.p = unit_row_matrix(r.bin_items, r.phi.size(), r.psi.size());
    for (std::size_t t = 0; t < r.overflow.size(); ++t) {
      for (std::size_t j = 0; j < r.psi.size(); ++j) {
        r.p(r.overflow[t], j) = next.q(t, j);
      }
    }
    r.q = reverse_conditional_of(r.phi, r.p, r.psi);
  }

  // Expand the first round's P back to the original frame.
  const WorkRound& first = rounds.front();
  Matrix p(n, m, 0.0);
  for (std::size_t wi = 0; wi < work_rows.size(); ++wi) {
    for (std::size_t wj = 0; wj < work_cols.size(); ++wj) {
      p(work_rows[wi], work_cols[wj]) = first.p(wi, wj);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (phi[i] <= 0.0) p(i, 0) = 1.0;
  }

  const double scale = log_scale(options.base);
  GreedyMmiTrace trace{std::vector<RoundRecord>{},
                       first.v * scale,
                       first.u * scale,
                       (first.v + first.u) * scale,
                       ConditionalMatrix(std::move(p), Orientation::forward),
                       false};
  trace.rounds.reserve(rounds.size());
  for (std::size_t s = 0; s < rounds.size(); ++s) {
    WorkRound& r = rounds[s];
    trace.rounds.push_back(RoundRecord{s + 1, r.phi.size(), r.psi.size(),
                                       Distribution(std::move(r.phi)),
                                       Distribution(std::move(r.psi)), std::move(r.bin_items),
                                       std::move(r.overflow), std::move(r.alpha), r.c,
                                       r.v * scale, r.u * scale, std::move(r.p), std::move(r.q)});
  }
  return trace;
}

}  // namespace voi

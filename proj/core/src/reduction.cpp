#include "voi/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "voi/binpack.hpp"

namespace voi {

Aggregation aggregate(const Distribution& phi, const std::vector<std::size_t>& partition,
                      std::size_t m) {
  if (m == 0 || partition.size() != phi.size()) {
    throw InvalidInput(errc::invalid_partition,
                       "aggregate: partition must assign every source index");
  }
  std::vector<double> sums(m, 0.0);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] >= m) {
      throw InvalidInput(errc::invalid_partition,
                         "aggregate: bin " + std::to_string(partition[i]) + " out of range");
    }
    sums[partition[i]] += phi[i];
  }
  return Aggregation{partition, Distribution(std::move(sums)), phi.size(), m};
}

std::optional<std::vector<std::size_t>> is_aggregation(const Distribution& phi,
                                                       const Distribution& psi, double tol,
                                                       std::uint64_t size_cap) {
  const std::size_t n = phi.size();
  const std::size_t m = psi.size();
  double log_count = static_cast<double>(n) * std::log(static_cast<double>(m));
  if (m > 1 && log_count > std::log(static_cast<double>(size_cap)) + 1e-9) {
    throw SizeCapExceeded("is_aggregation: " + std::to_string(m) + "^" + std::to_string(n) +
                          " assignments exceed the size cap");
  }

  std::vector<std::size_t> assign(n, 0);
  std::vector<double> residual = psi.probs();
  // Lexicographic DFS over bins; a bin driven below -tol can never recover.
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      for (double r : residual) {
        if (std::abs(r) > tol) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (residual[j] + tol < phi[i]) continue;
      residual[j] -= phi[i];
      assign[i] = j;
      if (self(self, i + 1)) return true;
      residual[j] += phi[i];
    }
    return false;
  };
  if (rec(rec, 0)) return assign;
  return std::nullopt;
}

namespace {

ReduceResult finish_reduce(const Distribution& phi, Aggregation agg, LogBase base) {
  double h_a = detail::entropy_nats(agg.psi_a.probs());
  double h_phi = detail::entropy_nats(phi.probs());
  double scale = log_scale(base);
  return ReduceResult{std::move(agg), h_a * scale, (h_phi - h_a) * scale};
}

}  // namespace

ReduceResult greedy_reduce(const Distribution& phi, std::size_t m, bool presort, LogBase base) {
  const std::size_t n = phi.size();
  if (m == 0 || m > n) {
    throw InvalidInput(errc::dimension_mismatch,
                       "greedy_reduce: need 1 <= m <= n, got m = " + std::to_string(m));
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (phi[i] > 0.0) order.push_back(i);
  }
  if (presort) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return phi[a] > phi[b]; });
  }

  std::vector<double> items(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) items[k] = phi[order[k]];

  std::vector<std::size_t> partition(n, 0);  // zero-mass items land in bin 0
  std::vector<double> sums(m, 0.0);
  if (!items.empty()) {
    PackingInstance inst{std::move(items), uniform(m).probs()};
    PackingResult packed = best_fit_overstuff(inst);
    for (std::size_t k = 0; k < order.size(); ++k) {
      partition[order[k]] = static_cast<std::size_t>(packed.assignment[k]);
    }
    sums = packed.loads;
  }
  Aggregation agg{std::move(partition), Distribution(std::move(sums)), n, m};
  return finish_reduce(phi, std::move(agg), base);
}

ReduceResult exact_reduce(const Distribution& phi, std::size_t m, std::uint64_t size_cap,
                          LogBase base) {
  const std::size_t n = phi.size();
  if (m == 0 || m > n) {
    throw InvalidInput(errc::dimension_mismatch,
                       "exact_reduce: need 1 <= m <= n, got m = " + std::to_string(m));
  }
  double log_count = static_cast<double>(n) * std::log(static_cast<double>(m));
  if (m > 1 && log_count > std::log(static_cast<double>(size_cap)) + 1e-9) {
    throw SizeCapExceeded("exact_reduce: " + std::to_string(m) + "^" + std::to_string(n) +
                          " assignments exceed the size cap");
  }

  std::vector<std::size_t> assign(n, 0);
  std::vector<std::size_t> best_assign;
  std::vector<double> loads(m, 0.0);
  double best_h = -1.0;

  // Restricted growth strings: block labels appear in first-use order, so
  // each set partition into <= m blocks is visited exactly once, in
  // lexicographic assignment order. Strict improvement keeps the first (and
  // therefore lexicographically smallest) maximizer.
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      double h = 0.0;
      for (std::size_t j = 0; j < used; ++j) h += detail::h_nats(loads[j]);
      if (h > best_h + 1e-15) {
        best_h = h;
        best_assign = assign;
      }
      return;
    }
    std::size_t limit = std::min(used + 1, m);
    for (std::size_t j = 0; j < limit; ++j) {
      assign[i] = j;
      loads[j] += phi[i];
      self(self, i + 1, std::max(used, j + 1));
      loads[j] -= phi[i];
    }
  };
  rec(rec, 0, 0);

  return finish_reduce(phi, aggregate(phi, best_assign, m), base);
}

DeviationCheck best_fit_bound_check(const Distribution& phi, const Distribution& capacities) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] > 0.0) order.push_back(i);
  }
  std::vector<double> items(order.size());
  double phi_max = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    items[k] = phi[order[k]];
    phi_max = std::max(phi_max, items[k]);
  }
  PackingInstance inst{std::move(items), capacities.probs()};
  PackingResult packed = best_fit_overstuff(inst);
  double rho = total_variation(Distribution(packed.loads), capacities);
  double bound = 0.25 * static_cast<double>(capacities.size()) * phi_max;
  return DeviationCheck{rho, bound, rho <= bound + 1e-12};
}

double two_bin_split_profile(double c1, double c2, double b, double lambda, LogBase base) {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(b > 0.0) || std::abs(c1 + c2 + b - 1.0) > 1e-9 ||
      lambda < -1e-12 || lambda > 1.0 + 1e-12) {
    throw InvalidInput(errc::domain_error,
                       "two_bin_split_profile: need c1, c2, b > 0 summing to 1 and lambda in "
                       "[0, 1]");
  }
  lambda = std::clamp(lambda, 0.0, 1.0);
  double split = b * (detail::h_nats(lambda) + detail::h_nats(1.0 - lambda));
  double merged = detail::h_nats(c1 + lambda * b) + detail::h_nats(c2 + (1.0 - lambda) * b);
  return (split - merged) * log_scale(base);
}

}  // namespace voi

#include "voi/transport.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "voi/binpack.hpp"
#include "voi/reduction.hpp"

namespace voi {

namespace {

constexpr double kFeasTol = 1e-12;

// Union-find with rollback (union by size, no path compression).
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    trail_.push_back(b);
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t b = trail_.back();
      trail_.pop_back();
      size_[find_root_of_merged(b)] -= size_[b];
      parent_[b] = b;
    }
  }

  std::size_t mark() const { return trail_.size(); }

 private:
  std::size_t find_root_of_merged(std::size_t b) const { return find(parent_[b]); }

  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> trail_;
};

// Enumerates spanning trees of K_{n,m} in lexicographic edge-list order
// (edges indexed row-major: edge k joins row k/m with column k%m) and solves
// each tree's marginal equations by leaf elimination. Feasible basic
// solutions are reported through the callback along with their entropy.
class VertexEnumerator {
 public:
  VertexEnumerator(const std::vector<double>& phi, const std::vector<double>& psi)
      : n_(phi.size()),
        m_(psi.size()),
        verts_(n_ + m_),
        edges_(n_ * m_),
        phi_(phi),
        psi_(psi),
        dsu_(verts_),
        tree_(),
        theta_(edges_, 0.0),
        adj_(verts_),
        deg_(verts_, 0),
        req_(verts_, 0.0) {
    tree_.reserve(verts_ - 1);
  }

  // callback(theta_flat, entropy_nats) for each feasible vertex candidate.
  void run(const std::function<void(const std::vector<double>&, double)>& callback) {
    callback_ = &callback;
    descend(0, 0);
  }

  static double tree_count(std::size_t n, std::size_t m) {
    return std::pow(static_cast<double>(n), static_cast<double>(m - 1)) *
           std::pow(static_cast<double>(m), static_cast<double>(n - 1));
  }

 private:
  void descend(std::size_t k, std::size_t chosen) {
    if (chosen == verts_ - 1) {
      solve_tree();
      return;
    }
    if (k == edges_) return;
    if (chosen + (edges_ - k) < verts_ - 1) return;

    const std::size_t u = k / m_;
    const std::size_t v = n_ + (k % m_);
    std::size_t mark = dsu_.mark();
    if (dsu_.unite(u, v)) {
      tree_.push_back(k);
      descend(k + 1, chosen + 1);
      tree_.pop_back();
      dsu_.rollback(mark);
    }
    if (connectable_without(k)) descend(k + 1, chosen);
  }

  // Can the remaining edges (k+1 onward) still connect the current components?
  bool connectable_without(std::size_t k) const {
    Dsu probe = dsu_;  // already holds the chosen tree edges
    std::size_t components = verts_ - tree_.size();
    for (std::size_t e = k + 1; e < edges_ && components > 1; ++e) {
      if (probe.unite(e / m_, n_ + (e % m_))) --components;
    }
    return components == 1;
  }

  void solve_tree() {
    for (std::size_t v = 0; v < verts_; ++v) {
      adj_[v].clear();
      deg_[v] = 0;
    }
    for (std::size_t e : tree_) {
      std::size_t u = e / m_;
      std::size_t v = n_ + (e % m_);
      adj_[u].push_back(e);
      adj_[v].push_back(e);
      ++deg_[u];
      ++deg_[v];
    }
    for (std::size_t i = 0; i < n_; ++i) req_[i] = phi_[i];
    for (std::size_t j = 0; j < m_; ++j) req_[n_ + j] = psi_[j];

    leaves_.clear();
    for (std::size_t v = 0; v < verts_; ++v) {
      if (deg_[v] == 1) leaves_.push_back(v);
    }

    double entropy = 0.0;
    bool feasible = true;
    std::size_t processed = 0;
    while (!leaves_.empty() && processed < verts_ - 1) {
      std::size_t leaf = leaves_.back();
      leaves_.pop_back();
      if (deg_[leaf] != 1) continue;
      std::size_t e = edges_;
      for (std::size_t cand : adj_[leaf]) {
        std::size_t a = cand / m_;
        std::size_t b = n_ + (cand % m_);
        if (deg_[a] > 0 && deg_[b] > 0) {
          e = cand;
          break;
        }
      }
      if (e == edges_) continue;  // stale leaf entry
      std::size_t a = e / m_;
      std::size_t b = n_ + (e % m_);
      std::size_t other = (a == leaf) ? b : a;
      double mass = req_[leaf];
      if (mass < -kFeasTol) {
        feasible = false;
        break;
      }
      if (mass < 0.0) mass = 0.0;
      theta_[e] = mass;
      entropy += detail::h_nats(mass);
      req_[other] -= req_[leaf];
      req_[leaf] = 0.0;
      --deg_[leaf];
      --deg_[other];
      ++processed;
      if (deg_[other] == 1) leaves_.push_back(other);
    }
    if (feasible && processed == verts_ - 1) (*callback_)(theta_, entropy);
    for (std::size_t e : tree_) theta_[e] = 0.0;
  }

  std::size_t n_, m_, verts_, edges_;
  const std::vector<double>& phi_;
  const std::vector<double>& psi_;
  Dsu dsu_;
  std::vector<std::size_t> tree_;
  std::vector<double> theta_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> deg_;
  std::vector<double> req_;
  std::vector<std::size_t> leaves_;
  const std::function<void(const std::vector<double>&, double)>* callback_ = nullptr;
};

void check_tree_cap(std::size_t n, std::size_t m, std::uint64_t size_cap, const char* who) {
  double count = VertexEnumerator::tree_count(n, m);
  if (!(count <= static_cast<double>(size_cap))) {
    throw SizeCapExceeded(std::string(who) + ": " + std::to_string(n) + "^" +
                          std::to_string(m - 1) + " * " + std::to_string(m) + "^" +
                          std::to_string(n - 1) + " spanning trees exceed the size cap");
  }
}

std::string support_key(const std::vector<double>& theta, double tol) {
  std::string key(theta.size(), '0');
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] > tol) key[i] = '1';
  }
  return key;
}

}  // namespace

std::vector<JointDistribution> vertex_joints(const Distribution& phi, const Distribution& psi,
                                             std::uint64_t size_cap) {
  const std::size_t n = phi.size();
  const std::size_t m = psi.size();
  check_tree_cap(n, m, size_cap, "vertex_joints");

  std::vector<std::vector<double>> kept;
  std::unordered_map<std::string, std::vector<std::size_t>> by_support;

  VertexEnumerator enumerator(phi.probs(), psi.probs());
  enumerator.run([&](const std::vector<double>& theta, double) {
    std::string key = support_key(theta, 1e-9);
    auto& bucket = by_support[key];
    for (std::size_t idx : bucket) {
      const std::vector<double>& other = kept[idx];
      bool same = true;
      for (std::size_t e = 0; e < theta.size(); ++e) {
        if (std::abs(theta[e] - other[e]) > 1e-10) {
          same = false;
          break;
        }
      }
      if (same) return;
    }
    bucket.push_back(kept.size());
    kept.push_back(theta);
  });

  std::vector<JointDistribution> out;
  out.reserve(kept.size());
  for (auto& flat : kept) {
    Matrix t(n, m);
    t.data = std::move(flat);
    out.emplace_back(std::move(t));
  }
  return out;
}

MetricResult exact_metric(const Distribution& phi, const Distribution& psi,
                          std::uint64_t size_cap, LogBase base) {
  const std::size_t n = phi.size();
  const std::size_t m = psi.size();
  check_tree_cap(n, m, size_cap, "exact_metric");

  double best_entropy = 0.0;
  std::vector<double> best_theta;

  VertexEnumerator enumerator(phi.probs(), psi.probs());
  enumerator.run([&](const std::vector<double>& theta, double h) {
    if (best_theta.empty() || h < best_entropy) {
      best_entropy = h;
      best_theta = theta;
    }
  });
  if (best_theta.empty()) {
    throw Error("exact_metric: no feasible vertex found");  // cannot happen
  }

  const double h_phi = detail::entropy_nats(phi.probs());
  const double h_psi = detail::entropy_nats(psi.probs());
  const double scale = log_scale(base);

  double v_fwd = best_entropy - h_phi;
  double v_rev = best_entropy - h_psi;
  double d = 2.0 * best_entropy - h_phi - h_psi;
  // W >= max(H(phi), H(psi)) holds exactly; only float noise can dip below.
  if (v_fwd < 0.0 && v_fwd > -kFeasTol) v_fwd = 0.0;
  if (v_rev < 0.0 && v_rev > -kFeasTol) v_rev = 0.0;
  if (d < 0.0 && d > -kFeasTol) d = 0.0;

  Matrix t(n, m);
  t.data = std::move(best_theta);
  JointDistribution argmin(std::move(t));
  ConditionalMatrix argmin_p = conditional_from_joint(argmin, Orientation::forward);
  return MetricResult{best_entropy * scale, v_fwd * scale, v_rev * scale,
                      d * scale,            std::move(argmin), std::move(argmin_p)};
}

double split_entropy_cost(double u, double x, LogBase base) {
  if (!(u > 0.0) || !(x > u)) {
    throw InvalidInput(errc::domain_error, "split_entropy_cost: requires 0 < u < x");
  }
  return (detail::h_nats(u) + detail::h_nats(x - u) - detail::h_nats(x)) * log_scale(base);
}

namespace {

double row_cost_nats(double weight, double a, double b) {
  return weight * (detail::h_nats(a) + detail::h_nats(b));
}

}  // namespace

Nx2Result closed_form_2x2(const Distribution& phi, const Distribution& psi, LogBase base) {
  if (phi.size() != 2 || psi.size() != 2) {
    throw InvalidInput(errc::dimension_mismatch, "closed_form_2x2: both sides must have size 2");
  }
  // Work on ascending-sorted copies; un-permute the winner at the end.
  const std::size_t pr = phi[0] <= phi[1] ? 0 : 1;  // original index of the smaller phi
  const std::size_t pc = psi[0] <= psi[1] ? 0 : 1;
  const double a0 = phi[pr], a1 = phi[1 - pr];
  const double b0 = psi[pc], b1 = psi[1 - pc];

  Matrix best(2, 2);
  double best_cost = 0.0;
  bool have = false;
  auto consider = [&](const Matrix& cand) {
    double cost = row_cost_nats(a0, cand(0, 0), cand(0, 1)) +
                  row_cost_nats(a1, cand(1, 0), cand(1, 1));
    if (!have || cost < best_cost) {
      best = cand;
      best_cost = cost;
      have = true;
    }
  };

  if (b0 <= a0) {
    // psi_1 <= phi_1 <= phi_2 <= psi_2: route b0 out of one of the two rows.
    Matrix p21(2, 2);
    p21(0, 0) = b0 / a0;
    p21(0, 1) = 1.0 - b0 / a0;
    p21(1, 0) = 0.0;
    p21(1, 1) = 1.0;
    consider(p21);
    Matrix p11(2, 2);
    p11(0, 0) = 0.0;
    p11(0, 1) = 1.0;
    p11(1, 0) = b0 / a1;
    p11(1, 1) = 1.0 - b0 / a1;
    consider(p11);
  } else {
    // phi_1 < psi_1 <= psi_2 < phi_2: the mirrored pair.
    Matrix p12(2, 2);
    p12(0, 0) = 1.0;
    p12(0, 1) = 0.0;
    p12(1, 0) = 1.0 - b1 / a1;
    p12(1, 1) = b1 / a1;
    consider(p12);
    if (b1 <= a0) {
      Matrix p22(2, 2);
      p22(0, 0) = 1.0 - b1 / a0;
      p22(0, 1) = b1 / a0;
      p22(1, 0) = 1.0;
      p22(1, 1) = 0.0;
      consider(p22);
    }
  }

  Matrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      // Row i of the sorted frame is original row (i == 0 ? pr : 1-pr), etc.
      std::size_t oi = (i == 0) ? pr : 1 - pr;
      std::size_t oj = (j == 0) ? pc : 1 - pc;
      out(oi, oj) = best(i, j);
    }
  }
  return Nx2Result{best_cost * log_scale(base),
                   ConditionalMatrix(std::move(out), Orientation::forward)};
}

Nx2Result exact_nx2(const Distribution& phi, const Distribution& psi, std::uint64_t size_cap,
                    LogBase base) {
  if (psi.size() != 2) {
    throw InvalidInput(errc::dimension_mismatch, "exact_nx2: psi must have size 2");
  }
  const std::size_t n = phi.size();
  if (n >= 63 || (1ull << n) > size_cap) {
    throw SizeCapExceeded("exact_nx2: 2^" + std::to_string(n) + " subsets exceed the size cap");
  }
  const double scale = log_scale(base);

  if (auto partition = is_aggregation(phi, psi, 1e-9, size_cap)) {
    Matrix p(n, 2, 0.0);
    for (std::size_t i = 0; i < n; ++i) p(i, (*partition)[i]) = 1.0;
    return Nx2Result{0.0, ConditionalMatrix(std::move(p), Orientation::forward)};
  }

  // Sorted-descending frame; order[k] is the original index at sorted slot k.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return phi[a] > phi[b]; });
  std::vector<double> items(n);
  for (std::size_t k = 0; k < n; ++k) items[k] = phi[order[k]];

  PackingInstance inst{items, psi.probs()};
  PackingResult packed = exact_pack(inst, size_cap);
  MismatchStats stats = mismatch(packed, inst);
  const double c = stats.unused_capacity;

  Matrix p(n, 2, 0.0);
  double value = 0.0;
  if (c <= kFeasTol) {
    // The exact packer found an aggregation the tolerance search missed.
    for (std::size_t k = 0; k < n; ++k) {
      p(order[k], static_cast<std::size_t>(packed.assignment[k])) = 1.0;
    }
    return Nx2Result{0.0, ConditionalMatrix(std::move(p), Orientation::forward)};
  }

  const std::size_t over = packed.excess[0] > 0.0 ? 0 : 1;
  const std::size_t under = 1 - over;
  const std::size_t smallest = n - 1;

  if (static_cast<std::size_t>(packed.assignment[smallest]) == over) {
    // The smallest item absorbs the whole mismatch: route c of it to the
    // underfilled bin.
    for (std::size_t k = 0; k + 1 < n; ++k) {
      p(order[k], static_cast<std::size_t>(packed.assignment[k])) = 1.0;
    }
    const double x = items[smallest];
    p(order[smallest], under) = c / x;
    p(order[smallest], over) = (x - c) / x;
    value = split_entropy_cost(c, x);
  } else {
    // No closed form; search every single-split-row candidate. The split row
    // k gets [u1/x, u2/x] with u1 the slack bin-0 leaves for it. Subset sums
    // come from two half-tables so the scan stays O(n 2^n).
    const std::size_t low_bits = n / 2;
    std::vector<double> low_sum(1ull << low_bits, 0.0);
    std::vector<double> high_sum(1ull << (n - low_bits), 0.0);
    for (std::uint64_t mask = 1; mask < low_sum.size(); ++mask) {
      std::uint64_t low_bit = mask & (~mask + 1);
      low_sum[mask] = low_sum[mask ^ low_bit] + items[std::countr_zero(low_bit)];
    }
    for (std::uint64_t mask = 1; mask < high_sum.size(); ++mask) {
      std::uint64_t low_bit = mask & (~mask + 1);
      high_sum[mask] = high_sum[mask ^ low_bit] + items[low_bits + std::countr_zero(low_bit)];
    }

    double best_cost = -1.0;
    std::size_t best_k = 0;
    std::uint64_t best_mask = 0;
    double best_u1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double x = items[k];
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (mask & (1ull << k)) continue;
        double load0 =
            low_sum[mask & ((1ull << low_bits) - 1)] + high_sum[mask >> low_bits];
        double u1 = psi[0] - load0;
        double u2 = x - u1;
        if (u1 < -kFeasTol || u2 < -kFeasTol) continue;
        u1 = std::max(u1, 0.0);
        u2 = std::max(u2, 0.0);
        double cost = row_cost_nats(x, u1 / x, u2 / x);
        if (best_cost < 0.0 || cost < best_cost - 1e-15) {
          best_cost = cost;
          best_k = k;
          best_mask = mask;
          best_u1 = u1;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == best_k) {
        p(order[k], 0) = best_u1 / items[k];
        p(order[k], 1) = 1.0 - best_u1 / items[k];
      } else {
        p(order[k], (best_mask >> k) & 1 ? 0 : 1) = 1.0;
      }
    }
    value = best_cost;
  }
  return Nx2Result{value * scale, ConditionalMatrix(std::move(p), Orientation::forward)};
}

}  // namespace voi

#include "voi/binpack.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace voi {

namespace {

constexpr double kFitTol = 1e-12;

void validate(const PackingInstance& inst) {
  if (inst.items.empty() || inst.capacities.empty()) {
    throw InvalidInput(errc::empty_instance, "packing: need at least one item and one bin");
  }
  for (double x : inst.items) {
    if (!(x > 0.0)) {
      throw InvalidInput(errc::domain_error, "packing: items must be strictly positive");
    }
  }
  for (double c : inst.capacities) {
    if (!(c > 0.0)) {
      throw InvalidInput(errc::domain_error, "packing: capacities must be strictly positive");
    }
  }
}

struct BinState {
  double residual;
  std::size_t original;
};

// Largest residual first; equal residuals resolve to the lowest original bin.
struct ByResidual {
  bool operator()(const BinState& a, const BinState& b) const {
    if (a.residual != b.residual) return a.residual > b.residual;
    return a.original < b.original;
  }
};

PackingResult finish(const PackingInstance& inst, PackingResult r) {
  const std::size_t m = inst.capacities.size();
  r.excess.assign(m, 0.0);
  r.slack.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double d = r.loads[j] - inst.capacities[j];
    if (d > 0.0) {
      r.excess[j] = d;
    } else {
      r.slack[j] = -d;
    }
  }
  return r;
}

PackingResult best_fit(const PackingInstance& inst, bool allow_overstuff) {
  validate(inst);
  const std::size_t n = inst.items.size();
  const std::size_t m = inst.capacities.size();

  std::set<BinState, ByResidual> bins;
  for (std::size_t j = 0; j < m; ++j) bins.insert({inst.capacities[j], j});

  PackingResult r;
  r.assignment.assign(n, kUnplaced);
  r.loads.assign(m, 0.0);
  if (allow_overstuff) r.preplacement_residual.assign(m, -1.0);

  for (std::size_t i = 0; i < n; ++i) {
    const double item = inst.items[i];
    auto top = bins.begin();
    if (!allow_overstuff && item > top->residual + kFitTol) {
      r.overflow_set.push_back(i);
      continue;
    }
    BinState chosen = *top;
    bins.erase(top);
    if (allow_overstuff && chosen.residual >= 0.0 && chosen.residual - item < 0.0) {
      r.preplacement_residual[chosen.original] = chosen.residual;
    }
    chosen.residual -= item;
    r.loads[chosen.original] += item;
    r.assignment[i] = static_cast<int>(chosen.original);
    bins.insert(chosen);
  }

  if (!allow_overstuff) {
    r.residual_capacities.assign(m, 0.0);
    for (const BinState& b : bins) r.residual_capacities[b.original] = b.residual;
  }
  return finish(inst, std::move(r));
}

}  // namespace

PackingResult best_fit_overflow(const PackingInstance& instance) {
  return best_fit(instance, false);
}

PackingResult best_fit_overstuff(const PackingInstance& instance) {
  return best_fit(instance, true);
}

MismatchStats mismatch(const PackingResult& result, const PackingInstance& instance) {
  if (!result.overflow_set.empty()) {
    throw InvalidInput(errc::overflow_present,
                       "mismatch: packing left " + std::to_string(result.overflow_set.size()) +
                           " item(s) unplaced");
  }
  MismatchStats s{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < instance.capacities.size(); ++j) {
    double d = instance.capacities[j] - result.loads[j];
    s.mismatch += std::abs(d);
    if (d > 0.0) {
      s.unused_capacity += d;
    } else {
      s.overstuff += -d;
    }
  }
  return s;
}

PackingResult exact_pack(const PackingInstance& instance, std::uint64_t size_cap) {
  validate(instance);
  const std::size_t n = instance.items.size();
  const std::size_t m = instance.capacities.size();

  double log_count = static_cast<double>(n) * std::log(static_cast<double>(m));
  if (m > 1 && log_count > std::log(static_cast<double>(size_cap)) + 1e-9) {
    throw SizeCapExceeded("exact_pack: " + std::to_string(m) + "^" + std::to_string(n) +
                          " assignments exceed the size cap");
  }

  std::vector<int> assign(n, 0);
  std::vector<double> loads(m, 0.0);
  std::vector<int> best_assign;
  double best_uc = -1.0;

  // Depth-first in assignment order, bin 0 first, so the first strict
  // minimizer found is the lexicographically smallest one.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      double uc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        double d = instance.capacities[j] - loads[j];
        if (d > 0.0) uc += d;
      }
      if (best_uc < 0.0 || uc < best_uc - 1e-15) {
        best_uc = uc;
        best_assign = assign;
      }
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      assign[i] = static_cast<int>(j);
      loads[j] += instance.items[i];
      self(self, i + 1);
      loads[j] -= instance.items[i];
    }
  };
  rec(rec, 0);

  PackingResult r;
  r.assignment = std::move(best_assign);
  r.loads.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    r.loads[static_cast<std::size_t>(r.assignment[i])] += instance.items[i];
  }
  return finish(instance, std::move(r));
}

std::vector<std::vector<std::size_t>> bin_index_sets(const PackingResult& result,
                                                     std::size_t bin_count) {
  std::vector<std::vector<std::size_t>> sets(bin_count);
  for (std::size_t i = 0; i < result.assignment.size(); ++i) {
    if (result.assignment[i] != kUnplaced) {
      sets[static_cast<std::size_t>(result.assignment[i])].push_back(i);
    }
  }
  return sets;
}

}  // namespace voi

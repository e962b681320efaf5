#include <cmath>
#include <numeric>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "test_util.hpp"
#include "voi/binpack.hpp"

using namespace voi;

namespace {

// Independent exhaustive checker for exact_pack: odometer over all m^n
// assignment vectors, no recursion, no shared code path.
double brute_min_unused(const PackingInstance& inst) {
  const std::size_t n = inst.items.size();
  const std::size_t m = inst.capacities.size();
  std::vector<std::size_t> a(n, 0);
  double best = -1.0;
  while (true) {
    std::vector<double> loads(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) loads[a[i]] += inst.items[i];
    double uc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (loads[j] < inst.capacities[j]) uc += inst.capacities[j] - loads[j];
    }
    if (best < 0.0 || uc < best) best = uc;
    std::size_t k = 0;
    while (k < n && ++a[k] == m) a[k++] = 0;
    if (k == n) break;
  }
  return best;
}

PackingInstance random_balanced(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<double> items = testutil::random_distribution(rng, n).probs();
  std::vector<double> caps = testutil::random_distribution(rng, m).probs();
  return {std::move(items), std::move(caps)};
}

}  // namespace

TEST_CASE("overflow packing on the 40x10 fixture") {
  auto phi = fixtures::phi40().probs();
  auto psi = fixtures::psi10().probs();
  PackingResult r = best_fit_overflow({phi, psi});

  CHECK(r.overflow_set == fixtures::kPublishedOverflow1);
  CHECK(bin_index_sets(r, 10) == fixtures::kComputedRound1Sets);

  double c1 = std::accumulate(r.residual_capacities.begin(), r.residual_capacities.end(), 0.0);
  CHECK(std::abs(c1 - 0.0924) < 2e-3);

  // no overstuffing, and mass accounting closes
  double placed = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    CHECK(r.loads[j] <= psi[j] + 1e-12);
    placed += r.loads[j];
  }
  CHECK(std::abs(placed + c1 - 1.0) < 1e-12);
}

TEST_CASE("overflow packing of the published 10x3 subproblem") {
  auto phi2 = fixtures::round2_phi().probs();
  auto psi2 = fixtures::round2_psi().probs();
  PackingResult r = best_fit_overflow({phi2, psi2});
  CHECK(r.overflow_set == fixtures::kPublishedOverflow2);
  CHECK(bin_index_sets(r, 3) == fixtures::kPublishedRound2Sets);
  double c2 = std::accumulate(r.residual_capacities.begin(), r.residual_capacities.end(), 0.0);
  CHECK(std::abs(c2 - 0.3146) < 2e-3);
}

TEST_CASE("overflow trivial and error cases") {
  PackingResult one = best_fit_overflow({{1.0}, {1.0}});
  CHECK(one.assignment[0] == 0);
  CHECK(one.overflow_set.empty());
  CHECK(one.residual_capacities[0] == doctest::Approx(0.0));

  CHECK_THROWS_AS(best_fit_overflow({{}, {1.0}}), InvalidInput);
  CHECK_THROWS_AS(best_fit_overflow({{0.5}, {}}), InvalidInput);
  CHECK_THROWS_AS(best_fit_overflow({{0.5, 0.0}, {1.0}}), InvalidInput);
}

TEST_CASE("overstuff packing reproduces the published aggregations") {
  auto phi = fixtures::phi40().probs();
  auto u10 = uniform(10).probs();

  PackingResult unsorted = best_fit_overstuff({phi, u10});
  CHECK(unsorted.overflow_set.empty());
  CHECK(bin_index_sets(unsorted, 10) == fixtures::kAggUnsortedSets);
  for (std::size_t j = 0; j < 10; ++j) {
    CHECK(std::abs(unsorted.loads[j] - fixtures::kAggUnsortedPsiA[j]) < 1e-3);
  }

  std::vector<double> sorted_phi = phi;
  std::stable_sort(sorted_phi.begin(), sorted_phi.end(), std::greater<>());
  PackingResult sorted = best_fit_overstuff({sorted_phi, u10});
  CHECK(bin_index_sets(sorted, 10) == fixtures::kAggSortedSetsComputed);
  for (std::size_t j = 0; j < 10; ++j) {
    CHECK(std::abs(sorted.loads[j] - fixtures::kAggSortedPsiA[j]) < 1e-3);
  }
}

TEST_CASE("overstuff single item and heavy-bin bookkeeping") {
  PackingResult r = best_fit_overstuff({{0.8}, {0.5, 0.5}});
  CHECK(r.assignment[0] == 0);
  CHECK(r.excess[0] == doctest::Approx(0.3));
  CHECK(r.preplacement_residual[0] == doctest::Approx(0.5));
  CHECK(r.preplacement_residual[1] == -1.0);
}

TEST_CASE("mismatch statistics") {
  PackingInstance perfect{{0.5, 0.3, 0.2}, {0.5, 0.5}};
  PackingResult pr;
  pr.assignment = {0, 1, 1};
  pr.loads = {0.5, 0.5};
  MismatchStats ps = mismatch(pr, perfect);
  CHECK(ps.mismatch == 0.0);
  CHECK(ps.unused_capacity == 0.0);
  CHECK(ps.overstuff == 0.0);

  // 5x2 fixture, published optimal split {2,4,5}|{1,3} (1-based)
  PackingInstance inst{fixtures::kPackPhi, fixtures::kPackPsi};
  PackingResult opt;
  opt.assignment = {1, 0, 1, 0, 0};
  opt.loads = {0.24 + 0.071 + 0.069, 0.50 + 0.12};
  MismatchStats s = mismatch(opt, inst);
  CHECK(s.unused_capacity == doctest::Approx(0.02).epsilon(1e-9));
  CHECK(s.mismatch == doctest::Approx(0.04).epsilon(1e-9));

  // alternative split {2,3}|{1,4,5}: overstuffed by 0.04
  PackingResult alt;
  alt.assignment = {1, 0, 0, 1, 1};
  alt.loads = {0.24 + 0.12, 0.50 + 0.071 + 0.069};
  MismatchStats a = mismatch(alt, inst);
  CHECK(a.overstuff == doctest::Approx(0.04).epsilon(1e-9));

  PackingResult with_overflow;
  with_overflow.assignment = {0, kUnplaced, 0, 0, 0};
  with_overflow.loads = {0.74, 0.0};
  with_overflow.overflow_set = {1};
  CHECK_THROWS_AS(mismatch(with_overflow, inst), InvalidInput);
}

TEST_CASE("exact packing") {
  PackingInstance inst{fixtures::kPackPhi, fixtures::kPackPsi};
  PackingResult r = exact_pack(inst);
  MismatchStats s = mismatch(r, inst);
  CHECK(s.unused_capacity == doctest::Approx(0.02).epsilon(1e-9));
  CHECK(bin_index_sets(r, 2)[0] == std::vector<std::size_t>{1, 3, 4});

  PackingResult even_split = exact_pack({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(mismatch(even_split, {{0.5, 0.5}, {0.5, 0.5}}).unused_capacity == 0.0);

  CHECK_THROWS_AS(exact_pack({{0.1, 0.2, 0.3, 0.4}, {0.5, 0.5}}, 8), SizeCapExceeded);
}

TEST_CASE("exact packing agrees with the brute-force oracle") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 10; ++it) {
    PackingInstance inst = random_balanced(rng, 8, 3);
    PackingResult r = exact_pack(inst);
    CHECK(mismatch(r, inst).unused_capacity ==
          doctest::Approx(brute_min_unused(inst)).epsilon(1e-12));
  }
}

TEST_CASE("overflow structural properties") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 3 + rng() % 20, m = 2 + rng() % 6;
    PackingInstance inst = random_balanced(rng, n, m);
    PackingResult r = best_fit_overflow(inst);

    for (std::size_t j = 0; j < m; ++j) CHECK(r.loads[j] <= inst.capacities[j] + 1e-12);

    // every overflowed item strictly exceeds every final residual
    for (std::size_t i : r.overflow_set) {
      for (double a : r.residual_capacities) CHECK(inst.items[i] > a);
    }
    CHECK(r.overflow_set.size() < m);

    // total residual equals the overflowed mass
    double alpha = std::accumulate(r.residual_capacities.begin(), r.residual_capacities.end(), 0.0);
    double spilled = 0.0;
    for (std::size_t i : r.overflow_set) spilled += inst.items[i];
    CHECK(std::abs(alpha - spilled) < 1e-12);
  }
}

TEST_CASE("overstuff deviation bound") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 500; ++it) {
    std::size_t n = 2 + rng() % 49, m = 1 + rng() % 10;
    PackingInstance inst = random_balanced(rng, n, m);
    PackingResult r = best_fit_overstuff(inst);
    double rho = 0.0;
    double phi_max = *std::max_element(inst.items.begin(), inst.items.end());
    for (std::size_t j = 0; j < m; ++j) rho += std::abs(r.loads[j] - inst.capacities[j]);
    rho *= 0.5;
    CHECK(rho <= 0.25 * static_cast<double>(m) * phi_max + 1e-12);
    CHECK(rho <= 0.5 * static_cast<double>(m) * phi_max + 1e-12);
  }
}

TEST_CASE("exact packing never loses to best fit") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 25; ++it) {
    std::size_t n = 3 + rng() % 6, m = 2 + rng() % 2;
    PackingInstance inst = random_balanced(rng, n, m);
    double exact_uc = mismatch(exact_pack(inst), inst).unused_capacity;
    double greedy_uc = mismatch(best_fit_overstuff(inst), inst).unused_capacity;
    CHECK(exact_uc <= greedy_uc + 1e-12);
  }
}

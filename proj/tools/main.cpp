#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "voi/binpack.hpp"
#include "voi/core.hpp"
#include "voi/greedy_mmi.hpp"
#include "voi/reduction.hpp"
#include "voi/transport.hpp"

namespace {

using voi::cli::Json;
using voi::cli::round12;

Json matrix_json(const voi::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(round12(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json index_sets_json(const std::vector<std::vector<std::size_t>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

Json greedy_trace_json(const voi::GreedyMmiTrace& trace) {
  Json rounds = Json::array();
  for (const voi::RoundRecord& r : trace.rounds) {
    Json jr;
    jr["s"] = r.round;
    jr["n"] = r.n;
    jr["m"] = r.m;
    jr["phi"] = round12(r.phi.probs());
    jr["psi"] = round12(r.psi.probs());
    jr["bin_items"] = index_sets_json(r.bin_items);
    jr["overflow"] = r.overflow;
    jr["alpha"] = round12(r.residual_capacities);
    jr["c"] = round12(r.residual_total);
    jr["V"] = round12(r.v_value);
    jr["U"] = round12(r.u_value);
    jr["P"] = matrix_json(r.conditional);
    jr["Q"] = matrix_json(r.reverse_conditional);
    rounds.push_back(std::move(jr));
  }
  Json out;
  out["arguments_swapped"] = trace.arguments_swapped;
  out["rounds"] = std::move(rounds);
  return out;
}

struct DistanceArgs {
  std::string method;
  std::string phi_path;
  std::string psi_path;
  std::string log_base = "e";
  std::uint64_t size_cap = voi::kDefaultSizeCap;
  bool trace = false;
};

int run_distance(const DistanceArgs& a) {
  voi::LogBase base = voi::cli::parse_log_base(a.log_base);
  voi::Distribution phi = voi::cli::load_distribution(a.phi_path).dist;
  voi::Distribution psi = voi::cli::load_distribution(a.psi_path).dist;

  Json out;
  out["method"] = a.method;
  out["n"] = phi.size();
  out["m"] = psi.size();
  out["log_base"] = a.log_base;

  const double h_phi = voi::entropy(phi, base);
  const double h_psi = voi::entropy(psi, base);

  if (a.method == "exact") {
    voi::MetricResult r = voi::exact_metric(phi, psi, a.size_cap, base);
    out["W"] = round12(r.min_joint_entropy);
    out["V_phi_psi"] = round12(r.v_phi_psi);
    out["V_psi_phi"] = round12(r.v_psi_phi);
    out["d"] = round12(r.distance);
    out["exact"] = true;
    if (a.trace) {
      Json t;
      t["argmin_joint"] = matrix_json(r.argmin_joint.theta());
      t["argmin_P"] = matrix_json(r.argmin_conditional.matrix());
      out["trace"] = std::move(t);
    }
  } else if (a.method == "greedy") {
    voi::GreedyOptions opts;
    opts.base = base;
    voi::GreedyMmiTrace t = voi::greedy_metric_bound(phi, psi, opts);
    out["V_phi_psi"] = round12(t.v_bound);
    out["V_psi_phi"] = round12(t.u_bound);
    out["d"] = round12(t.d_bound);
    out["exact"] = false;
    if (a.trace) out["trace"] = greedy_trace_json(t);
  } else if (a.method == "closed2x2" || a.method == "n_by_2") {
    voi::Nx2Result r = a.method == "closed2x2"
                           ? voi::closed_form_2x2(phi, psi, base)
                           : voi::exact_nx2(phi, psi, a.size_cap, base);
    double v_rev = r.value + h_phi - h_psi;
    out["W"] = round12(r.value + h_phi);
    out["V_phi_psi"] = round12(r.value);
    out["V_psi_phi"] = round12(v_rev);
    out["d"] = round12(r.value + v_rev);
    out["exact"] = true;
    if (a.trace) {
      Json t;
      t["argmin_P"] = matrix_json(r.conditional.matrix());
      out["trace"] = std::move(t);
    }
  } else {
    throw voi::InvalidInput(voi::errc::domain_error, "unknown method '" + a.method + "'");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct ReduceArgs {
  std::string method;
  std::string phi_path;
  std::size_t m = 0;
  bool presort = false;
  std::string log_base = "e";
  std::uint64_t size_cap = voi::kDefaultSizeCap;
};

int run_reduce(const ReduceArgs& a) {
  voi::LogBase base = voi::cli::parse_log_base(a.log_base);
  voi::Distribution phi = voi::cli::load_distribution(a.phi_path).dist;

  voi::ReduceResult r = a.method == "exact"
                            ? voi::exact_reduce(phi, a.m, a.size_cap, base)
                            : (a.method == "greedy"
                                   ? voi::greedy_reduce(phi, a.m, a.presort, base)
                                   : throw voi::InvalidInput(voi::errc::domain_error,
                                                             "unknown method '" + a.method + "'"));

  Json out;
  out["method"] = a.method;
  out["m"] = a.m;
  out["partition"] = r.aggregation.partition;
  out["psi_a"] = round12(r.aggregation.psi_a.probs());
  out["entropy"] = round12(r.entropy);
  out["distance"] = round12(r.distance);
  if (a.method == "greedy") {
    double phi_max = 0.0;
    for (double x : phi) phi_max = std::max(phi_max, x);
    out["bound_thm9"] = round12(0.25 * static_cast<double>(a.m) * phi_max);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_entropy(const std::string& phi_path, const std::string& log_base) {
  voi::LogBase base = voi::cli::parse_log_base(log_base);
  voi::Distribution phi = voi::cli::load_distribution(phi_path).dist;
  Json out;
  out["n"] = phi.size();
  out["log_base"] = log_base;
  out["entropy"] = round12(voi::entropy(phi, base));
  std::cout << out.dump() << "\n";
  return 0;
}

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string style = "exp_stretch";
  std::string out_path;
};

int run_gen(const GenArgs& a) {
  if (a.n == 0) {
    throw voi::InvalidInput(voi::errc::empty, "gen: n must be positive");
  }
  std::mt19937_64 eng(a.seed);
  auto next_uniform = [&eng]() {
    // 53-bit mantissa draw; bit-identical across platforms, unlike
    // std::uniform_real_distribution.
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  };

  std::vector<double> p(a.n);
  if (a.style == "exp_stretch") {
    for (double& x : p) x = std::exp(next_uniform());
  } else if (a.style == "uniform_simplex") {
    for (double& x : p) x = -std::log(1.0 - next_uniform());
  } else {
    throw voi::InvalidInput(voi::errc::domain_error, "unknown style '" + a.style + "'");
  }
  double sum = 0.0;
  for (double x : p) sum += x;
  for (double& x : p) x /= sum;

  voi::cli::write_distribution(a.out_path, p, a.style + "-n" + std::to_string(a.n) + "-seed" +
                                                   std::to_string(a.seed));
  Json out;
  out["n"] = a.n;
  out["seed"] = a.seed;
  out["style"] = a.style;
  out["out"] = a.out_path;
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variation-of-information metrics and order reduction for finite distributions"};
  app.require_subcommand(1);

  DistanceArgs da;
  CLI::App* dist = app.add_subcommand("distance", "distance between two distributions");
  dist->add_option("--method", da.method, "exact | greedy | closed2x2 | n_by_2")->required();
  dist->add_option("--phi", da.phi_path, "first distribution file")->required();
  dist->add_option("--psi", da.psi_path, "second distribution file")->required();
  dist->add_option("--log-base", da.log_base, "entropy unit: e, 2 or 10");
  dist->add_option("--size-cap", da.size_cap, "enumeration budget for exact methods");
  dist->add_flag("--trace", da.trace, "include the per-round trace / argmin coupling");

  ReduceArgs ra;
  CLI::App* red = app.add_subcommand("reduce", "aggregate a distribution onto fewer states");
  red->add_option("--method", ra.method, "exact | greedy")->required();
  red->add_option("--phi", ra.phi_path, "distribution file")->required();
  red->add_option("-m,--m", ra.m, "target number of states")->required();
  red->add_flag("--presort", ra.presort, "sort items descending before packing (greedy)");
  red->add_option("--log-base", ra.log_base, "entropy unit: e, 2 or 10");
  red->add_option("--size-cap", ra.size_cap, "enumeration budget for the exact method");

  std::string ent_phi, ent_base = "e";
  CLI::App* ent = app.add_subcommand("entropy", "entropy of a distribution");
  ent->add_option("--phi", ent_phi, "distribution file")->required();
  ent->add_option("--log-base", ent_base, "entropy unit: e, 2 or 10");

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "generate a random distribution file");
  gen->add_option("--n", ga.n, "number of components")->required();
  gen->add_option("--seed", ga.seed, "RNG seed (required for reproducibility)")->required();
  gen->add_option("--style", ga.style, "exp_stretch | uniform_simplex");
  gen->add_option("--out", ga.out_path, "output path")->required();

  try {
    app.parse(argc, argv);
    if (dist->parsed()) return run_distance(da);
    if (red->parsed()) return run_reduce(ra);
    if (ent->parsed()) return run_entropy(ent_phi, ent_base);
    if (gen->parsed()) return run_gen(ga);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const voi::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const voi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

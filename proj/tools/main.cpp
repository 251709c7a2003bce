// ruc - brickwork random unitary circuit statistics.
//
// Subcommands expose the exact purity oracle, the Monte Carlo qudit
// simulator, closed-form bound evaluators, random projector statistics, and
// the single-brick memory experiments. Every run is reproducible from
// (subcommand, config, seed): re-running with the same inputs produces a
// byte-identical output file. Wall-clock timing goes to stderr, never into
// the output.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruc/analytic_bounds.hpp"
#include "ruc/circuit.hpp"
#include "ruc/density.hpp"
#include "ruc/domain_wall.hpp"
#include "ruc/ensemble.hpp"
#include "ruc/exact.hpp"
#include "ruc/memory_probe.hpp"
#include "ruc/projector_stats.hpp"
#include "ruc/random_matrix.hpp"
#include "ruc/version.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitResource = 3;
constexpr int kExitAssertFailed = 4;

struct AssertFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(long v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

// Options shared by every subcommand.
struct CommonOpts {
  std::uint64_t seed = 0;
  bool seed_given = false;
  long trials = 0;
  std::string out;
  std::string format = "csv";
  std::size_t mem_cap = ruc::StateVector::kDefaultMemCap;
  int workers = 0;
  bool assert_mode = false;
  std::string log_base = "e";

  std::string seed_source = "default";

  void attach(CLI::App* cmd, bool with_trials = true) {
    cmd->add_option("--seed", seed, "master seed (env RUC_SEED if omitted)");
    if (with_trials) cmd->add_option("--trials", trials, "Monte Carlo trials");
    cmd->add_option("--out", out, "output path (default: stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--mem-cap", mem_cap, "statevector memory cap in bytes");
    cmd->add_option("--workers", workers, "worker threads (0 = auto)");
    cmd->add_flag("--assert", assert_mode,
                  "fail (exit 4) if the run's statistical checks do not pass");
    cmd->add_option("--log-base", log_base, "entropy/MI log base")
        ->check(CLI::IsMember({"e", "2", "q"}));
  }

  void resolve_seed(const CLI::App* cmd) {
    if (cmd->count("--seed") > 0) {
      seed_source = "flag";
      return;
    }
    if (const char* env = std::getenv("RUC_SEED")) {
      seed = std::strtoull(env, nullptr, 10);
      seed_source = "env";
      return;
    }
    seed_source = "default";
  }

  double log_factor(double q) const {
    if (log_base == "2") return 1.0 / std::log(2.0);
    if (log_base == "q") return 1.0 / std::log(q);
    return 1.0;
  }
};

struct OutputDoc {
  std::string command;
  json config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json summary;  // optional

  json header(const CommonOpts& c) const {
    json h;
    h["tool"] = "ruc";
    h["version"] = ruc::kVersion;
    h["command"] = command;
    h["config"] = config;
    h["seed_source"] = c.seed_source;
    return h;
  }

  void write(const CommonOpts& c) const {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!c.out.empty()) {
      f.open(c.out, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot open output file " + c.out);
      os = &f;
    }
    if (c.format == "json") {
      json doc = header(c);
      doc["columns"] = columns;
      doc["rows"] = rows;
      if (!summary.is_null()) doc["summary"] = summary;
      *os << doc.dump(2) << "\n";
      return;
    }
    *os << "# " << header(c).dump() << "\n";
    if (!columns.empty()) {
      for (size_t i = 0; i < columns.size(); ++i)
        *os << (i ? "," : "") << columns[i];
      *os << "\n";
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) *os << (i ? "," : "") << row[i];
        *os << "\n";
      }
    }
    if (!summary.is_null()) *os << "# summary " << summary.dump() << "\n";
  }
};

// ---------------------------------------------------------------- purity ---

struct PurityArgs {
  CommonOpts common;
  long q = 2;
  long ell = 4;
  long depth_min = 0;
  long depth_max = -1;
  int sites = 0;
  int interval_start = -1;  // -1 = align automatically per depth
  bool allow_wrap = false;
  std::string per_trial_out;
};

int run_purity(const PurityArgs& a) {
  OutputDoc doc;
  doc.command = "purity";
  doc.config = {{"q", a.q},
                {"interval_len", a.ell},
                {"depth_min", a.depth_min},
                {"depth_max", a.depth_max},
                {"sites", a.sites},
                {"interval_start", a.interval_start},
                {"allow_wrap", a.allow_wrap},
                {"trials", a.common.trials},
                {"seed", a.common.seed},
                {"mem_cap", a.common.mem_cap},
                {"format", a.common.format}};
  doc.columns = {"depth",    "exact",   "exact_rational", "lower",
                 "upper",    "mc_mean", "mc_stderr"};
  const long tmax = a.depth_max < 0 ? a.depth_min : a.depth_max;
  bool stat_ok = true;
  json oracle = json::array();
  std::ofstream per_trial_file;
  if (!a.per_trial_out.empty()) {
    per_trial_file.open(a.per_trial_out, std::ios::binary | std::ios::trunc);
    if (!per_trial_file)
      throw std::runtime_error("cannot open " + a.per_trial_out);
    per_trial_file << "depth,trial,purity\n";
  }
  for (long t = a.depth_min; t <= tmax; ++t) {
    const auto exact = ruc::purity_exact(a.q, a.ell, t);
    const auto [lo, hi] = ruc::purity_gap_bounds_exact(a.q, a.ell, t);
    std::vector<std::string> row{
        fmt(t),
        fmt(ruc::to_double(exact.exact)),
        exact.exact.str(),
        fmt(ruc::to_double(lo)),
        fmt(ruc::to_double(hi)),
        "",
        ""};
    if (a.common.trials > 0) {
      if (a.sites <= 0)
        throw std::invalid_argument("purity: --sites is required when trials > 0");
      if (!a.allow_wrap && a.sites < a.ell + 2 * t + 2)
        throw std::invalid_argument(
            "purity: ring too small for a lightcone-free run at depth " +
            std::to_string(t) + " (need sites >= interval + 2*depth + 2, or "
            "--allow-wrap to override)");
      const auto g = ruc::CircuitGeometry::uniform(static_cast<int>(a.q), a.sites);
      ruc::IntervalSpec interval;
      interval.start = a.interval_start >= 0 ? a.interval_start
                                             : static_cast<int>(t % 2);
      interval.length = static_cast<int>(a.ell);
      ruc::EnsembleOptions opt;
      opt.trials = a.common.trials;
      opt.seed = a.common.seed;
      opt.workers = a.common.workers;
      opt.mem_cap = a.common.mem_cap;
      std::vector<double> per_trial;
      if (per_trial_file.is_open()) opt.per_trial = &per_trial;
      const auto est = ruc::ensemble_average(ruc::Metric::purity, g, interval,
                                             static_cast<int>(t), opt);
      for (size_t i = 0; i < per_trial.size(); ++i)
        per_trial_file << t << "," << i << "," << fmt(per_trial[i]) << "\n";
      row[5] = fmt(est.mean);
      row[6] = fmt(est.stderr_of_mean);
      const double dev = std::abs(est.mean - ruc::to_double(exact.exact));
      if (est.stderr_of_mean > 0.0 && dev > 4.0 * est.stderr_of_mean)
        stat_ok = false;
    }
    oracle.push_back({{"depth", t}, {"exact", exact.exact.str()}});
    doc.rows.push_back(std::move(row));
  }
  doc.summary = {{"oracle", oracle}, {"stat_ok", stat_ok}};
  doc.write(a.common);
  if (a.common.assert_mode && !stat_ok)
    throw AssertFailure("purity: Monte Carlo mean deviates from the exact "
                        "value by more than 4 standard errors");
  return kExitOk;
}

// ------------------------------------------------------------ mi-profile ---

struct MiProfileArgs {
  CommonOpts common;
  int q = 6;
  int sites = 8;
  int ell = 4;
  int depth = 1;
  int interval_start = -1;
};

int run_mi_profile(const MiProfileArgs& a) {
  if (a.common.trials < 1)
    throw std::invalid_argument("mi-profile: --trials must be >= 1");
  const auto g = ruc::CircuitGeometry::uniform(a.q, a.sites);
  ruc::IntervalSpec interval;
  interval.start = a.interval_start >= 0 ? a.interval_start : a.depth % 2;
  interval.length = a.ell;
  ruc::EnsembleOptions opt;
  opt.trials = a.common.trials;
  opt.seed = a.common.seed;
  opt.workers = a.common.workers;
  opt.mem_cap = a.common.mem_cap;
  const auto rows = ruc::mi_profile_experiment(g, interval, a.depth, opt);

  const double factor = a.common.log_factor(a.q);
  OutputDoc doc;
  doc.command = "mi-profile";
  doc.config = {{"q", a.q},
                {"sites", a.sites},
                {"interval_len", a.ell},
                {"interval_start", interval.start},
                {"depth", a.depth},
                {"trials", a.common.trials},
                {"seed", a.common.seed},
                {"mem_cap", a.common.mem_cap},
                {"format", a.common.format},
                {"log_base", a.common.log_base}};
  doc.columns = {"x",         "mi_vn",   "mi_vn_stderr", "mi_s2",
                 "mi_s2_stderr", "trapezoid"};
  bool stat_ok = true;
  for (const auto& r : rows) {
    // the analytic profile is natively in log-q units
    const double trap = r.trapezoid * std::log(static_cast<double>(a.q)) * factor;
    doc.rows.push_back({fmt(r.x), fmt(r.vn.mean * factor),
                        fmt(r.vn.stderr_of_mean * factor),
                        fmt(r.renyi2.mean * factor),
                        fmt(r.renyi2.stderr_of_mean * factor),
                        fmt(trap)});
  }
  // Endpoint is exactly zero; interior is symmetric under x <-> ell - x.
  if (std::abs(rows.front().vn.mean) > 1e-9) stat_ok = false;
  for (size_t i = 0; i < rows.size(); ++i) {
    const size_t j = rows.size() - 1 - i;
    if (j <= i) break;
    const double dev = std::abs(rows[i].vn.mean - rows[j].vn.mean);
    const double joint = std::hypot(rows[i].vn.stderr_of_mean,
                                    rows[j].vn.stderr_of_mean);
    if (joint > 0.0 && dev > 4.0 * joint) stat_ok = false;
  }
  doc.summary = {{"stat_ok", stat_ok}};
  doc.write(a.common);
  if (a.common.assert_mode && !stat_ok)
    throw AssertFailure("mi-profile: endpoint or symmetry check failed");
  return kExitOk;
}

// ------------------------------------------------------- projector-stats ---

struct ProjectorArgs {
  CommonOpts common;
  int dim = 128;
  int rank = 8;
  long pairs = 500;
};

int run_projector_stats(const ProjectorArgs& a) {
  if (a.pairs < 2) throw std::invalid_argument("projector-stats: need pairs >= 2");
  const auto samples =
      ruc::fidelity_samples(a.dim, a.rank, a.pairs, a.common.seed, a.common.workers);
  const double w = static_cast<double>(a.rank) / a.dim;
  constexpr int kBuckets = 10;

  OutputDoc doc;
  doc.command = "projector-stats";
  doc.config = {{"dim", a.dim},
                {"rank", a.rank},
                {"pairs", a.pairs},
                {"seed", a.common.seed},
                {"format", a.common.format}};
  doc.columns = {"pair", "fidelity"};
  for (int b = 0; b < kBuckets; ++b)
    doc.columns.push_back("lam_bucket_" + std::to_string(b));

  std::vector<double> fvals;
  fvals.reserve(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    fvals.push_back(s.fidelity);
    std::vector<int> hist(kBuckets, 0);
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
      int b = static_cast<int>(s.eigenvalues(k) * kBuckets);
      b = std::clamp(b, 0, kBuckets - 1);
      ++hist[static_cast<size_t>(b)];
    }
    std::vector<std::string> row{fmt(static_cast<long>(i)), fmt(s.fidelity)};
    for (int c : hist) row.push_back(fmt(c));
    doc.rows.push_back(std::move(row));
  }
  const auto est = ruc::summarize(fvals, a.common.seed);
  double var = 0.0;
  for (double v : fvals) var += (v - est.mean) * (v - est.mean);
  var /= static_cast<double>(fvals.size() - 1);
  const double mean_pred = ruc::fidelity_mean_analytic(w);
  const double var_pred = ruc::fidelity_variance_analytic(w, a.rank);
  const bool mean_ok =
      std::abs(est.mean - mean_pred) <= 4.0 * est.stderr_of_mean;
  const bool var_ok = std::abs(var - var_pred) <= 0.3 * var_pred;
  doc.summary = {{"mean", est.mean},
                 {"stderr", est.stderr_of_mean},
                 {"analytic_mean", mean_pred},
                 {"sample_variance", var},
                 {"analytic_variance", var_pred},
                 {"mean_ok", mean_ok},
                 {"variance_ok", var_ok}};
  doc.write(a.common);
  if (a.common.assert_mode && !(mean_ok && var_ok))
    throw AssertFailure("projector-stats: sample moments off the closed forms");
  return kExitOk;
}

// ---------------------------------------------------------------- packing ---

struct PackingArgs {
  CommonOpts common;
  int dim = 32;
  int rank = 2;
  double eps = 0.5;
  long max_draws = 2000;
};

int run_packing(const PackingArgs& a) {
  const auto res =
      ruc::greedy_packing(a.dim, a.rank, a.eps, a.max_draws, a.common.seed);
  OutputDoc doc;
  doc.command = "packing";
  doc.config = {{"dim", a.dim},       {"rank", a.rank},
                {"eps", a.eps},       {"max_draws", a.max_draws},
                {"seed", a.common.seed}, {"format", a.common.format}};
  doc.columns = {"accepted", "draws", "verified", "max_pair_fidelity"};
  doc.rows.push_back({fmt(res.accepted), fmt(res.draws),
                      res.verified ? "1" : "0", fmt(res.max_pair_fidelity)});
  doc.summary = {{"accepted", res.accepted},
                 {"draws", res.draws},
                 {"verified", res.verified},
                 {"max_pair_fidelity", res.max_pair_fidelity}};
  doc.write(a.common);
  if (a.common.assert_mode && !res.verified)
    throw AssertFailure("packing: pairwise verification failed");
  return kExitOk;
}

// ----------------------------------------------------------------- memory ---

struct MemoryArgs {
  CommonOpts common;
  int q = 2;
  int big_q = 6;
  int sites = 8;
  int ell = 4;
  int depth = 1;
  int interval_start = -1;
  std::string placement = "inside";
  std::string v_kind = "clock";
  int layer = -1;
  int bond = -1;
};

int run_memory(const MemoryArgs& a) {
  const auto g = ruc::CircuitGeometry::alternating(a.q, a.big_q, a.sites);
  ruc::IntervalSpec interval;
  interval.start = a.interval_start >= 0 ? a.interval_start : a.depth % 2;
  interval.length = a.ell;
  interval.validate(g, a.depth);

  // Canonical final-layer bricks for each requested placement (the final
  // layer's bond parity matches the interval cuts by the straddling
  // condition); explicit --layer/--bond win when given.
  int layer = a.layer, bond = a.bond;
  if (layer < 0 || bond < 0) {
    layer = a.depth;
    const int L = g.sites();
    if (a.placement == "inside") {
      bond = (interval.start + 1) % L;
    } else if (a.placement == "adjacent") {
      bond = interval.left_cut_bond(g);
    } else {
      if (a.sites < a.ell + 3)
        throw std::invalid_argument(
            "memory: ring too small for a fully outside brick");
      bond = (interval.start + interval.length + 1) % L;
    }
  }
  const auto classified = ruc::classify_brick(g, interval, a.depth, layer, bond);

  ruc::Perturbation pert;
  pert.layer = layer;
  pert.bond = bond;
  const int gd = g.gate_dim(bond);
  pert.v = a.v_kind == "identity" ? ruc::MatrixXcd::Identity(gd, gd)
                                  : ruc::clock_unitary(gd);

  std::vector<double> per_trial;
  const auto est =
      ruc::memory_experiment(a.q, a.big_q, a.sites, interval, a.depth, pert,
                             a.common.trials, a.common.seed, a.common.workers,
                             &per_trial, a.common.mem_cap);
  const double boundary = ruc::phase_boundary(a.q, a.big_q, a.ell);
  const bool early = a.depth < boundary;

  OutputDoc doc;
  doc.command = "memory";
  doc.config = {{"q", a.q},
                {"bigQ", a.big_q},
                {"sites", a.sites},
                {"interval_len", a.ell},
                {"interval_start", interval.start},
                {"depth", a.depth},
                {"placement", a.placement},
                {"v_kind", a.v_kind},
                {"layer", layer},
                {"bond", bond},
                {"trials", a.common.trials},
                {"seed", a.common.seed},
                {"format", a.common.format}};
  doc.columns = {"trial", "fidelity", "phase", "placement"};
  for (size_t i = 0; i < per_trial.size(); ++i)
    doc.rows.push_back({fmt(static_cast<long>(i)), fmt(per_trial[i]),
                        early ? "early" : "late",
                        ruc::to_string(classified)});
  bool stat_ok = true;
  if (a.v_kind == "identity") {
    stat_ok = std::abs(est.mean - 1.0) <= 1e-9;
  } else if (classified == ruc::Placement::inside && early) {
    stat_ok = est.mean < 0.6;
  } else if (classified == ruc::Placement::outside && early) {
    stat_ok = est.mean > 0.9;
  }
  // Adjacent placements and the late phase are reported, not judged: the
  // late-phase mean approaches 1 only when the interval is well below half
  // the ring, and saturates below that on small rings.
  doc.summary = {{"mean", est.mean},
                 {"stderr", est.stderr_of_mean},
                 {"phase_boundary", boundary},
                 {"phase", early ? "early" : "late"},
                 {"classified_placement", ruc::to_string(classified)},
                 {"stat_ok", stat_ok}};
  doc.write(a.common);
  if (a.common.assert_mode && !stat_ok)
    throw AssertFailure("memory: fidelity outside the predicted regime");
  return kExitOk;
}

// -------------------------------------------------------------- thermalize ---

struct ThermalizeArgs {
  CommonOpts common;
  int q = 2;
  int sites = 10;
  int ell = 2;
  std::vector<int> depths = {1, 2, 4, 8, 12};
};

int run_thermalize(const ThermalizeArgs& a) {
  if (a.common.trials < 1)
    throw std::invalid_argument("thermalize: --trials must be >= 1");
  const auto g = ruc::CircuitGeometry::uniform(a.q, a.sites);
  OutputDoc doc;
  doc.command = "thermalize";
  doc.config = {{"q", a.q},
                {"sites", a.sites},
                {"interval_len", a.ell},
                {"depths", a.depths},
                {"trials", a.common.trials},
                {"seed", a.common.seed},
                {"mem_cap", a.common.mem_cap},
                {"format", a.common.format}};
  doc.columns = {"depth", "trace_distance_mean", "trace_distance_stderr",
                 "threshold_eps01"};
  std::vector<ruc::EnsembleEstimate> ests;
  for (int t : a.depths) {
    ruc::IntervalSpec interval;
    interval.start = t % 2;
    interval.length = a.ell;
    ruc::EnsembleOptions opt;
    opt.trials = a.common.trials;
    opt.seed = a.common.seed;
    opt.workers = a.common.workers;
    opt.mem_cap = a.common.mem_cap;
    const auto est = ruc::ensemble_average(
        ruc::Metric::trace_distance_to_maximally_mixed, g, interval, t, opt);
    ests.push_back(est);
    doc.rows.push_back({fmt(t), fmt(est.mean), fmt(est.stderr_of_mean),
                        fmt(ruc::thermalization_time(a.q, a.ell, 0.1))});
  }
  // The reported decay is the data; the loose analytic threshold is only a
  // reference column. Check monotone decrease within joint noise.
  bool stat_ok = true;
  for (size_t i = 1; i < ests.size(); ++i) {
    const double joint =
        std::hypot(ests[i - 1].stderr_of_mean, ests[i].stderr_of_mean);
    if (ests[i].mean > ests[i - 1].mean + 2.0 * joint) stat_ok = false;
  }
  doc.summary = {{"stat_ok", stat_ok}};
  doc.write(a.common);
  if (a.common.assert_mode && !stat_ok)
    throw AssertFailure("thermalize: trace distance not nonincreasing");
  return kExitOk;
}

// ----------------------------------------------------------------- warmup ---

struct WarmupArgs {
  CommonOpts common;
  int q = 2;
  int big_q = 16;
  std::string v_kind = "clock-on-big";
};

int run_warmup(const WarmupArgs& a) {
  const int dim = a.q * a.big_q;
  ruc::MatrixXcd v;
  if (a.v_kind == "identity") {
    v = ruc::MatrixXcd::Identity(dim, dim);
  } else if (a.v_kind == "clock-on-big") {
    v = ruc::MatrixXcd(dim, dim);
    v.setZero();
    const auto clk = ruc::clock_unitary(a.big_q);
    for (int i = 0; i < a.q; ++i)
      v.block(i * a.big_q, i * a.big_q, a.big_q, a.big_q) = clk;
  } else {  // haar
    ruc::RngStream vr(a.common.seed ^ 0x9e3779b97f4a7c15ull, 0);
    v = ruc::sample_haar_unitary(dim, vr);
  }
  const auto est = ruc::warmup_fidelity_mc(a.q, a.big_q, v, a.common.trials,
                                           a.common.seed, a.common.workers);
  const double pred = ruc::warmup_fidelity_prediction(a.q, a.big_q, v);
  OutputDoc doc;
  doc.command = "warmup";
  doc.config = {{"q", a.q},         {"bigQ", a.big_q},
                {"v_kind", a.v_kind}, {"trials", a.common.trials},
                {"format", a.common.format}};
  doc.columns = {"mc_mean", "mc_stderr", "prediction"};
  doc.rows.push_back({fmt(est.mean), fmt(est.stderr_of_mean), fmt(pred)});
  doc.summary = {{"mc_mean", est.mean},
                 {"mc_stderr", est.stderr_of_mean},
                 {"prediction", pred}};
  doc.write(a.common);
  return kExitOk;
}

// ----------------------------------------------------------------- bounds ---

struct BoundsArgs {
  CommonOpts common;
  std::string name;
  std::vector<std::string> params;
};

int run_bounds(const BoundsArgs& a) {
  std::map<std::string, double> p;
  for (const auto& kv : a.params) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos)
      throw std::invalid_argument("bounds: parameters take the form key=value");
    p[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
  }
  const auto need = [&](const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end())
      throw std::invalid_argument("bounds " + a.name + ": missing parameter " + key);
    return it->second;
  };

  ruc::BoundReport rep;
  rep.name = a.name;
  rep.inputs = p;
  std::string note;

  if (a.name == "mi-profile") {
    rep.value = ruc::mi_profile_limit(need("x"), need("T"), need("ell"));
    note = "units of log q";
  } else if (a.name == "trapezoid-area") {
    rep.value = ruc::trapezoid_area(need("T"), need("ell"));
  } else if (a.name == "complexity-lower") {
    rep.value = ruc::complexity_lower_bound(need("T"), need("ell"), need("eps"));
  } else if (a.name == "mi-gate") {
    rep.value = ruc::mi_gate_bound(need("m"), need("q"), need("eps"), need("ell"));
    rep.value *= a.common.log_factor(need("q"));
  } else if (a.name == "mi-continuity") {
    rep.value = ruc::mi_continuity(need("eps"), need("dmin"));
  } else if (a.name == "therm-time") {
    rep.value = ruc::thermalization_time(need("q"), need("ell"), need("eps"));
  } else if (a.name == "prob-overlap") {
    const auto b = ruc::prob_overlap_bound(
        static_cast<long>(need("k")), need("eps"), need("delta"),
        static_cast<long>(need("ell")), static_cast<long>(need("L")), need("q"));
    rep.value = b.log_value;
    rep.validity.emplace_back("ell > L/2 (meaningful regime)", b.meaningful_regime);
    note = "log scale";
  } else if (a.name == "holo-complexity") {
    const bool larger = p.count("large") && p["large"] != 0.0;
    const auto h = ruc::holographic_complexity(need("ell"), need("L"), need("T"),
                                               need("s"), need("beta"), larger);
    rep.value = h.value;
    rep.inputs["branch_before"] = h.before;
    rep.inputs["branch_after"] = h.after;
    if (h.at_transition) note = "at the transition; late-time branch returned";
  } else if (a.name == "holo-entropy") {
    const auto h = ruc::holographic_entropy(need("ell"), need("T"), need("s"));
    rep.value = h.value;
    rep.inputs["branch_before"] = h.before;
    rep.inputs["branch_after"] = h.after;
  } else if (a.name == "packing-design") {
    std::optional<double> d;
    if (p.count("d")) d = p["d"];
    rep = ruc::packing_design_bound(need("k"), need("alpha"), need("beta"),
                                    need("eps"), d);
    note = "log scale";
  } else if (a.name == "packing-full") {
    rep = ruc::packing_full_bound(need("d"), need("alpha"), need("beta"));
    note = "log scale";
  } else if (a.name == "packing-rank") {
    rep = ruc::packing_rank_bound(need("r"), need("d"), need("eps"));
    note = "log scale";
  } else if (a.name == "packing-fidelity") {
    rep = ruc::packing_fidelity_count(need("r"), need("d"), need("eps"));
    note = "log scale";
  } else if (a.name == "extremal-onetwo") {
    const auto e = ruc::norm_extremal_onetwo(static_cast<int>(need("r")),
                                             static_cast<int>(need("d")),
                                             need("eps"));
    rep.value = e.ratio;
    rep.inputs["closed_form"] = e.closed_form;
    rep.validity.emplace_back("nondegenerate", !e.degenerate);
  } else if (a.name == "extremal-fidelity") {
    const auto e = ruc::fidelity_extremal(static_cast<int>(need("d")), need("eps"));
    rep.value = e.ratio;
    rep.inputs["closed_form"] = e.closed_form;
  } else if (a.name == "tail") {
    rep.value = ruc::tail_bound(need("z"), static_cast<int>(need("p")),
                                static_cast<int>(need("q")));
  } else if (a.name == "chi2-moment") {
    const auto m = ruc::chi2_moment_exact(static_cast<long>(need("m")),
                                          static_cast<long>(need("k")));
    rep.value = ruc::to_double(m);
    note = m.str();
  } else if (a.name == "fidelity-mean") {
    rep.value = ruc::fidelity_mean_analytic(need("w"));
  } else if (a.name == "fidelity-variance") {
    rep.value = ruc::fidelity_variance_analytic(need("w"),
                                                static_cast<long>(need("r")));
  } else if (a.name == "eigen-moment") {
    rep.value = ruc::eigen_density_moment(need("w"), need("n"));
  } else if (a.name == "log-prob-fidelity") {
    rep.value = ruc::log_prob_fidelity(need("F"), need("w"),
                                       static_cast<long>(need("r")));
    note = "quadratic order only";
  } else if (a.name == "phase-boundary") {
    rep.value = ruc::phase_boundary(need("q"), need("Q"), need("ell"));
  } else if (a.name == "gate-count-rate") {
    // T / L^c with the polynomial exponent supplied explicitly; there is no
    // default for c.
    const double c = need("polyexp");
    rep.value = need("T") / std::pow(need("L"), c);
  } else {
    throw std::invalid_argument("bounds: unknown evaluator '" + a.name + "'");
  }

  json validity = json::array();
  for (const auto& [cond, ok] : rep.validity)
    validity.push_back({{"condition", cond}, {"ok", ok}});
  OutputDoc doc;
  doc.command = "bounds";
  doc.config = {{"name", a.name}, {"params", rep.inputs}, {"format", a.common.format},
                {"log_base", a.common.log_base}};
  doc.summary = {{"name", rep.name},
                 {"value", rep.value},
                 {"valid", rep.valid()},
                 {"validity", validity}};
  if (!note.empty()) doc.summary["note"] = note;
  doc.columns = {"name", "value", "valid"};
  doc.rows.push_back({rep.name, fmt(rep.value), rep.valid() ? "1" : "0"});
  doc.write(a.common);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickwork random unitary circuit statistics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file; flags override");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config,
               "print the effective configuration and exit");

  PurityArgs purity;
  auto* cmd_purity = app.add_subcommand(
      "purity", "exact interval purity vs Monte Carlo, with two-sided bounds");
  purity.common.attach(cmd_purity);
  cmd_purity->add_option("--q", purity.q, "local dimension")->check(CLI::PositiveNumber);
  cmd_purity->add_option("--interval-len", purity.ell, "interval length (even)");
  cmd_purity->add_option("--depth-min", purity.depth_min, "first depth");
  cmd_purity->add_option("--depth-max", purity.depth_max, "last depth (default: depth-min)");
  cmd_purity->add_option("--depth", purity.depth_min, "single depth (alias)");
  cmd_purity->add_option("--sites", purity.sites, "ring size for Monte Carlo");
  cmd_purity->add_option("--interval-start", purity.interval_start,
                         "interval start (default: aligned per depth)");
  cmd_purity->add_flag("--allow-wrap", purity.allow_wrap,
                       "permit rings whose lightcone wraps");
  cmd_purity->add_option("--per-trial-out", purity.per_trial_out,
                         "stream (depth, trial, purity) rows to this CSV");

  MiProfileArgs mi;
  auto* cmd_mi = app.add_subcommand("mi-profile",
                                    "simulated mutual information across every "
                                    "even cut of an interval");
  mi.common.attach(cmd_mi);
  mi.common.log_base = "q";
  cmd_mi->add_option("--q", mi.q, "local dimension");
  cmd_mi->add_option("--sites", mi.sites, "ring size");
  cmd_mi->add_option("--interval-len", mi.ell, "interval length (even)");
  cmd_mi->add_option("--depth", mi.depth, "circuit depth");
  cmd_mi->add_option("--interval-start", mi.interval_start, "interval start");

  ProjectorArgs proj;
  auto* cmd_proj = app.add_subcommand(
      "projector-stats", "fidelity statistics of random rank-r states");
  proj.common.attach(cmd_proj, false);
  cmd_proj->add_option("--dim", proj.dim, "Hilbert space dimension");
  cmd_proj->add_option("--rank", proj.rank, "projector rank");
  cmd_proj->add_option("--pairs", proj.pairs, "number of independent pairs");

  PackingArgs pack;
  auto* cmd_pack = app.add_subcommand(
      "packing", "greedy packing of pairwise nearly orthogonal states");
  pack.common.attach(cmd_pack, false);
  cmd_pack->add_option("--dim", pack.dim, "Hilbert space dimension");
  cmd_pack->add_option("--rank", pack.rank, "state rank");
  cmd_pack->add_option("--eps", pack.eps, "pairwise fidelity tolerance");
  cmd_pack->add_option("--max-draws", pack.max_draws, "candidate draws");

  MemoryArgs mem;
  auto* cmd_mem = app.add_subcommand(
      "memory", "single-brick perturbation fidelity on the alternating ring");
  mem.common.attach(cmd_mem);
  cmd_mem->add_option("--q", mem.q, "even-site dimension");
  cmd_mem->add_option("--bigQ", mem.big_q, "odd-site dimension");
  cmd_mem->add_option("--sites", mem.sites, "ring size");
  cmd_mem->add_option("--interval-len", mem.ell, "interval length (even)");
  cmd_mem->add_option("--depth", mem.depth, "circuit depth");
  cmd_mem->add_option("--interval-start", mem.interval_start, "interval start");
  cmd_mem->add_option("--placement", mem.placement, "perturbed brick placement")
      ->check(CLI::IsMember({"inside", "outside", "adjacent"}));
  cmd_mem->add_option("--v-kind", mem.v_kind, "perturbation unitary")
      ->check(CLI::IsMember({"clock", "identity"}));
  cmd_mem->add_option("--layer", mem.layer, "explicit brick layer (1-based)");
  cmd_mem->add_option("--bond", mem.bond, "explicit brick bond");

  ThermalizeArgs therm;
  auto* cmd_therm = app.add_subcommand(
      "thermalize", "trace distance to the maximally mixed state vs depth");
  therm.common.attach(cmd_therm);
  cmd_therm->add_option("--q", therm.q, "local dimension");
  cmd_therm->add_option("--sites", therm.sites, "ring size");
  cmd_therm->add_option("--interval-len", therm.ell, "interval length (even)");
  cmd_therm->add_option("--depths", therm.depths, "depths to sample");

  WarmupArgs warm;
  auto* cmd_warm = app.add_subcommand(
      "warmup", "bipartite memory warmup: Haar state vs V-shifted state");
  warm.common.attach(cmd_warm);
  cmd_warm->add_option("--q", warm.q, "traced-out factor dimension");
  cmd_warm->add_option("--bigQ", warm.big_q, "kept factor dimension");
  cmd_warm->add_option("--v-kind", warm.v_kind, "perturbation unitary")
      ->check(CLI::IsMember({"clock-on-big", "identity", "haar"}));

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound evaluators");
  bounds.common.attach(cmd_bounds, false);
  cmd_bounds->add_option("name", bounds.name, "evaluator name")->required();
  cmd_bounds->add_option("--p", bounds.params, "parameter key=value (repeatable)");
  bounds.common.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  if (dump_config) {
    std::cout << app.config_to_str(true, false);
    return kExitOk;
  }

  // Wall time goes to stderr only; output files must be byte-stable across
  // identical (subcommand, config, seed) runs.
  const auto started = std::chrono::steady_clock::now();
  const auto report_time = [&] {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::fprintf(stderr, "wall_time_s=%.3f\n", secs);
  };

  try {
    int rc = kExitOk;
    if (cmd_purity->parsed()) {
      purity.common.resolve_seed(cmd_purity);
      rc = run_purity(purity);
    } else if (cmd_mi->parsed()) {
      mi.common.resolve_seed(cmd_mi);
      rc = run_mi_profile(mi);
    } else if (cmd_proj->parsed()) {
      proj.common.resolve_seed(cmd_proj);
      rc = run_projector_stats(proj);
    } else if (cmd_pack->parsed()) {
      pack.common.resolve_seed(cmd_pack);
      rc = run_packing(pack);
    } else if (cmd_mem->parsed()) {
      mem.common.resolve_seed(cmd_mem);
      rc = run_memory(mem);
    } else if (cmd_therm->parsed()) {
      therm.common.resolve_seed(cmd_therm);
      rc = run_thermalize(therm);
    } else if (cmd_warm->parsed()) {
      warm.common.resolve_seed(cmd_warm);
      rc = run_warmup(warm);
    } else if (cmd_bounds->parsed()) {
      bounds.common.resolve_seed(cmd_bounds);
      rc = run_bounds(bounds);
    }
    report_time();
    return rc;
  } catch (const AssertFailure& e) {
    std::cerr << "assert: " << e.what() << "\n";
    return kExitAssertFailed;
  } catch (const ruc::ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

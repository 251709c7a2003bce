#include "ruc/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "ruc/analytic_bounds.hpp"

namespace ruc {

namespace {

double evaluate_metric(Metric metric, const StateVector& psi,
                       const IntervalSpec& interval, int cut_x) {
  const auto sites = interval.sites(psi.geometry());
  switch (metric) {
    case Metric::purity:
      return subsystem_purity(psi, sites);
    case Metric::renyi2:
      return -std::log(subsystem_purity(psi, sites));
    case Metric::von_neumann:
      return subsystem_von_neumann(psi, sites);
    case Metric::trace_distance_to_maximally_mixed: {
      // Needs the full spectrum including exact zeros when the interval is
      // the larger side of the cut.
      std::size_t da = 1;
      for (int s : sites)
        da *= static_cast<std::size_t>(
            psi.geometry().site_dims[static_cast<size_t>(s)]);
      VectorXd lam = subsystem_spectrum(psi, sites);
      double td = 0.0;
      const double mm = 1.0 / static_cast<double>(da);
      for (Eigen::Index i = 0; i < lam.size(); ++i)
        td += std::abs(lam(i) - mm);
      td += mm * static_cast<double>(da - static_cast<std::size_t>(lam.size()));
      return 0.5 * td;
    }
    case Metric::mi_at_cut: {
      if (cut_x < 0 || cut_x > interval.length || cut_x % 2 != 0)
        throw std::invalid_argument("mi_at_cut: cut must be even and inside the interval");
      const std::vector<int> a(sites.begin(), sites.begin() + cut_x);
      const std::vector<int> b(sites.begin() + cut_x, sites.end());
      return mutual_information(psi, a, b);
    }
  }
  throw std::logic_error("unknown metric");
}

}  // namespace

EnsembleEstimate ensemble_average(Metric metric, const CircuitGeometry& g,
                                  const IntervalSpec& interval, int depth,
                                  const EnsembleOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("ensemble_average: trials must be >= 1");
  if (depth < 0) throw std::invalid_argument("ensemble_average: depth must be >= 0");
  interval.validate(g, depth);
  // Fail on the memory cap before spawning workers.
  check_state_fits(g, opt.mem_cap);

  std::vector<double> values(static_cast<size_t>(opt.trials));
  parallel_for(opt.trials, opt.workers, [&](long i) {
    RngStream rng(opt.seed, static_cast<std::uint64_t>(i));
    const StateVector psi = run_brickwork(g, depth, rng, opt.mem_cap);
    values[static_cast<size_t>(i)] =
        evaluate_metric(metric, psi, interval, opt.cut_x);
  });
  if (opt.per_trial) *opt.per_trial = values;
  return summarize(values, opt.seed);
}

std::vector<MiProfileRow> mi_profile_experiment(const CircuitGeometry& g,
                                                const IntervalSpec& interval,
                                                int depth,
                                                const EnsembleOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("mi_profile: trials must be >= 1");
  interval.validate(g, depth);
  check_state_fits(g, opt.mem_cap);

  const int ell = interval.length;
  const int ncuts = ell / 2 + 1;
  std::vector<std::vector<double>> vn(static_cast<size_t>(ncuts)),
      r2(static_cast<size_t>(ncuts));
  for (auto& v : vn) v.resize(static_cast<size_t>(opt.trials));
  for (auto& v : r2) v.resize(static_cast<size_t>(opt.trials));

  parallel_for(opt.trials, opt.workers, [&](long i) {
    RngStream rng(opt.seed, static_cast<std::uint64_t>(i));
    const StateVector psi = run_brickwork(g, depth, rng, opt.mem_cap);
    const auto sites = interval.sites(g);
    const double s_ab_vn = subsystem_von_neumann(psi, sites);
    const double s_ab_r2 = -std::log(subsystem_purity(psi, sites));
    for (int c = 0; c < ncuts; ++c) {
      const int x = 2 * c;
      if (x == 0 || x == ell) {
        vn[static_cast<size_t>(c)][static_cast<size_t>(i)] = 0.0;
        r2[static_cast<size_t>(c)][static_cast<size_t>(i)] = 0.0;
        continue;
      }
      const std::vector<int> a(sites.begin(), sites.begin() + x);
      const std::vector<int> b(sites.begin() + x, sites.end());
      const double s_a_vn = subsystem_von_neumann(psi, a);
      const double s_b_vn = subsystem_von_neumann(psi, b);
      vn[static_cast<size_t>(c)][static_cast<size_t>(i)] =
          s_a_vn + s_b_vn - s_ab_vn;
      const double s_a_r2 = -std::log(subsystem_purity(psi, a));
      const double s_b_r2 = -std::log(subsystem_purity(psi, b));
      r2[static_cast<size_t>(c)][static_cast<size_t>(i)] =
          s_a_r2 + s_b_r2 - s_ab_r2;
    }
  });

  std::vector<MiProfileRow> rows(static_cast<size_t>(ncuts));
  for (int c = 0; c < ncuts; ++c) {
    auto& row = rows[static_cast<size_t>(c)];
    row.x = 2 * c;
    row.vn = summarize(vn[static_cast<size_t>(c)], opt.seed);
    row.renyi2 = summarize(r2[static_cast<size_t>(c)], opt.seed);
    row.trapezoid = mi_profile_limit(row.x, depth, ell);
  }
  return rows;
}

}  // namespace ruc

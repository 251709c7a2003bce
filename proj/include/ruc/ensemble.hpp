#pragma once

#include <cstdint>
#include <vector>

#include "ruc/circuit.hpp"
#include "ruc/density.hpp"
#include "ruc/estimate.hpp"

namespace ruc {

enum class Metric {
  purity,
  renyi2,
  von_neumann,
  trace_distance_to_maximally_mixed,
  mi_at_cut,
};

struct EnsembleOptions {
  long trials = 0;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  int cut_x = 0;    // for Metric::mi_at_cut: even split position in the interval
  std::size_t mem_cap = StateVector::kDefaultMemCap;
  std::vector<double>* per_trial = nullptr;  // optional sink, indexed by trial
};

// Mean metric over independent circuit realizations. Trial i uses
// RngStream(seed, i), so the estimate does not depend on worker scheduling.
EnsembleEstimate ensemble_average(Metric metric, const CircuitGeometry& g,
                                  const IntervalSpec& interval, int depth,
                                  const EnsembleOptions& opt);

struct MiProfileRow {
  int x = 0;
  EnsembleEstimate vn;        // von Neumann MI, natural log
  EnsembleEstimate renyi2;    // S2-based MI, natural log
  double trapezoid = 0.0;     // analytic limit in units of log q
};

// Simulated mutual-information profile across every even cut of the
// interval. All cuts share each trial's realization.
std::vector<MiProfileRow> mi_profile_experiment(const CircuitGeometry& g,
                                                const IntervalSpec& interval,
                                                int depth,
                                                const EnsembleOptions& opt);

}  // namespace ruc

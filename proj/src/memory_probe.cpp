#include "ruc/memory_probe.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ruc/ensemble.hpp"
#include "ruc/random_matrix.hpp"

namespace ruc {

std::string to_string(Placement p) {
  switch (p) {
    case Placement::inside: return "inside";
    case Placement::outside: return "outside";
    case Placement::adjacent: return "adjacent";
  }
  return "?";
}

Placement classify_brick(const CircuitGeometry& g, const IntervalSpec& interval,
                         int depth, int layer, int bond) {
  if (layer < 1 || layer > depth)
    throw std::invalid_argument("classify_brick: layer must be in [1, depth]");
  const int L = g.sites();
  const int shrink = depth - layer;
  const int len = interval.length - 2 * shrink;
  const auto inside_shrunk = [&](int site) {
    if (len <= 0) return false;
    const int rel = ((site - (interval.start + shrink)) % L + L) % L;
    return rel < len;
  };
  const auto [a, b] = g.bond_sites(bond);
  const int count = (inside_shrunk(a) ? 1 : 0) + (inside_shrunk(b) ? 1 : 0);
  if (count == 2) return Placement::inside;
  if (count == 1) return Placement::adjacent;
  return Placement::outside;
}

MatrixXcd clock_unitary(int dim) {
  if (dim < 1) throw std::invalid_argument("clock_unitary: dim must be >= 1");
  MatrixXcd v = MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k)
    v(k, k) = std::polar(1.0, 2.0 * M_PI * k / dim);
  return v;
}

namespace {

// Reduced state on the Q factor of a vector in C^q (x) C^Q (index iq*Q + iQ).
MatrixXcd trace_out_small(const Eigen::VectorXcd& psi, int q, int big_q) {
  Eigen::Map<const MatrixXcd> m(psi.data(), big_q, q);
  return m * m.adjoint();
}

}  // namespace

double warmup_fidelity_prediction(int q, int big_q, const MatrixXcd& v) {
  const int dim = q * big_q;
  if (v.rows() != dim || v.cols() != dim)
    throw std::invalid_argument("warmup prediction: V must act on q*Q");
  MatrixXcd w = MatrixXcd::Zero(q, q);  // tr_Q(V)
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      for (int m = 0; m < big_q; ++m) w(i, j) += v(i * big_q + m, j * big_q + m);
  return singular_values(w).sum() / static_cast<double>(dim);
}

EnsembleEstimate warmup_fidelity_mc(int q, int big_q, const MatrixXcd& v,
                                    long trials, std::uint64_t seed,
                                    int workers) {
  const int dim = q * big_q;
  if (v.rows() != dim || v.cols() != dim)
    throw std::invalid_argument("warmup_fidelity_mc: V must act on q*Q");
  if (unitarity_defect(v) > 1e-10)
    throw std::invalid_argument("warmup_fidelity_mc: V is not unitary");
  if (trials < 1) throw std::invalid_argument("warmup_fidelity_mc: trials >= 1");
  std::vector<double> values(static_cast<size_t>(trials));
  parallel_for(trials, workers, [&](long i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    // A Haar state is a normalized complex Gaussian vector.
    Eigen::VectorXcd psi(dim);
    for (int k = 0; k < dim; ++k)
      psi(k) = std::complex<double>(rng.normal(), rng.normal());
    psi.normalize();
    const Eigen::VectorXcd phi = v * psi;
    const DensityOperator rho(trace_out_small(psi, q, big_q));
    const DensityOperator sigma(trace_out_small(phi, q, big_q));
    values[static_cast<size_t>(i)] = fidelity(rho, sigma);
  });
  return summarize(values, seed);
}

EnsembleEstimate memory_experiment(int q, int big_q, int sites,
                                   const IntervalSpec& interval, int depth,
                                   const Perturbation& pert, long trials,
                                   std::uint64_t seed, int workers,
                                   std::vector<double>* per_trial,
                                   std::size_t mem_cap) {
  const CircuitGeometry g = CircuitGeometry::alternating(q, big_q, sites);
  interval.validate(g, depth);
  if (pert.layer < 1 || pert.layer > depth)
    throw std::invalid_argument("memory_experiment: perturbation layer outside circuit");
  bool on_layer = false;
  for (int b : g.layer_bonds(pert.layer)) on_layer |= (b == pert.bond);
  if (!on_layer)
    throw std::invalid_argument("memory_experiment: no brick at that (layer, bond)");
  const int gd = g.gate_dim(pert.bond);
  if (pert.v.rows() != gd || pert.v.cols() != gd)
    throw std::invalid_argument("memory_experiment: V dimension does not match brick");
  if (unitarity_defect(pert.v) > 1e-10)
    throw std::invalid_argument("memory_experiment: V is not unitary");
  if (trials < 1) throw std::invalid_argument("memory_experiment: trials >= 1");

  check_state_fits(g, mem_cap);
  std::vector<double> values(static_cast<size_t>(trials));
  parallel_for(trials, workers, [&](long i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const BrickworkGates gates = draw_brickwork_gates(g, depth, rng);
    const BrickEdit edit{pert.layer, pert.bond, pert.v};
    const StateVector clean = evolve_with_gates(g, gates, nullptr, mem_cap);
    const StateVector edited = evolve_with_gates(g, gates, &edit, mem_cap);
    const DensityOperator rho = reduce(clean, interval);
    const DensityOperator sigma = reduce(edited, interval);
    values[static_cast<size_t>(i)] = fidelity(rho, sigma);
  });
  if (per_trial) *per_trial = values;
  return summarize(values, seed);
}

double phase_boundary(double q, double big_q, double ell) {
  if (q < 2.0 || big_q < 2.0)
    throw std::invalid_argument("phase_boundary: dimensions must be >= 2");
  return ell * (std::log(q) + std::log(big_q)) / (4.0 * std::log(q));
}

RenyiPhaseReport renyi_phase_check(int q, int big_q, int sites, int ell,
                                   int depth, long trials, std::uint64_t seed,
                                   int workers) {
  const CircuitGeometry g = CircuitGeometry::alternating(q, big_q, sites);
  IntervalSpec interval;
  interval.start = (depth % 2 == 0) ? 0 : 1;
  interval.length = ell;
  EnsembleOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.workers = workers;
  const EnsembleEstimate est =
      ensemble_average(Metric::purity, g, interval, depth, opt);
  RenyiPhaseReport rep;
  rep.mc_purity = est.mean;
  rep.mc_stderr = est.stderr_of_mean;
  rep.early_branch = std::pow(static_cast<double>(q), -2.0 * depth);
  rep.late_branch =
      std::pow(static_cast<double>(q) * big_q, -0.5 * ell);
  rep.predicted = std::max(rep.early_branch, rep.late_branch);
  rep.within_slack =
      est.mean <= 2.0 * rep.predicted && est.mean >= 0.5 * rep.predicted;
  return rep;
}

}  // namespace ruc

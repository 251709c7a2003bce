#pragma once

#include <cstdint>
#include <string>

#include "ruc/circuit.hpp"
#include "ruc/density.hpp"
#include "ruc/estimate.hpp"

namespace ruc {

// Does the reduced state of an interval remember which gates built it?
// A single brick of the circuit is modified U -> VU and the fidelity
// between the unmodified and modified reduced states is averaged over
// circuit realizations that share all other gates.

enum class Placement { inside, outside, adjacent };

std::string to_string(Placement p);

// Lightcone wedge rule: a brick at layer t (1-based, final layer = depth) is
// inside the wedge iff both of its sites lie in the interval shrunk inward
// by (depth - t) sites on each side; bricks straddling the shrunk boundary
// are adjacent, everything else is outside.
Placement classify_brick(const CircuitGeometry& g, const IntervalSpec& interval,
                         int depth, int layer, int bond);

// Diagonal clock unitary diag(1, w, w^2, ...), w = exp(2 pi i / dim);
// traceless for dim >= 2. Canonical deterministic traceless perturbation.
MatrixXcd clock_unitary(int dim);

// Bipartite warmup: a Haar state on C^q (x) C^Q, rho = reduced state on the
// Q factor, sigma = same after a global unitary V. Returns the Monte Carlo
// mean fidelity.
EnsembleEstimate warmup_fidelity_mc(int q, int big_q, const MatrixXcd& v,
                                    long trials, std::uint64_t seed,
                                    int workers = 0);

// Large-dimension prediction for the q << Q regime:
//   tr_q sqrt(tr_Q(V) tr_Q(V)^dagger) / (q Q).
double warmup_fidelity_prediction(int q, int big_q, const MatrixXcd& v);

struct Perturbation {
  int layer = 0;  // 1-based
  int bond = 0;
  MatrixXcd v;
};

// Mean F(rho_int, sigma_int) on the alternating-dimension brickwork ring
// (even sites q, odd sites Q); rho and sigma share every gate, sigma has V
// applied after the gate at the perturbed brick.
EnsembleEstimate memory_experiment(int q, int big_q, int sites,
                                   const IntervalSpec& interval, int depth,
                                   const Perturbation& pert, long trials,
                                   std::uint64_t seed, int workers = 0,
                                   std::vector<double>* per_trial = nullptr,
                                   std::size_t mem_cap = StateVector::kDefaultMemCap);

// Crossing point of the two Renyi-2 branches: T* = ell (log q + log Q) /
// (4 log q). Below T* the interval remembers inside-wedge bricks.
double phase_boundary(double q, double big_q, double ell);

struct RenyiPhaseReport {
  double mc_purity = 0.0;
  double mc_stderr = 0.0;
  double early_branch = 0.0;      // q^(-2T)
  double late_branch = 0.0;       // (qQ)^(-ell/2)
  double predicted = 0.0;         // max of the branches
  bool within_slack = false;      // mc within a factor 2 of predicted
};

RenyiPhaseReport renyi_phase_check(int q, int big_q, int sites, int ell,
                                   int depth, long trials, std::uint64_t seed,
                                   int workers = 0);

}  // namespace ruc

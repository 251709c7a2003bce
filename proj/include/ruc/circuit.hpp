#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ruc/linalg.hpp"
#include "ruc/rng.hpp"

namespace ruc {

// Thrown before any allocation that would exceed the configured memory cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Boundary { ring, open_chain };

// Chain of qudits with per-site dimensions and a brickwork layer layout.
// Layer 1 acts on bonds (0,1), (2,3), ...; layer 2 on (1,2), (3,4), ...;
// on a ring the last odd-layer bond wraps around. A ring needs even L.
struct CircuitGeometry {
  std::vector<int> site_dims;
  Boundary boundary = Boundary::ring;

  static CircuitGeometry uniform(int q, int sites,
                                 Boundary b = Boundary::ring);
  // Even sites get dimension q, odd sites dimension big_q.
  static CircuitGeometry alternating(int q, int big_q, int sites,
                                     Boundary b = Boundary::ring);

  int sites() const { return static_cast<int>(site_dims.size()); }
  std::size_t dim() const;
  int num_bonds() const;
  std::pair<int, int> bond_sites(int bond) const;
  int gate_dim(int bond) const;
  std::vector<int> layer_bonds(int layer) const;  // layer is 1-based
  void validate() const;
};

// Contiguous interval [start, start+length) of sites, wrapping on a ring.
// A measured interval has even length and is aligned so that both of its
// boundary cuts carry a gate at the final layer; with our layer convention
// that means start and depth have equal parity.
struct IntervalSpec {
  int start = 0;
  int length = 0;

  std::vector<int> sites(const CircuitGeometry& g) const;
  int left_cut_bond(const CircuitGeometry& g) const;
  int right_cut_bond(const CircuitGeometry& g) const;
  void validate(const CircuitGeometry& g, int depth) const;
};

// Throws ResourceError when the amplitude array would not fit the cap.
void check_state_fits(const CircuitGeometry& g, std::size_t mem_cap_bytes);

class StateVector {
 public:
  static constexpr std::size_t kDefaultMemCap = std::size_t{2} << 30;  // 2 GiB

  // Product state |0...0>.
  explicit StateVector(CircuitGeometry g,
                       std::size_t mem_cap_bytes = kDefaultMemCap);

  const CircuitGeometry& geometry() const { return geom_; }
  std::size_t dim() const { return amp_.size(); }
  const std::complex<double>* data() const { return amp_.data(); }
  std::complex<double>* data() { return amp_.data(); }

  double norm() const;

  void apply_two_site_gate(int bond, const MatrixXcd& gate);
  // One brickwork layer of independent Haar gates, bonds in ascending order.
  void apply_layer(int layer, RngStream& rng);

 private:
  void apply_gate_adjacent(int site, const MatrixXcd& gate);
  void apply_gate_generic(int site_a, int site_b, const MatrixXcd& gate);

  CircuitGeometry geom_;
  std::vector<std::size_t> strides_;  // site 0 is most significant
  std::vector<std::complex<double>> amp_;
};

// |0...0> evolved by T layers; the gate sequence is a deterministic function
// of the stream.
StateVector run_brickwork(const CircuitGeometry& g, int depth, RngStream& rng,
                          std::size_t mem_cap_bytes = StateVector::kDefaultMemCap);

// Pre-drawn brickwork gates, one (bond, gate) list per layer in application
// order. Lets two evolutions share the exact same randomness.
using BrickworkGates = std::vector<std::vector<std::pair<int, MatrixXcd>>>;

BrickworkGates draw_brickwork_gates(const CircuitGeometry& g, int depth,
                                    RngStream& rng);

// Optional single-brick modification: after the gate at (layer, bond) is
// applied, the extra unitary v is applied to the same bond (U -> VU).
struct BrickEdit {
  int layer = 0;
  int bond = 0;
  MatrixXcd v;
};

StateVector evolve_with_gates(const CircuitGeometry& g,
                              const BrickworkGates& gates,
                              const BrickEdit* edit = nullptr,
                              std::size_t mem_cap_bytes = StateVector::kDefaultMemCap);

}  // namespace ruc

#include "ruc/circuit.hpp"

#include <string>

#include "ruc/random_matrix.hpp"

namespace ruc {

CircuitGeometry CircuitGeometry::uniform(int q, int sites, Boundary b) {
  CircuitGeometry g;
  g.site_dims.assign(static_cast<size_t>(sites), q);
  g.boundary = b;
  g.validate();
  return g;
}

CircuitGeometry CircuitGeometry::alternating(int q, int big_q, int sites,
                                             Boundary b) {
  CircuitGeometry g;
  g.site_dims.resize(static_cast<size_t>(sites));
  for (int i = 0; i < sites; ++i) g.site_dims[i] = (i % 2 == 0) ? q : big_q;
  g.boundary = b;
  g.validate();
  return g;
}

void CircuitGeometry::validate() const {
  if (site_dims.empty())
    throw std::invalid_argument("geometry: need at least one site");
  for (int d : site_dims)
    if (d < 1) throw std::invalid_argument("geometry: site dimension must be >= 1");
  if (boundary == Boundary::ring && sites() % 2 != 0)
    throw std::invalid_argument("geometry: a ring requires an even number of sites");
}

std::size_t CircuitGeometry::dim() const {
  std::size_t d = 1;
  for (int s : site_dims) {
    if (d > (std::size_t{1} << 62) / static_cast<std::size_t>(s))
      throw ResourceError("geometry: Hilbert dimension overflows");
    d *= static_cast<std::size_t>(s);
  }
  return d;
}

int CircuitGeometry::num_bonds() const {
  return boundary == Boundary::ring ? sites() : sites() - 1;
}

std::pair<int, int> CircuitGeometry::bond_sites(int bond) const {
  if (bond < 0 || bond >= num_bonds())
    throw std::invalid_argument("bond index out of range");
  return {bond, (bond + 1) % sites()};
}

int CircuitGeometry::gate_dim(int bond) const {
  const auto [a, b] = bond_sites(bond);
  return site_dims[static_cast<size_t>(a)] * site_dims[static_cast<size_t>(b)];
}

std::vector<int> CircuitGeometry::layer_bonds(int layer) const {
  if (layer < 1) throw std::invalid_argument("layer is 1-based");
  const int parity = (layer % 2 == 1) ? 0 : 1;
  std::vector<int> bonds;
  for (int b = parity; b < num_bonds(); b += 2) bonds.push_back(b);
  return bonds;
}

std::vector<int> IntervalSpec::sites(const CircuitGeometry& g) const {
  const int L = g.sites();
  if (length < 0 || length > L)
    throw std::invalid_argument("interval length out of range");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(((start + i) % L + L) % L);
  return out;
}

int IntervalSpec::left_cut_bond(const CircuitGeometry& g) const {
  const int L = g.sites();
  return ((start - 1) % L + L) % L;
}

int IntervalSpec::right_cut_bond(const CircuitGeometry& g) const {
  const int L = g.sites();
  return ((start + length - 1) % L + L) % L;
}

void IntervalSpec::validate(const CircuitGeometry& g, int depth) const {
  const int L = g.sites();
  if (length < 2 || length % 2 != 0)
    throw std::invalid_argument("interval length must be even and >= 2");
  if (length > L - 2)
    throw std::invalid_argument("interval must leave at least two sites outside");
  if (g.boundary == Boundary::open_chain) {
    if (start < 1 || start + length > L - 1)
      throw std::invalid_argument(
          "interval on an open chain must keep both boundary cuts inside");
  }
  // Both boundary cuts must be straddled by a gate at the final layer.
  if (depth > 0) {
    const int parity = (depth % 2 == 1) ? 0 : 1;
    if (left_cut_bond(g) % 2 != parity)
      throw std::invalid_argument(
          "interval misaligned: boundary cuts carry no gate at the final layer "
          "(start and depth must have equal parity)");
  }
}

void check_state_fits(const CircuitGeometry& g, std::size_t mem_cap_bytes) {
  const std::size_t bytes = g.dim() * sizeof(std::complex<double>);
  if (bytes > mem_cap_bytes)
    throw ResourceError("state of " + std::to_string(bytes) +
                        " bytes exceeds memory cap of " +
                        std::to_string(mem_cap_bytes));
}

StateVector::StateVector(CircuitGeometry g, std::size_t mem_cap_bytes)
    : geom_(std::move(g)) {
  geom_.validate();
  check_state_fits(geom_, mem_cap_bytes);
  const std::size_t d = geom_.dim();
  strides_.resize(geom_.site_dims.size());
  std::size_t s = 1;
  for (int i = geom_.sites() - 1; i >= 0; --i) {
    strides_[static_cast<size_t>(i)] = s;
    s *= static_cast<std::size_t>(geom_.site_dims[static_cast<size_t>(i)]);
  }
  amp_.assign(d, {0.0, 0.0});
  amp_[0] = {1.0, 0.0};
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply_two_site_gate(int bond, const MatrixXcd& gate) {
  const auto [a, b] = geom_.bond_sites(bond);
  const int expected = geom_.gate_dim(bond);
  if (gate.rows() != expected || gate.cols() != expected)
    throw std::invalid_argument("gate dimension " + std::to_string(gate.rows()) +
                                " does not match bond dimension " +
                                std::to_string(expected));
  if (b == a + 1)
    apply_gate_adjacent(a, gate);
  else
    apply_gate_generic(a, b, gate);
}

// Sites (s, s+1): amplitudes form (pre, blk, post) blocks with blk
// contiguous up to the post stride, so each block is a (blk x post)
// row-major matrix and the gate is a single product per block.
void StateVector::apply_gate_adjacent(int site, const MatrixXcd& gate) {
  const std::size_t da = static_cast<std::size_t>(geom_.site_dims[site]);
  const std::size_t db = static_cast<std::size_t>(geom_.site_dims[site + 1]);
  const std::size_t blk = da * db;
  const std::size_t post = strides_[static_cast<size_t>(site) + 1];
  const std::size_t span = blk * post;
  const std::size_t npre = amp_.size() / span;
  using RowMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                               Eigen::Dynamic, Eigen::RowMajor>;
  RowMat scratch(static_cast<Eigen::Index>(blk), static_cast<Eigen::Index>(post));
  for (std::size_t pre = 0; pre < npre; ++pre) {
    Eigen::Map<RowMat> block(amp_.data() + pre * span,
                             static_cast<Eigen::Index>(blk),
                             static_cast<Eigen::Index>(post));
    scratch.noalias() = gate * block;
    block = scratch;
  }
}

// Arbitrary site pair, used for the wrapped ring bond. Gathers the
// da*db-dimensional fiber for every configuration of the other sites.
void StateVector::apply_gate_generic(int site_a, int site_b,
                                     const MatrixXcd& gate) {
  const std::size_t da = static_cast<std::size_t>(geom_.site_dims[site_a]);
  const std::size_t db = static_cast<std::size_t>(geom_.site_dims[site_b]);
  const std::size_t stra = strides_[static_cast<size_t>(site_a)];
  const std::size_t strb = strides_[static_cast<size_t>(site_b)];
  const std::size_t blk = da * db;

  std::vector<int> rest_sites;
  for (int s = 0; s < geom_.sites(); ++s)
    if (s != site_a && s != site_b) rest_sites.push_back(s);

  Eigen::VectorXcd fiber(static_cast<Eigen::Index>(blk));
  std::vector<int> digits(rest_sites.size(), 0);
  std::size_t base = 0;
  const std::size_t nrest = amp_.size() / blk;
  for (std::size_t it = 0;; ++it) {
    for (std::size_t ca = 0; ca < da; ++ca)
      for (std::size_t cb = 0; cb < db; ++cb)
        fiber(static_cast<Eigen::Index>(ca * db + cb)) =
            amp_[base + ca * stra + cb * strb];
    fiber = gate * fiber;
    for (std::size_t ca = 0; ca < da; ++ca)
      for (std::size_t cb = 0; cb < db; ++cb)
        amp_[base + ca * stra + cb * strb] =
            fiber(static_cast<Eigen::Index>(ca * db + cb));
    if (it + 1 == nrest) break;
    // Mixed-radix increment over the remaining sites, updating base in place.
    for (int k = static_cast<int>(rest_sites.size()) - 1; k >= 0; --k) {
      const int s = rest_sites[static_cast<size_t>(k)];
      const std::size_t str = strides_[static_cast<size_t>(s)];
      if (++digits[static_cast<size_t>(k)] <
          geom_.site_dims[static_cast<size_t>(s)]) {
        base += str;
        break;
      }
      base -= str * static_cast<std::size_t>(
                        geom_.site_dims[static_cast<size_t>(s)] - 1);
      digits[static_cast<size_t>(k)] = 0;
    }
  }
}

void StateVector::apply_layer(int layer, RngStream& rng) {
  for (int bond : geom_.layer_bonds(layer))
    apply_two_site_gate(bond, sample_haar_unitary(geom_.gate_dim(bond), rng));
}

StateVector run_brickwork(const CircuitGeometry& g, int depth, RngStream& rng,
                          std::size_t mem_cap_bytes) {
  StateVector psi(g, mem_cap_bytes);
  for (int t = 1; t <= depth; ++t) psi.apply_layer(t, rng);
  return psi;
}

BrickworkGates draw_brickwork_gates(const CircuitGeometry& g, int depth,
                                    RngStream& rng) {
  BrickworkGates out(static_cast<size_t>(depth));
  for (int t = 1; t <= depth; ++t)
    for (int bond : g.layer_bonds(t))
      out[static_cast<size_t>(t - 1)].emplace_back(
          bond, sample_haar_unitary(g.gate_dim(bond), rng));
  return out;
}

StateVector evolve_with_gates(const CircuitGeometry& g,
                              const BrickworkGates& gates,
                              const BrickEdit* edit,
                              std::size_t mem_cap_bytes) {
  StateVector psi(g, mem_cap_bytes);
  for (size_t t = 0; t < gates.size(); ++t) {
    for (const auto& [bond, gate] : gates[t]) {
      psi.apply_two_site_gate(bond, gate);
      if (edit && edit->layer == static_cast<int>(t) + 1 && edit->bond == bond)
        psi.apply_two_site_gate(bond, edit->v);
    }
  }
  return psi;
}

}  // namespace ruc

#pragma once

#include <random>

#include "stabcut/code.hpp"

namespace stabcut {

// Edge-qubit indexing for an L x L torus. Horizontal edge (r, c) leaves
// vertex (r, c) in the +x direction, vertical edge (r, c) in the +y
// direction; both coordinates wrap. Fixed so that text-format outputs are
// bit-exact across runs.
struct ToricLayout {
  std::size_t L;

  std::size_t num_qubits() const { return 2 * L * L; }
  std::size_t horizontal(std::size_t r, std::size_t c) const {
    return (r % L) * L + (c % L);
  }
  std::size_t vertical(std::size_t r, std::size_t c) const {
    return L * L + (r % L) * L + (c % L);
  }
};

// A qubit region of the torus together with its declared winding labels.
// Windings are constructor-declared, never inferred from the geometry.
struct ToricRegion {
  QubitSubset subset;
  int winding_x = 0;
  int winding_y = 0;
};

struct ToricRegions {
  ToricRegion qx;  // circles the lattice in x, winding (1, 0)
  ToricRegion qy;  // circles the lattice in y, winding (0, 1)
  ToricRegion r1;  // union of the two, winding (1, 1)
};

// All L^2 star (X-type) and L^2 plaquette (Z-type) generators on the torus;
// the reduced rank is N - 2, so k = 2. Requires L >= 2.
StabilizerCode toric_code(std::size_t L);

ToricRegions toric_regions(std::size_t L);

// All 2*nx*ny edges owned by an nx x ny block of unit cells, winding (0, 0).
// Requires 1 <= nx, ny < L so the block cannot circle the lattice.
ToricRegion toric_rectangle(std::size_t L, std::size_t nx, std::size_t ny);

// Z_i Z_{i+1} chain on n qubits, k = 1. Requires n >= 2.
StabilizerCode repetition_code(std::size_t n);

// The [[5,1,3]] code: XZZXI and its cyclic shifts.
StabilizerCode five_qubit_code();

// Random stabilizer code: `num_generators` independent pairwise-commuting
// generators sampled by extending a partial commuting set. Requires
// 1 <= num_generators <= n. Deterministic given the engine state.
StabilizerCode random_code(std::size_t n, std::size_t num_generators,
                           std::mt19937_64& rng);

// Uniformly random subset of the register (each qubit kept with
// probability 1/2).
QubitSubset random_subset(std::size_t n, std::mt19937_64& rng);

}  // namespace stabcut

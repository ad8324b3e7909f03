#pragma once

#include "stabcut/classify.hpp"

namespace stabcut {

// Picks one ground state out of the 2^k-fold degenerate space: the joint +1
// eigenstate of the stabilizer group and of k independent, mutually
// commuting logical operators. The classification report provides ready-made
// choices (the shared logicals l_i for the minimal-entropy state, the deltas
// for the maximal one).
struct GroundStateSpec {
  StabilizerCode code;
  GeneratorList fixed_logicals;
};

// Throws SpecificationError unless fixed_logicals holds exactly k operators
// that commute with every stabilizer generator, commute pairwise, and are
// jointly independent of the stabilizer group.
void validate(const GroundStateSpec& spec);

// Two-sided bound on the entanglement entropy over the ground space,
// in bits: (G(S_AB) -+ m_phi) / 2.
struct EntropyBounds {
  double e_min = 0.0;
  double e_max = 0.0;
  std::size_t g_sab = 0;
  std::size_t m_phi = 0;
};

EntropyBounds entropy_bounds(const StabilizerCode& code, const QubitSubset& a);

// Exact entanglement entropy of the specified ground state in bits: half
// the number of non-local generators of the rank-n abelian group generated
// by the stabilizers and the fixed logicals.
double entropy_of_state(const GroundStateSpec& spec, const QubitSubset& a);

}  // namespace stabcut

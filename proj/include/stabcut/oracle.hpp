#pragma once

#include "stabcut/entropy.hpp"

namespace stabcut::oracle {

// Enumeration guards: brute-force verifiers refuse inputs beyond these
// limits instead of running unbounded.
struct OracleBudget {
  std::size_t max_subset_qubits = 8;
  std::size_t max_statevector_qubits = 12;
  // Clamped to the register size; the per-weight work is capped separately.
  std::size_t max_distance_weight = static_cast<std::size_t>(-1);
};

// The oracles recompute everything from definitions: no overlap groups, no
// canonical forms. They are the ground truth the classification and entropy
// modules are validated against. The default entry points parallelize their
// enumeration loops with OpenMP but are bit-identical to the serial
// reference implementations in oracle::serial.

// g_A by definition: enumerate all 4^|a| Paulis supported on `a`
// (lexicographic over the interleaved x/z bit pattern), keep those commuting
// with every stabilizer generator, and count an independent basis modulo the
// ones lying inside the stabilizer group.
std::size_t brute_localized_count(const StabilizerCode& code, const QubitSubset& a,
                                  const OracleBudget& budget = {});

// Von Neumann entropy (bits) of the reduced density matrix of the selected
// ground state, built as projector products on a dense amplitude vector.
double statevector_entropy(const GroundStateSpec& spec, const QubitSubset& a,
                           const OracleBudget& budget = {});

// Minimum weight over operators that commute with every stabilizer
// generator but lie outside the stabilizer group, found by weight-ordered
// enumeration. Undefined for k = 0.
std::size_t brute_distance(const StabilizerCode& code,
                           const OracleBudget& budget = {});

// Exhaustive search for an anti-commuting pair of logical operators that
// both avoid L_A and L_B while commuting with every element of those sets --
// exactly what sharing a logical qubit across the cut would require.
// Returns true iff a witness exists.
bool quantum_sharing_witness_exists(const StabilizerCode& code,
                                    const QubitSubset& a,
                                    const OracleBudget& budget = {});

namespace serial {

std::size_t brute_localized_count(const StabilizerCode& code, const QubitSubset& a,
                                  const OracleBudget& budget = {});
double statevector_entropy(const GroundStateSpec& spec, const QubitSubset& a,
                           const OracleBudget& budget = {});
std::size_t brute_distance(const StabilizerCode& code,
                           const OracleBudget& budget = {});
bool quantum_sharing_witness_exists(const StabilizerCode& code,
                                    const QubitSubset& a,
                                    const OracleBudget& budget = {});

}  // namespace serial

}  // namespace stabcut::oracle

#pragma once

#include "stabcut/bipartition.hpp"

namespace stabcut {

// Locality class of a logical operator for a fixed bipartition (A, B):
// definable only inside A, only inside B, on both sides (two equivalent
// one-sided representatives), or on neither side alone.
enum class LogicalClass { M_A, M_B, M_AB, M_PHI };

enum class QubitType { LOCAL_A, LOCAL_B, NONLOCAL };

// Complete logical-operator classification for one bipartition.
//
// Count identities (verified on every construction):
//   g_a + g_b = 2k,  m_a + m_b + 2 m_ab = 2k,  m_ab = m_phi,
//   g_a = m_a + m_ab,  g_b = m_b + m_ab.
struct ClassificationReport {
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t m_a = 0;
  std::size_t m_b = 0;
  std::size_t m_ab = 0;
  std::size_t m_phi = 0;
  std::size_t g_a = 0;
  std::size_t g_b = 0;

  // Equivalent one-sided representatives (l_i inside A, l_i' inside B);
  // l_i l_i' is a stabilizer.
  std::vector<std::pair<PauliOperator, PauliOperator>> mab_pairs;
  // One-sided anti-commuting partners of the l_i; r_i r_i' is the non-local
  // logical operator delta_i.
  std::vector<std::pair<PauliOperator, PauliOperator>> r_pairs;
  std::vector<PauliOperator> deltas;
  // Anti-commuting logical pairs supported entirely inside A (resp. B).
  std::vector<std::pair<PauliOperator, PauliOperator>> alpha_pairs;
  std::vector<std::pair<PauliOperator, PauliOperator>> beta_pairs;

  // One entry per logical qubit: LOCAL_A per alpha pair, LOCAL_B per beta
  // pair, NONLOCAL per (l_i, delta_i) pair, in that order.
  std::vector<QubitType> qubit_types;
};

// Locality class of a centralizer element, decided by two linear solves:
// the operator can be shrunk into one side exactly when some stabilizer
// combination matches its restriction to the other side. Stabilizers count
// as trivial logicals and land in M_AB. Throws ParameterError when `op`
// fails to commute with a stabilizer generator.
LogicalClass logical_class(const StabilizerCode& code, const QubitSubset& a,
                           const PauliOperator& op);

// Shared logical representatives: the extra singles of O^A paired with
// their counterparts on B. Each pair multiplies to a stabilizer.
std::vector<std::pair<PauliOperator, PauliOperator>> mab_operators(
    const StabilizerCode& code, const QubitSubset& a);

// Anti-commuting logical pairs definable inside `a` alone, one pair per
// logical qubit local to that side.
std::vector<std::pair<PauliOperator, PauliOperator>> local_pairs(
    const StabilizerCode& code, const QubitSubset& a);

// The non-local logical operators delta_i = r_i r_i', one per shared
// logical l_i; each commutes with the whole stabilizer group, lies outside
// it, and anti-commutes with its l_i.
std::vector<PauliOperator> nonlocal_operators(const StabilizerCode& code,
                                              const QubitSubset& a);

ClassificationReport classify(const StabilizerCode& code, const QubitSubset& a);

struct SecretSharingSummary {
  // Classical bits sharable across the bipartition: m_phi.
  std::size_t classical_bits = 0;
  // Quantum secret sharing between the two sides is never possible.
  bool quantum_sharable = false;
  // Criterion for classical sharing: m_ab != 0.
  bool classical_possible = false;
};

SecretSharingSummary secret_sharing(const ClassificationReport& report);

// k <= n - 2(d - 1) for the supplied distance d >= 1.
bool singleton_check(const StabilizerCode& code, std::size_t d);

}  // namespace stabcut

#pragma once

#include <utility>
#include <vector>

#include "stabcut/pauli.hpp"

namespace stabcut {

// A Pauli operator together with the set of source-list indices whose
// product (modulo phase) reproduces it. Every multiplication propagates
// provenance by symmetric difference, mirroring the GF(2) arithmetic.
struct TrackedOperator {
  PauliOperator op;
  BitVec provenance;
};

// Generating set of a (possibly non-abelian) Pauli subgroup, split into
// anti-commuting pairs and commuting singles:
//
//   < X_1, ..., X_a, X_{a+1}, ..., X_{a+b} >
//   < Z_1, ..., Z_a                        >
//
// Generators in the same pair anti-commute; every other pair of distinct
// generators commutes; all 2a+b generators are independent.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(std::size_t n, std::size_t source_size)
      : n_(n), source_size_(source_size) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t source_size() const { return source_size_; }

  const std::vector<std::pair<TrackedOperator, TrackedOperator>>& pairs() const {
    return pairs_;
  }
  const std::vector<TrackedOperator>& singles() const { return singles_; }

  // Number of independent generators, 2a + b.
  std::size_t rank() const { return 2 * pairs_.size() + singles_.size(); }

  // All canonical generators flattened as [X_1, Z_1, ..., X_a, Z_a,
  // singles...]; deterministic order.
  GeneratorList generators() const;

 private:
  friend CanonicalForm extend(CanonicalForm form, const TrackedOperator& u);

  std::size_t n_ = 0;
  std::size_t source_size_ = 0;
  std::vector<std::pair<TrackedOperator, TrackedOperator>> pairs_;
  std::vector<TrackedOperator> singles_;
};

// Extends the form by one operator. Exactly one of three things happens:
// u already lies in the generated subgroup and the form returns unchanged;
// the residue of u after pair corrections commutes with every single and
// joins the singles; or the first anti-commuting single (stored order)
// becomes the X partner of a new pair whose Z is the residue, and the
// remaining anti-commuting singles are repaired by multiplication with
// that partner.
CanonicalForm extend(CanonicalForm form, const TrackedOperator& u);

// Folds extend over the list in order, starting from the empty form.
// Dependent inputs are tolerated and skipped; 2a + b equals the GF(2)
// rank of the input.
CanonicalForm canonicalize(const GeneratorList& gens);

// The singles: the largest abelian subgroup determined by the form.
GeneratorList max_abelian_part(const CanonicalForm& form);

}  // namespace stabcut

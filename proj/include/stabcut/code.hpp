#pragma once

#include "stabcut/pauli.hpp"

namespace stabcut {

// An N-qubit stabilizer code held as its generator list. Generators must
// pairwise commute; the list may be dependent (the toric constructors emit
// one dependency per operator type). A reduced independent basis is derived
// once and drives all of the algebra, so k = N - rank is exact and -I can
// never be generated.
class StabilizerCode {
 public:
  StabilizerCode(std::size_t n, GeneratorList generators);

  std::size_t num_qubits() const { return n_; }

  // Generators exactly as constructed (identity-free, possibly dependent).
  const GeneratorList& generators() const { return generators_; }

  // Reduced independent basis; G(S) = basis().size().
  const GeneratorList& basis() const { return basis_; }

  std::size_t num_stabilizer_generators() const { return basis_.size(); }
  std::size_t num_logical_qubits() const { return k_; }

 private:
  std::size_t n_;
  GeneratorList generators_;
  GeneratorList basis_;
  std::size_t k_;
};

}  // namespace stabcut

#include "stabcut/code.hpp"

namespace stabcut {

StabilizerCode::StabilizerCode(std::size_t n, GeneratorList generators)
    : n_(n), generators_(std::move(generators)) {
  if (generators_.num_qubits() != n_) {
    throw DimensionError("generator list register size mismatch");
  }
  if (generators_.empty()) {
    throw ParameterError("a stabilizer code needs at least one generator");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commutes(generators_[i], generators_[j])) {
        throw ParameterError("stabilizer generators " + std::to_string(i) +
                             " and " + std::to_string(j) + " anti-commute");
      }
    }
  }
  basis_ = reduce(generators_);
  k_ = n_ - basis_.size();
}

}  // namespace stabcut

#include "stabcut/entropy.hpp"

namespace stabcut {

void validate(const GroundStateSpec& spec) {
  const auto& code = spec.code;
  const auto& fixed = spec.fixed_logicals;
  if (fixed.num_qubits() != code.num_qubits()) {
    throw SpecificationError("fixed logicals act on the wrong register size");
  }
  if (fixed.size() != code.num_logical_qubits()) {
    throw SpecificationError("need exactly k fixed logical operators, got " +
                             std::to_string(fixed.size()));
  }
  GeneratorList combined = code.basis();
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    for (const auto& g : code.basis()) {
      if (!commutes(fixed[i], g)) {
        throw SpecificationError("fixed logical anti-commutes with a stabilizer");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(fixed[i], fixed[j])) {
        throw SpecificationError("fixed logicals anti-commute with each other");
      }
    }
    if (in_group(fixed[i], combined)) {
      throw SpecificationError("fixed logical depends on the stabilizers and "
                               "earlier fixed logicals");
    }
    combined.add(fixed[i]);
  }
}

EntropyBounds entropy_bounds(const StabilizerCode& code, const QubitSubset& a) {
  const BoundaryDecomposition dec = decompose(code, a);
  const ClassificationReport rep = classify(code, a);
  EntropyBounds out;
  out.g_sab = dec.g_sab;
  out.m_phi = rep.m_phi;
  out.e_min = (static_cast<double>(out.g_sab) - static_cast<double>(out.m_phi)) / 2.0;
  out.e_max = (static_cast<double>(out.g_sab) + static_cast<double>(out.m_phi)) / 2.0;
  return out;
}

double entropy_of_state(const GroundStateSpec& spec, const QubitSubset& a) {
  validate(spec);
  const std::size_t n = spec.code.num_qubits();
  if (a.num_qubits() != n) {
    throw DimensionError("subset register size mismatch");
  }

  // The selected state is stabilized by the rank-n abelian group generated
  // by the code's basis together with the fixed logicals; its entanglement
  // entropy is half the non-local generator count of that group.
  GeneratorList full = spec.code.basis();
  for (const auto& f : spec.fixed_logicals) full.add(f);

  const std::size_t on_a = restriction_combinations(full, a).size();
  const std::size_t on_b = restriction_combinations(full, a.complement()).size();
  return static_cast<double>(n - on_a - on_b) / 2.0;
}

}  // namespace stabcut

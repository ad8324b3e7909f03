#include "stabcut/canonical.hpp"

namespace stabcut {

GeneratorList CanonicalForm::generators() const {
  GeneratorList out(n_);
  for (const auto& [xbar, zbar] : pairs_) {
    out.add(xbar.op);
    out.add(zbar.op);
  }
  for (const auto& s : singles_) out.add(s.op);
  return out;
}

CanonicalForm extend(CanonicalForm form, const TrackedOperator& u) {
  if (u.op.num_qubits() != form.num_qubits()) {
    throw DimensionError("extension operator register size mismatch");
  }
  if (u.provenance.size() != form.source_size()) {
    throw DimensionError("provenance length mismatch");
  }

  if (in_group(u.op, form.generators())) return form;

  // Fold the anti-commutations with existing pairs into the residue:
  // multiplying by X when the Z partner anti-commutes (and vice versa)
  // leaves an operator commuting with every pair.
  PauliOperator residue = u.op;
  BitVec prov = u.provenance;
  for (const auto& [xbar, zbar] : form.pairs_) {
    const bool anti_x = !commutes(xbar.op, residue);
    const bool anti_z = !commutes(zbar.op, residue);
    if (anti_z) {
      residue = multiply(residue, xbar.op);
      prov ^= xbar.provenance;
    }
    if (anti_x) {
      residue = multiply(residue, zbar.op);
      prov ^= zbar.provenance;
    }
  }

  std::vector<std::size_t> clashing;
  for (std::size_t j = 0; j < form.singles_.size(); ++j) {
    if (!commutes(form.singles_[j].op, residue)) clashing.push_back(j);
  }

  if (clashing.empty()) {
    form.singles_.push_back({std::move(residue), std::move(prov)});
    return form;
  }

  // The earliest stored single becomes the new X partner; the other
  // clashing singles are repaired by multiplying the partner in.
  TrackedOperator partner = form.singles_[clashing.front()];
  for (std::size_t t = 1; t < clashing.size(); ++t) {
    auto& s = form.singles_[clashing[t]];
    s.op = multiply(s.op, partner.op);
    s.provenance ^= partner.provenance;
  }
  form.singles_.erase(form.singles_.begin() +
                      static_cast<std::ptrdiff_t>(clashing.front()));
  form.pairs_.emplace_back(std::move(partner),
                           TrackedOperator{std::move(residue), std::move(prov)});
  return form;
}

CanonicalForm canonicalize(const GeneratorList& gens) {
  CanonicalForm form(gens.num_qubits(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    form = extend(std::move(form), {gens[i], BitVec::unit(gens.size(), i)});
  }
  return form;
}

GeneratorList max_abelian_part(const CanonicalForm& form) {
  GeneratorList out(form.num_qubits());
  for (const auto& s : form.singles()) out.add(s.op);
  return out;
}

}  // namespace stabcut

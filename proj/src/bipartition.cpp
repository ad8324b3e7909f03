#include "stabcut/bipartition.hpp"

namespace stabcut {

std::vector<TrackedOperator> OverlapGroup::shared_logicals() const {
  return {form.singles().begin() +
              static_cast<std::ptrdiff_t>(num_restriction_singles),
          form.singles().end()};
}

std::vector<BitVec> restriction_combinations(const GeneratorList& basis,
                                             const QubitSubset& keep) {
  const QubitSubset rest = keep.complement();
  std::vector<BitVec> rows;
  rows.reserve(basis.size());
  for (const auto& g : basis) rows.push_back(to_row(restrict_to(g, rest)));
  return gf2::left_kernel(rows);
}

GeneratorList restriction_stabilizers(const StabilizerCode& code,
                                      const QubitSubset& a) {
  if (a.num_qubits() != code.num_qubits()) {
    throw DimensionError("subset register size mismatch");
  }
  GeneratorList out(code.num_qubits());
  for (const auto& combo : restriction_combinations(code.basis(), a)) {
    out.add(product(code.basis(), combo));
  }
  return out;
}

OverlapGroup overlap_group(const StabilizerCode& code, const QubitSubset& a) {
  if (a.num_qubits() != code.num_qubits()) {
    throw DimensionError("subset register size mismatch");
  }
  const GeneratorList& basis = code.basis();
  const std::size_t m = basis.size();

  auto combos = restriction_combinations(basis, a);
  CanonicalForm form(code.num_qubits(), m);
  for (const auto& combo : combos) {
    form = extend(std::move(form), {product(basis, combo), combo});
  }
  if (!form.pairs().empty() || form.singles().size() != combos.size()) {
    throw InvariantError("restriction seeds must enter as independent singles");
  }
  for (std::size_t i = 0; i < m; ++i) {
    form = extend(std::move(form), {restrict_to(basis[i], a), BitVec::unit(m, i)});
  }
  return OverlapGroup{a, std::move(form), combos.size()};
}

PauliOperator counterpart(const StabilizerCode& code, const TrackedOperator& t,
                          const QubitSubset& target) {
  if (t.provenance.size() != code.basis().size()) {
    throw DimensionError("provenance must index the code basis");
  }
  return restrict_to(product(code.basis(), t.provenance), target);
}

BoundaryDecomposition decompose(const StabilizerCode& code, const QubitSubset& a) {
  const QubitSubset b = a.complement();
  const OverlapGroup ov = overlap_group(code, a);
  const GeneratorList& basis = code.basis();

  BoundaryDecomposition out;
  out.s_a = GeneratorList(code.num_qubits());
  for (std::size_t i = 0; i < ov.num_restriction_singles; ++i) {
    out.s_a.add(ov.form.singles()[i].op);
  }
  out.s_b = restriction_stabilizers(code, b);

  // One X-type and one Z-type non-local stabilizer per anti-commuting pair,
  // one shared-logical product per extra single.
  std::vector<BitVec> combos;
  for (const auto& [xbar, zbar] : ov.form.pairs()) {
    combos.push_back(xbar.provenance);
    combos.push_back(zbar.provenance);
  }
  for (const auto& shared : ov.shared_logicals()) {
    combos.push_back(shared.provenance);
  }
  for (const auto& combo : combos) {
    out.s_ab.push_back({product(basis, combo), combo});
  }

  out.g_sa = out.s_a.size();
  out.g_sb = out.s_b.size();
  out.g_sab = out.s_ab.size();

  if (out.g_sa + out.g_sb + out.g_sab != basis.size()) {
    throw InvariantError("stabilizer decomposition counts do not add up");
  }
  std::vector<BitVec> all_combos;
  for (const auto& c : restriction_combinations(basis, a)) all_combos.push_back(c);
  for (const auto& c : restriction_combinations(basis, b)) all_combos.push_back(c);
  for (const auto& c : combos) all_combos.push_back(c);
  if (gf2::rank(all_combos) != basis.size()) {
    throw InvariantError("decomposition generators fail to span the stabilizer group");
  }
  for (const auto& t : out.s_ab) {
    if (restrict_to(t.op, a).is_identity() || restrict_to(t.op, b).is_identity()) {
      throw InvariantError("non-local stabilizer is supported on one side only");
    }
  }
  return out;
}

}  // namespace stabcut

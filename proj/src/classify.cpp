#include "stabcut/classify.hpp"

namespace stabcut {
namespace {

// Row whose standard dot product with a candidate vector over the subset
// columns (x_0, z_0, x_1, z_1, ... over members) equals the symplectic
// product with g.
BitVec commutation_row(const PauliOperator& g, const QubitSubset& sub) {
  BitVec row(2 * sub.size());
  for (std::size_t t = 0; t < sub.size(); ++t) {
    const std::size_t q = sub.members()[t];
    if (g.z().get(q)) row.set(2 * t);
    if (g.x().get(q)) row.set(2 * t + 1);
  }
  return row;
}

PauliOperator decode_subset_vector(const BitVec& v, const QubitSubset& sub,
                                   std::size_t n) {
  PauliOperator p(n);
  for (std::size_t t = 0; t < sub.size(); ++t) {
    const std::size_t q = sub.members()[t];
    if (v.get(2 * t)) p.x().set(q);
    if (v.get(2 * t + 1)) p.z().set(q);
  }
  return p;
}

// Basis of all Paulis supported on `sub` commuting with every constraint
// operator (a GF(2) nullspace over the subset columns).
std::vector<PauliOperator> centralizer_on_subset(const GeneratorList& constraints,
                                                 const QubitSubset& sub) {
  std::vector<BitVec> rows;
  rows.reserve(constraints.size());
  for (const auto& g : constraints) rows.push_back(commutation_row(g, sub));
  std::vector<PauliOperator> basis;
  for (const auto& v : gf2::right_kernel(rows, 2 * sub.size())) {
    basis.push_back(decode_subset_vector(v, sub, constraints.num_qubits()));
  }
  return basis;
}

// Canonicalizes span(seeds + extensions), asserting that every seed enters
// as a single and stays one. Returns the anti-commuting pairs.
std::vector<std::pair<PauliOperator, PauliOperator>> pair_up_centralizer(
    std::size_t n, const std::vector<PauliOperator>& seed_singles,
    const std::vector<PauliOperator>& extensions) {
  const std::size_t src = seed_singles.size() + extensions.size();
  CanonicalForm form(n, src);
  std::size_t idx = 0;
  for (const auto& op : seed_singles) {
    form = extend(std::move(form), {op, BitVec::unit(src, idx++)});
  }
  if (!form.pairs().empty() || form.singles().size() != seed_singles.size()) {
    throw InvariantError("centralizer seeds must enter as independent singles");
  }
  for (const auto& op : extensions) {
    form = extend(std::move(form), {op, BitVec::unit(src, idx++)});
  }
  if (form.singles().size() != seed_singles.size()) {
    throw InvariantError("centralizer grew extra commuting generators");
  }
  std::vector<std::pair<PauliOperator, PauliOperator>> out;
  for (const auto& [xbar, zbar] : form.pairs()) out.emplace_back(xbar.op, zbar.op);
  return out;
}

// Everything the canonical form of C(S_side) yields for one side: the
// anti-commuting partner r_i of each shared logical l_i, plus the logical
// pairs local to the side. Deriving both from one form keeps the whole
// reported frame jointly symplectic (deltas commute with the local pairs).
struct SideFrame {
  std::vector<PauliOperator> r_partners;
  std::vector<std::pair<PauliOperator, PauliOperator>> local_pairs;
};

// The form is seeded with the overlap-group pairs, the restriction basis and
// the l_i, in that order; the l_i then acquire partners when the centralizer
// basis is folded in, and the leftover pairs are the side-local logicals.
// Repairs can replace a seeded l_i by a product of seeded l's, so the raw
// partners are re-matched to the original l_i by a GF(2) solve.
SideFrame centralizer_frame(
    std::size_t n,
    const std::vector<std::pair<PauliOperator, PauliOperator>>& overlap_pairs,
    const GeneratorList& s_side, const std::vector<PauliOperator>& ells,
    const QubitSubset& side) {
  const std::size_t d = ells.size();
  const std::vector<PauliOperator> cs_basis = centralizer_on_subset(s_side, side);
  const std::size_t src =
      2 * overlap_pairs.size() + s_side.size() + d + cs_basis.size();
  CanonicalForm form(n, src);
  std::size_t idx = 0;
  for (const auto& [xbar, zbar] : overlap_pairs) {
    form = extend(std::move(form), {xbar, BitVec::unit(src, idx++)});
    form = extend(std::move(form), {zbar, BitVec::unit(src, idx++)});
  }
  if (form.pairs().size() != overlap_pairs.size() || !form.singles().empty()) {
    throw InvariantError("overlap pairs failed to seed as canonical pairs");
  }
  for (const auto& op : s_side) {
    form = extend(std::move(form), {op, BitVec::unit(src, idx++)});
  }
  for (const auto& op : ells) {
    form = extend(std::move(form), {op, BitVec::unit(src, idx++)});
  }
  if (form.singles().size() != s_side.size() + d) {
    throw InvariantError("restriction basis and shared logicals must seed as singles");
  }
  for (const auto& op : cs_basis) {
    form = extend(std::move(form), {op, BitVec::unit(src, idx++)});
  }
  if (form.singles().size() != s_side.size()) {
    throw InvariantError("shared logicals left unpaired in the centralizer");
  }

  // Split the pairs beyond the seeds: X sides in span(l_1..l_d) carry the
  // raw partners, the rest are local logical pairs.
  std::vector<BitVec> ell_rows;
  for (const auto& op : ells) ell_rows.push_back(to_row(op));
  SideFrame frame;
  std::vector<const TrackedOperator*> raw_partners;
  for (std::size_t t = overlap_pairs.size(); t < form.pairs().size(); ++t) {
    const auto& [xbar, zbar] = form.pairs()[t];
    if (gf2::express(to_row(xbar.op), ell_rows)) {
      raw_partners.push_back(&zbar);
    } else {
      frame.local_pairs.emplace_back(xbar.op, zbar.op);
    }
  }
  if (raw_partners.size() != d) {
    throw InvariantError("shared-logical pair count mismatch");
  }
  if (d == 0) return frame;

  // match[s][j] = 1 iff raw partner s anti-commutes with l_j; invertible, so
  // products of raw partners realize partners of the original l_i.
  std::vector<BitVec> match(d, BitVec(d));
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!commutes(raw_partners[s]->op, ells[j])) match[s].set(j);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    auto combo = gf2::express(BitVec::unit(d, i), match);
    if (!combo) throw InvariantError("partner matching system is singular");
    PauliOperator r(n);
    for (auto s : combo->indices()) r = multiply(r, raw_partners[s]->op);
    frame.r_partners.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (commutes(frame.r_partners[i], ells[j]) != (i != j)) {
        throw InvariantError("partner anti-commutation pattern is wrong");
      }
    }
  }
  return frame;
}

// Everything classify needs about one bipartition, derived from the A-side
// overlap group, its counterparts on B, and an independent B-side overlap
// group (used for the C_B dimension and as a cross-check).
struct PartitionContext {
  QubitSubset a, b;
  OverlapGroup ov_a, ov_b;
  GeneratorList s_a, s_b;
  std::vector<PauliOperator> ells_a, ells_b;
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs_a, pairs_b;

  std::size_t d() const { return ells_a.size(); }
};

PartitionContext build_context(const StabilizerCode& code, const QubitSubset& a) {
  if (a.num_qubits() != code.num_qubits()) {
    throw DimensionError("subset register size mismatch");
  }
  PartitionContext ctx;
  ctx.a = a;
  ctx.b = a.complement();
  ctx.ov_a = overlap_group(code, ctx.a);
  ctx.ov_b = overlap_group(code, ctx.b);

  ctx.s_a = GeneratorList(code.num_qubits());
  for (std::size_t i = 0; i < ctx.ov_a.num_restriction_singles; ++i) {
    ctx.s_a.add(ctx.ov_a.form.singles()[i].op);
  }
  ctx.s_b = GeneratorList(code.num_qubits());
  for (std::size_t i = 0; i < ctx.ov_b.num_restriction_singles; ++i) {
    ctx.s_b.add(ctx.ov_b.form.singles()[i].op);
  }

  for (const auto& shared : ctx.ov_a.shared_logicals()) {
    ctx.ells_a.push_back(shared.op);
    ctx.ells_b.push_back(counterpart(code, shared, ctx.b));
  }
  for (const auto& [xbar, zbar] : ctx.ov_a.form.pairs()) {
    ctx.pairs_a.emplace_back(xbar.op, zbar.op);
    ctx.pairs_b.emplace_back(counterpart(code, xbar, ctx.b),
                             counterpart(code, zbar, ctx.b));
  }

  // The one-to-one correspondence forces matching pair and shared counts on
  // the two sides.
  const std::size_t d_b =
      ctx.ov_b.form.singles().size() - ctx.ov_b.num_restriction_singles;
  if (ctx.ov_b.form.pairs().size() != ctx.pairs_a.size() || d_b != ctx.d()) {
    throw InvariantError("overlap groups disagree across the bipartition");
  }
  return ctx;
}

std::vector<std::pair<PauliOperator, PauliOperator>> localized_pairs_for_side(
    const StabilizerCode& code, const PartitionContext& ctx, bool side_a) {
  const QubitSubset& side = side_a ? ctx.a : ctx.b;
  const GeneratorList& s_side = side_a ? ctx.s_a : ctx.s_b;
  const std::vector<PauliOperator>& ells = side_a ? ctx.ells_a : ctx.ells_b;

  std::vector<PauliOperator> seeds(s_side.begin(), s_side.end());
  seeds.insert(seeds.end(), ells.begin(), ells.end());
  return pair_up_centralizer(code.num_qubits(), seeds,
                             centralizer_on_subset(code.basis(), side));
}

void verify_logical(const StabilizerCode& code, const PauliOperator& op,
                    const char* what) {
  for (const auto& g : code.basis()) {
    if (!commutes(op, g)) {
      throw InvariantError(std::string(what) + " fails to commute with a stabilizer");
    }
  }
  if (in_group(op, code.basis())) {
    throw InvariantError(std::string(what) + " lies inside the stabilizer group");
  }
}

// delta_i = r_i r_i' must be logical and must anti-commute with exactly the
// i-th shared logical on each side.
PauliOperator verified_delta(const StabilizerCode& code, const PartitionContext& ctx,
                             const PauliOperator& r_a, const PauliOperator& r_b,
                             std::size_t i) {
  PauliOperator delta = multiply(r_a, r_b);
  verify_logical(code, delta, "delta");
  for (std::size_t j = 0; j < ctx.d(); ++j) {
    const bool want_commute = (i != j);
    if (commutes(delta, ctx.ells_a[j]) != want_commute ||
        commutes(delta, ctx.ells_b[j]) != want_commute) {
      throw InvariantError("delta has the wrong commutation with a shared logical");
    }
  }
  return delta;
}

}  // namespace

LogicalClass logical_class(const StabilizerCode& code, const QubitSubset& a,
                           const PauliOperator& op) {
  if (a.num_qubits() != code.num_qubits() ||
      op.num_qubits() != code.num_qubits()) {
    throw DimensionError("register size mismatch");
  }
  for (const auto& g : code.basis()) {
    if (!commutes(op, g)) {
      throw ParameterError("operator anti-commutes with a stabilizer generator");
    }
  }
  const auto definable_inside = [&](const QubitSubset& side) {
    const QubitSubset rest = side.complement();
    std::vector<BitVec> rows;
    for (const auto& g : code.basis()) rows.push_back(to_row(restrict_to(g, rest)));
    return gf2::express(to_row(restrict_to(op, rest)), rows).has_value();
  };
  const bool in_a = definable_inside(a);
  const bool in_b = definable_inside(a.complement());
  if (in_a && in_b) return LogicalClass::M_AB;
  if (in_a) return LogicalClass::M_A;
  if (in_b) return LogicalClass::M_B;
  return LogicalClass::M_PHI;
}

std::vector<std::pair<PauliOperator, PauliOperator>> mab_operators(
    const StabilizerCode& code, const QubitSubset& a) {
  const OverlapGroup ov = overlap_group(code, a);
  const QubitSubset b = a.complement();
  std::vector<std::pair<PauliOperator, PauliOperator>> out;
  for (const auto& shared : ov.shared_logicals()) {
    out.emplace_back(shared.op, counterpart(code, shared, b));
  }
  return out;
}

std::vector<std::pair<PauliOperator, PauliOperator>> local_pairs(
    const StabilizerCode& code, const QubitSubset& a) {
  const PartitionContext ctx = build_context(code, a);
  return localized_pairs_for_side(code, ctx, true);
}

std::vector<PauliOperator> nonlocal_operators(const StabilizerCode& code,
                                              const QubitSubset& a) {
  const PartitionContext ctx = build_context(code, a);
  const auto r_a =
      centralizer_frame(code.num_qubits(), ctx.pairs_a, ctx.s_a, ctx.ells_a, ctx.a)
          .r_partners;
  const auto r_b =
      centralizer_frame(code.num_qubits(), ctx.pairs_b, ctx.s_b, ctx.ells_b, ctx.b)
          .r_partners;

  std::vector<PauliOperator> deltas;
  for (std::size_t i = 0; i < ctx.d(); ++i) {
    deltas.push_back(verified_delta(code, ctx, r_a[i], r_b[i], i));
  }
  return deltas;
}

ClassificationReport classify(const StabilizerCode& code, const QubitSubset& a) {
  const PartitionContext ctx = build_context(code, a);

  ClassificationReport rep;
  rep.n = code.num_qubits();
  rep.k = code.num_logical_qubits();

  for (std::size_t i = 0; i < ctx.d(); ++i) {
    rep.mab_pairs.emplace_back(ctx.ells_a[i], ctx.ells_b[i]);
  }

  // One canonical form of C(S_side) per side supplies both the side-local
  // pairs and the shared-logical partners, so the report is one consistent
  // symplectic frame: every listed operator commutes with every other except
  // its own column partner.
  const SideFrame frame_a =
      centralizer_frame(rep.n, ctx.pairs_a, ctx.s_a, ctx.ells_a, ctx.a);
  const SideFrame frame_b =
      centralizer_frame(rep.n, ctx.pairs_b, ctx.s_b, ctx.ells_b, ctx.b);
  rep.alpha_pairs = frame_a.local_pairs;
  rep.beta_pairs = frame_b.local_pairs;

  for (std::size_t i = 0; i < ctx.d(); ++i) {
    rep.r_pairs.emplace_back(frame_a.r_partners[i], frame_b.r_partners[i]);
    rep.deltas.push_back(verified_delta(code, ctx, frame_a.r_partners[i],
                                        frame_b.r_partners[i], i));
  }

  rep.m_a = 2 * rep.alpha_pairs.size();
  rep.m_b = 2 * rep.beta_pairs.size();
  rep.m_ab = ctx.d();

  // g_A = G(C_A) - G(S_A) with G(C_A) = 2 V_A - G(O^A).
  const std::size_t g_ca = 2 * ctx.a.size() - ctx.ov_a.form.rank();
  const std::size_t g_cb = 2 * ctx.b.size() - ctx.ov_b.form.rank();
  rep.g_a = g_ca - ctx.s_a.size();
  rep.g_b = g_cb - ctx.s_b.size();

  const auto check = [](bool ok, const char* msg) {
    if (!ok) throw InvariantError(msg);
  };
  check(rep.g_a + rep.g_b == 2 * rep.k, "g_A + g_B != 2k");
  check(rep.g_a == rep.m_a + rep.m_ab, "g_A != m_A + m_AB");
  check(rep.g_b == rep.m_b + rep.m_ab, "g_B != m_B + m_AB");
  check(rep.m_a + rep.m_b + 2 * rep.m_ab == 2 * rep.k,
        "m_A + m_B + 2 m_AB != 2k");
  rep.m_phi = 2 * rep.k - rep.m_a - rep.m_b - rep.m_ab;
  check(rep.m_phi == rep.m_ab, "m_AB != m_phi");

  for (const auto& [l_in_a, l_in_b] : rep.mab_pairs) {
    verify_logical(code, l_in_a, "shared logical");
    verify_logical(code, l_in_b, "shared logical counterpart");
  }
  for (const auto& [alpha, alpha_p] : rep.alpha_pairs) {
    verify_logical(code, alpha, "alpha");
    verify_logical(code, alpha_p, "alpha partner");
  }
  for (const auto& [beta, beta_p] : rep.beta_pairs) {
    verify_logical(code, beta, "beta");
    verify_logical(code, beta_p, "beta partner");
  }

  rep.qubit_types.assign(rep.alpha_pairs.size(), QubitType::LOCAL_A);
  rep.qubit_types.insert(rep.qubit_types.end(), rep.beta_pairs.size(),
                         QubitType::LOCAL_B);
  rep.qubit_types.insert(rep.qubit_types.end(), rep.m_ab, QubitType::NONLOCAL);
  check(rep.qubit_types.size() == rep.k, "logical qubit typing does not cover k");

  // The k reported columns must form one symplectic frame: anti-commutation
  // within a column, commutation across all other pairs.
  std::vector<std::pair<PauliOperator, PauliOperator>> columns = rep.alpha_pairs;
  columns.insert(columns.end(), rep.beta_pairs.begin(), rep.beta_pairs.end());
  for (std::size_t i = 0; i < rep.m_ab; ++i) {
    columns.emplace_back(rep.mab_pairs[i].first, rep.deltas[i]);
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    check(!commutes(columns[i].first, columns[i].second),
          "logical qubit column fails to anti-commute");
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      check(commutes(columns[i].first, columns[j].first) &&
                commutes(columns[i].first, columns[j].second) &&
                commutes(columns[i].second, columns[j].first) &&
                commutes(columns[i].second, columns[j].second),
            "logical qubit columns fail to commute across pairs");
    }
  }

  return rep;
}

SecretSharingSummary secret_sharing(const ClassificationReport& report) {
  return SecretSharingSummary{report.m_phi, false, report.m_ab != 0};
}

bool singleton_check(const StabilizerCode& code, std::size_t d) {
  if (d < 1) throw ParameterError("distance must be at least 1");
  return code.num_logical_qubits() + 2 * (d - 1) <= code.num_qubits();
}

}  // namespace stabcut

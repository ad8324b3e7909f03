#pragma once

#include "stabcut/canonical.hpp"
#include "stabcut/code.hpp"

namespace stabcut {

// Canonical form of the overlapping operator group O^A = < S_i|_A >, the
// group generated by restricting every stabilizer generator onto one side.
// Provenance indexes the code's reduced stabilizer basis, so each canonical
// generator reconstructs as the product of the indexed restrictions.
//
// Canonicalization is seeded with a basis of the restriction group S_A, so
// the singles split positionally: the first num_restriction_singles are an
// S_A basis, the remainder are representatives of logical operators that
// live on both sides (one per non-local/shared logical pair).
struct OverlapGroup {
  QubitSubset side;
  CanonicalForm form;
  std::size_t num_restriction_singles = 0;

  // Singles beyond the S_A block; these are the shared logical
  // representatives l_1..l_d supported inside `side`.
  std::vector<TrackedOperator> shared_logicals() const;
};

// Combinations c over `basis` whose product is supported entirely inside
// `keep` (the restriction to the complement is the identity).
std::vector<BitVec> restriction_combinations(const GeneratorList& basis,
                                             const QubitSubset& keep);

// Independent basis of the stabilizer subgroup supported inside `a`,
// computed as the kernel of the restrict-to-complement map over GF(2)
// combinations of the code's basis. Products count, not just generators:
// a row of plaquettes multiplying to a one-sided loop is found here.
GeneratorList restriction_stabilizers(const StabilizerCode& code,
                                      const QubitSubset& a);

OverlapGroup overlap_group(const StabilizerCode& code, const QubitSubset& a);

// Product of the indexed stabilizer generators restricted onto `target`.
// Applied to an O^A canonical generator with target = B, this returns the
// corresponding O^B canonical generator; the two multiply to a stabilizer.
PauliOperator counterpart(const StabilizerCode& code, const TrackedOperator& t,
                          const QubitSubset& target);

// Split of the stabilizer group over a bipartition:
//   G(S) = G(S_A) + G(S_B) + G(S_AB).
// The non-local generators s_ab are full stabilizers assembled from the
// O^A canonical generators and their counterparts, so the decomposition is
// deterministic despite the general non-uniqueness of S_AB.
struct BoundaryDecomposition {
  GeneratorList s_a;
  GeneratorList s_b;
  std::vector<TrackedOperator> s_ab;

  std::size_t g_sa = 0;
  std::size_t g_sb = 0;
  std::size_t g_sab = 0;
};

BoundaryDecomposition decompose(const StabilizerCode& code, const QubitSubset& a);

}  // namespace stabcut

#include <random>

#include "gtest/gtest.h"
#include "stabcut/classify.hpp"
#include "stabcut/codes.hpp"
#include "stabcut/oracle.hpp"

using namespace stabcut;

namespace {

PauliOperator P(const std::string& s) { return PauliOperator::from_string(s); }

StabilizerCode bell_state() {
  GeneratorList gens(2);
  gens.add(P("XX"));
  gens.add(P("ZZ"));
  return StabilizerCode(2, std::move(gens));
}

void expect_valid_logical(const StabilizerCode& code, const PauliOperator& op) {
  for (const auto& g : code.basis()) EXPECT_TRUE(commutes(op, g));
  EXPECT_FALSE(in_group(op, code.basis()).has_value());
}

}  // namespace

TEST(MabOperators, RepetitionThree) {
  const StabilizerCode code = repetition_code(3);
  const auto pairs = mab_operators(code, QubitSubset(3, {0}));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].first, P("ZII"));
  EXPECT_EQ(pairs[0].second, P("IZI"));
}

TEST(MabOperators, BellStateHasNone) {
  EXPECT_TRUE(mab_operators(bell_state(), QubitSubset(2, {0})).empty());
}

TEST(MabOperators, ToricStripHasTwoSharedLoops) {
  const StabilizerCode code = toric_code(3);
  const auto qx = toric_regions(3).qx;
  const auto pairs = mab_operators(code, qx.subset);
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& [in_a, in_b] : pairs) {
    EXPECT_TRUE(restrict_to(in_a, qx.subset.complement()).is_identity());
    EXPECT_TRUE(restrict_to(in_b, qx.subset).is_identity());
    expect_valid_logical(code, in_a);
    expect_valid_logical(code, in_b);
    EXPECT_TRUE(in_group(multiply(in_a, in_b), code.basis()).has_value());
  }
  // one X-type and one Z-type noncontractible loop, each of length L
  std::size_t pure_x = 0, pure_z = 0;
  for (const auto& [in_a, in_b] : pairs) {
    if (in_a.z().none() && in_a.x().count() == 3) ++pure_x;
    if (in_a.x().none() && in_a.z().count() == 3) ++pure_z;
  }
  EXPECT_EQ(pure_x, 1u);
  EXPECT_EQ(pure_z, 1u);
}

TEST(LocalPairs, ToricR1HoldsAllFourLogicals) {
  const StabilizerCode code = toric_code(3);
  const auto r1 = toric_regions(3).r1;
  const auto pairs = local_pairs(code, r1.subset);
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& [u, v] : pairs) {
    EXPECT_FALSE(commutes(u, v));
    expect_valid_logical(code, u);
    expect_valid_logical(code, v);
    EXPECT_TRUE(restrict_to(u, r1.subset.complement()).is_identity());
    EXPECT_TRUE(restrict_to(v, r1.subset.complement()).is_identity());
  }
}

TEST(LocalPairs, EmptyCases) {
  const StabilizerCode code = repetition_code(3);
  EXPECT_TRUE(local_pairs(code, QubitSubset(3, {0})).empty());
  EXPECT_TRUE(local_pairs(code, QubitSubset::empty(3)).empty());
}

TEST(NonlocalOperators, RepetitionThreeGivesXXX) {
  const StabilizerCode code = repetition_code(3);
  const auto deltas = nonlocal_operators(code, QubitSubset(3, {0}));
  ASSERT_EQ(deltas.size(), 1u);
  EXPECT_EQ(deltas[0], P("XXX"));
}

TEST(NonlocalOperators, StabilizerStateHasNone) {
  EXPECT_TRUE(nonlocal_operators(bell_state(), QubitSubset(2, {0})).empty());
}

TEST(NonlocalOperators, ToricStripGivesTwoCrossingLoops) {
  const StabilizerCode code = toric_code(3);
  const auto qx = toric_regions(3).qx;
  const auto deltas = nonlocal_operators(code, qx.subset);
  ASSERT_EQ(deltas.size(), 2u);
  for (const auto& d : deltas) {
    expect_valid_logical(code, d);
    EXPECT_FALSE(restrict_to(d, qx.subset).is_identity());
    EXPECT_FALSE(restrict_to(d, qx.subset.complement()).is_identity());
  }
}

TEST(Classify, RepetitionThree) {
  const StabilizerCode code = repetition_code(3);
  const auto rep = classify(code, QubitSubset(3, {0}));
  EXPECT_EQ(rep.m_a, 0u);
  EXPECT_EQ(rep.m_b, 0u);
  EXPECT_EQ(rep.m_ab, 1u);
  EXPECT_EQ(rep.m_phi, 1u);
  EXPECT_EQ(rep.g_a, 1u);
  EXPECT_EQ(rep.g_b, 1u);
  ASSERT_EQ(rep.qubit_types.size(), 1u);
  EXPECT_EQ(rep.qubit_types[0], QubitType::NONLOCAL);
}

TEST(Classify, ToricQxStrip) {
  const StabilizerCode code = toric_code(3);
  const auto rep = classify(code, toric_regions(3).qx.subset);
  EXPECT_EQ(rep.m_a, 0u);
  EXPECT_EQ(rep.m_b, 0u);
  EXPECT_EQ(rep.m_ab, 2u);
  EXPECT_EQ(rep.m_phi, 2u);
  EXPECT_EQ(rep.g_a, 2u);
  EXPECT_EQ(rep.g_b, 2u);
  EXPECT_EQ(rep.qubit_types,
            (std::vector<QubitType>{QubitType::NONLOCAL, QubitType::NONLOCAL}));
}

TEST(Classify, ToricR1) {
  const StabilizerCode code = toric_code(3);
  const auto rep = classify(code, toric_regions(3).r1.subset);
  EXPECT_EQ(rep.m_a, 4u);
  EXPECT_EQ(rep.m_b, 0u);
  EXPECT_EQ(rep.m_ab, 0u);
  EXPECT_EQ(rep.m_phi, 0u);
  EXPECT_EQ(rep.g_a, 4u);
  EXPECT_EQ(rep.g_b, 0u);
  EXPECT_EQ(rep.qubit_types,
            (std::vector<QubitType>{QubitType::LOCAL_A, QubitType::LOCAL_A}));
}

TEST(Classify, DeltaAntiCommutationPattern) {
  const StabilizerCode code = toric_code(2);
  const auto qx = toric_regions(2).qx;
  const auto rep = classify(code, qx.subset);
  ASSERT_EQ(rep.deltas.size(), rep.mab_pairs.size());
  for (std::size_t i = 0; i < rep.deltas.size(); ++i) {
    for (std::size_t j = 0; j < rep.mab_pairs.size(); ++j) {
      EXPECT_EQ(commutes(rep.deltas[i], rep.mab_pairs[j].first), i != j);
      EXPECT_EQ(commutes(rep.deltas[i], rep.mab_pairs[j].second), i != j);
    }
    expect_valid_logical(code, rep.deltas[i]);
  }
  for (std::size_t i = 0; i < rep.r_pairs.size(); ++i) {
    EXPECT_EQ(multiply(rep.r_pairs[i].first, rep.r_pairs[i].second), rep.deltas[i]);
  }
}

TEST(Classify, CountIdentitiesHoldOnRandomCodes) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 9;  // N <= 10
    const std::size_t m = 1 + rng() % n;
    const StabilizerCode code = random_code(n, m, rng);
    const QubitSubset a = random_subset(n, rng);
    const auto rep = classify(code, a);
    EXPECT_EQ(rep.g_a + rep.g_b, 2 * rep.k);
    EXPECT_EQ(rep.m_ab, rep.m_phi);
    EXPECT_EQ(rep.m_a + rep.m_b + 2 * rep.m_ab, 2 * rep.k);
  }
}

TEST(Classify, ComplementDuality) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const StabilizerCode code = random_code(n, 1 + rng() % n, rng);
    const QubitSubset a = random_subset(n, rng);
    const auto fwd = classify(code, a);
    const auto rev = classify(code, a.complement());
    EXPECT_EQ(fwd.m_a, rev.m_b);
    EXPECT_EQ(fwd.m_b, rev.m_a);
    EXPECT_EQ(fwd.g_a, rev.g_b);
    EXPECT_EQ(fwd.g_b, rev.g_a);
    EXPECT_EQ(fwd.m_ab, rev.m_ab);
    EXPECT_EQ(fwd.m_phi, rev.m_phi);
  }
}

TEST(Classify, RepresentativesAreValidAndOneSided) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const StabilizerCode code = random_code(n, 1 + rng() % n, rng);
    const QubitSubset a = random_subset(n, rng);
    const QubitSubset b = a.complement();
    const auto rep = classify(code, a);
    for (const auto& [in_a, in_b] : rep.mab_pairs) {
      expect_valid_logical(code, in_a);
      expect_valid_logical(code, in_b);
      EXPECT_TRUE(restrict_to(in_a, b).is_identity());
      EXPECT_TRUE(restrict_to(in_b, a).is_identity());
    }
    for (const auto& [u, v] : rep.alpha_pairs) {
      expect_valid_logical(code, u);
      expect_valid_logical(code, v);
      EXPECT_TRUE(restrict_to(u, b).is_identity());
      EXPECT_TRUE(restrict_to(v, b).is_identity());
      EXPECT_FALSE(commutes(u, v));
    }
    for (const auto& [u, v] : rep.beta_pairs) {
      expect_valid_logical(code, u);
      expect_valid_logical(code, v);
      EXPECT_TRUE(restrict_to(u, a).is_identity());
      EXPECT_TRUE(restrict_to(v, a).is_identity());
      EXPECT_FALSE(commutes(u, v));
    }
    for (const auto& d : rep.deltas) expect_valid_logical(code, d);
  }
}

TEST(Classify, MonotoneUnderGrowingRegions) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const StabilizerCode code = random_code(n, 1 + rng() % n, rng);
    const QubitSubset small = random_subset(n, rng);
    std::vector<std::size_t> grown = small.members();
    for (std::size_t q = 0; q < n; ++q) {
      if (!small.contains(q) && (rng() & 1u)) grown.push_back(q);
    }
    const QubitSubset big(n, std::move(grown));
    EXPECT_LE(classify(code, small).g_a, classify(code, big).g_a);
  }
}

TEST(Classify, MatchesBruteForceOracle) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + rng() % 7;  // n <= 8
    const StabilizerCode code = random_code(n, 1 + rng() % n, rng);
    const QubitSubset a = random_subset(n, rng);
    const auto rep = classify(code, a);
    EXPECT_EQ(oracle::brute_localized_count(code, a), rep.g_a);
  }
}

TEST(Classify, NonWindingRectanglesHoldNoLogicalOperators) {
  for (std::size_t L : {3, 4}) {
    const StabilizerCode code = toric_code(L);
    for (std::size_t nx = 1; nx < L; ++nx) {
      for (std::size_t ny = 1; ny < L; ++ny) {
        const auto rep = classify(code, toric_rectangle(L, nx, ny).subset);
        EXPECT_EQ(rep.m_phi, 0u);
        EXPECT_EQ(rep.g_a, 0u);
        EXPECT_EQ(rep.g_b, 4u);
      }
    }
  }
}

TEST(LogicalClass, MatchesTheReportedLists) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const StabilizerCode code = random_code(n, 1 + rng() % n, rng);
    const QubitSubset a = random_subset(n, rng);
    const auto rep = classify(code, a);
    for (const auto& [in_a, in_b] : rep.mab_pairs) {
      EXPECT_EQ(logical_class(code, a, in_a), LogicalClass::M_AB);
      EXPECT_EQ(logical_class(code, a, in_b), LogicalClass::M_AB);
    }
    for (const auto& [u, v] : rep.alpha_pairs) {
      EXPECT_EQ(logical_class(code, a, u), LogicalClass::M_A);
      EXPECT_EQ(logical_class(code, a, v), LogicalClass::M_A);
    }
    for (const auto& [u, v] : rep.beta_pairs) {
      EXPECT_EQ(logical_class(code, a, u), LogicalClass::M_B);
      EXPECT_EQ(logical_class(code, a, v), LogicalClass::M_B);
    }
    for (const auto& d : rep.deltas) {
      EXPECT_EQ(logical_class(code, a, d), LogicalClass::M_PHI);
    }
  }
}

TEST(LogicalClass, StabilizersAreTrivialSharedLogicals) {
  const StabilizerCode code = repetition_code(3);
  const QubitSubset a(3, {0});
  EXPECT_EQ(logical_class(code, a, P("ZZI")), LogicalClass::M_AB);
  EXPECT_THROW(logical_class(code, a, P("XII")), ParameterError);
}

TEST(SecretSharing, Summaries) {
  const StabilizerCode rep3 = repetition_code(3);
  const auto one_bit = secret_sharing(classify(rep3, QubitSubset(3, {0})));
  EXPECT_EQ(one_bit.classical_bits, 1u);
  EXPECT_FALSE(one_bit.quantum_sharable);
  EXPECT_TRUE(one_bit.classical_possible);

  const StabilizerCode toric = toric_code(3);
  const auto two_bits = secret_sharing(classify(toric, toric_regions(3).qx.subset));
  EXPECT_EQ(two_bits.classical_bits, 2u);
  EXPECT_FALSE(two_bits.quantum_sharable);

  const auto none = secret_sharing(classify(bell_state(), QubitSubset(2, {0})));
  EXPECT_EQ(none.classical_bits, 0u);
  EXPECT_FALSE(none.quantum_sharable);
  EXPECT_FALSE(none.classical_possible);
}

TEST(SingletonCheck, Examples) {
  EXPECT_TRUE(singleton_check(five_qubit_code(), 3));  // tight: 1 = 5 - 4
  EXPECT_TRUE(singleton_check(repetition_code(3), 1));
  GeneratorList gens(4);
  gens.add(P("ZZII"));
  gens.add(P("IZZI"));
  gens.add(P("IIZZ"));
  const StabilizerCode rep4(4, std::move(gens));  // N=4, k=1
  EXPECT_FALSE(singleton_check(rep4, 3));
  EXPECT_THROW(singleton_check(rep4, 0), ParameterError);
}

TEST(QuantumSharing, NoWitnessOnSmallFixtures) {
  std::mt19937_64 rng(97);
  std::vector<StabilizerCode> fixtures;
  fixtures.push_back(repetition_code(3));
  fixtures.push_back(repetition_code(5));
  fixtures.push_back(five_qubit_code());
  fixtures.push_back(bell_state());
  for (const auto& code : fixtures) {
    for (int trial = 0; trial < 4; ++trial) {
      const QubitSubset a = random_subset(code.num_qubits(), rng);
      EXPECT_FALSE(oracle::quantum_sharing_witness_exists(code, a));
    }
  }
}

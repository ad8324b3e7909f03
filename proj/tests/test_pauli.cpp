#include <random>
#include <set>

#include "gtest/gtest.h"
#include "stabcut/codes.hpp"
#include "stabcut/pauli.hpp"

using namespace stabcut;

namespace {

PauliOperator P(const std::string& s) { return PauliOperator::from_string(s); }

// Exhaustive span of a generator list, encoded as (x|z) words; only usable
// for small registers.
std::set<std::uint64_t> exhaustive_span(const GeneratorList& gens) {
  const std::size_t n = gens.num_qubits();
  auto encode = [n](const PauliOperator& p) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.x().get(i)) word |= std::uint64_t{1} << (2 * i);
      if (p.z().get(i)) word |= std::uint64_t{1} << (2 * i + 1);
    }
    return word;
  };
  std::set<std::uint64_t> span;
  const std::size_t m = gens.size();
  EXPECT_LE(m, 20u);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    PauliOperator acc(n);
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1u) acc = multiply(acc, gens[j]);
    }
    span.insert(encode(acc));
  }
  return span;
}

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1u) p.x().set(i);
    if (rng() & 1u) p.z().set(i);
  }
  return p;
}

}  // namespace

TEST(PauliString, RoundTripAndRejects) {
  EXPECT_EQ(P("XIZZY").str(), "XIZZY");
  EXPECT_EQ(P("I").str(), "I");
  EXPECT_THROW(P("XQ"), ParameterError);
  EXPECT_THROW(P("xizz"), ParameterError);
}

TEST(Commutes, SingleQubitAndTwoQubit) {
  EXPECT_FALSE(commutes(P("X"), P("Z")));
  EXPECT_TRUE(commutes(P("XX"), P("ZZ")));
  EXPECT_THROW(commutes(P("X"), P("XX")), DimensionError);
}

TEST(Commutes, SymmetricSelfAndIdentity) {
  std::mt19937_64 rng(3);
  const PauliOperator id = PauliOperator::identity(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_pauli(6, rng), q = random_pauli(6, rng);
    EXPECT_EQ(commutes(p, q), commutes(q, p));
    EXPECT_TRUE(commutes(p, p));
    EXPECT_TRUE(commutes(p, id));
  }
}

TEST(Commutes, ToricStarsAndPlaquettesCommute) {
  const StabilizerCode code = toric_code(3);
  for (std::size_t i = 0; i < code.generators().size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators().size(); ++j) {
      EXPECT_TRUE(commutes(code.generators()[i], code.generators()[j]));
    }
  }
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(P("X"), P("Z")), P("Y"));
  const PauliOperator p = P("XYZIX");
  EXPECT_TRUE(multiply(p, p).is_identity());
  EXPECT_EQ(multiply(P("ZZI"), P("IZZ")), P("ZIZ"));
}

TEST(Multiply, CommutativeAssociativePhaseless) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_pauli(6, rng), b = random_pauli(6, rng),
               c = random_pauli(6, rng);
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(Restrict, Examples) {
  const QubitSubset first(3, {0});
  EXPECT_EQ(restrict_to(P("XXX"), first), P("XII"));
  EXPECT_EQ(restrict_to(P("XYZ"), QubitSubset::full(3)), P("XYZ"));
  EXPECT_EQ(restrict_to(P("XYZ"), QubitSubset::empty(3)), P("III"));
}

TEST(Restrict, SplitsAcrossComplement) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_pauli(8, rng);
    const auto a = random_subset(8, rng);
    EXPECT_EQ(multiply(restrict_to(p, a), restrict_to(p, a.complement())), p);
  }
}

TEST(Restrict, SymplecticProductSplits) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_pauli(7, rng), q = random_pauli(7, rng);
    const auto a = random_subset(7, rng);
    const bool full = commutes(p, q);
    const bool on_a = commutes(restrict_to(p, a), restrict_to(q, a));
    const bool on_b =
        commutes(restrict_to(p, a.complement()), restrict_to(q, a.complement()));
    // symplectic product over the full register = sum mod 2 over the parts
    EXPECT_EQ(!full, (!on_a) ^ (!on_b));
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(PauliOperator::identity(4).weight(), 0u);
  EXPECT_EQ(PauliOperator::single(5, 2, 'Y').weight(), 1u);
  const StabilizerCode code = toric_code(3);
  EXPECT_EQ(code.generators()[0].weight(), 4u);
}

TEST(Reduce, DependentTriple) {
  GeneratorList gens(2);
  gens.add(P("XX"));
  gens.add(P("ZZ"));
  gens.add(P("YY"));
  const GeneratorList basis = reduce(gens);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], P("XX"));
  EXPECT_EQ(basis[1], P("ZZ"));
}

TEST(Reduce, EmptyAndToricRank) {
  EXPECT_EQ(reduce(GeneratorList(3)).size(), 0u);
  const StabilizerCode code = toric_code(3);
  EXPECT_EQ(reduce(code.generators()).size(), code.num_qubits() - 2);
}

TEST(Reduce, RankIndependentOfOrder) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PauliOperator> ops;
    for (int i = 0; i < 9; ++i) ops.push_back(random_pauli(5, rng));
    GeneratorList forward(5, ops);
    std::shuffle(ops.begin(), ops.end(), rng);
    GeneratorList shuffled(5, ops);
    EXPECT_EQ(reduce(forward).size(), reduce(shuffled).size());
  }
}

TEST(InGroup, Examples) {
  GeneratorList gens(3);
  gens.add(P("ZZI"));
  gens.add(P("IZZ"));
  const auto combo = in_group(P("ZIZ"), gens);
  ASSERT_TRUE(combo.has_value());
  EXPECT_EQ(combo->indices(), (std::vector<std::size_t>{0, 1}));

  GeneratorList zz(2);
  zz.add(P("ZZ"));
  EXPECT_FALSE(in_group(P("XI"), zz).has_value());
}

TEST(InGroup, MatchesExhaustiveSpan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    GeneratorList gens(4);
    for (int i = 0; i < 5; ++i) gens.add(random_pauli(4, rng));
    const auto span = exhaustive_span(gens);
    for (int probe = 0; probe < 40; ++probe) {
      const auto p = random_pauli(4, rng);
      std::uint64_t word = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        if (p.x().get(i)) word |= std::uint64_t{1} << (2 * i);
        if (p.z().get(i)) word |= std::uint64_t{1} << (2 * i + 1);
      }
      const auto combo = in_group(p, gens);
      EXPECT_EQ(combo.has_value(), span.count(word) > 0);
      if (combo) {
        EXPECT_EQ(product(gens, *combo), p);
      }
    }
  }
}

TEST(InGroup, TranslatedToricLoopLiesInPlaquetteSpan) {
  // The product of a horizontal Z loop and its one-row translate closes a
  // band of plaquettes.
  const std::size_t L = 3;
  const ToricLayout lat{L};
  const StabilizerCode code = toric_code(L);
  PauliOperator band(lat.num_qubits());
  for (std::size_t c = 0; c < L; ++c) {
    band.z().flip(lat.horizontal(0, c));
    band.z().flip(lat.horizontal(1, c));
  }
  GeneratorList plaquettes(lat.num_qubits());
  for (std::size_t i = L * L; i < 2 * L * L; ++i) {
    plaquettes.add(code.generators()[i]);
  }
  EXPECT_TRUE(in_group(band, plaquettes).has_value());
}

TEST(QubitSubset, Validation) {
  EXPECT_THROW(QubitSubset(3, {3}), ParameterError);
  EXPECT_THROW(QubitSubset(3, {1, 1}), ParameterError);
  const QubitSubset s(5, {4, 0, 2});
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(s.complement().members(), (std::vector<std::size_t>{1, 3}));
}

TEST(Gf2, KernelsAndRank) {
  // rows over 3 columns: {110, 011, 101} has rank 2 and left kernel {111}
  std::vector<BitVec> rows(3, BitVec(3));
  rows[0].set(0);
  rows[0].set(1);
  rows[1].set(1);
  rows[1].set(2);
  rows[2].set(0);
  rows[2].set(2);
  EXPECT_EQ(gf2::rank(rows), 2u);
  const auto left = gf2::left_kernel(rows);
  ASSERT_EQ(left.size(), 1u);
  EXPECT_EQ(left[0].count(), 3u);
  const auto right = gf2::right_kernel(rows, 3);
  ASSERT_EQ(right.size(), 1u);
  for (const auto& row : rows) EXPECT_FALSE(row.parity_and(right[0]));
}

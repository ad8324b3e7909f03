#include <sstream>

#include "gtest/gtest.h"
#include "stabcut/codes.hpp"
#include "stabcut/io.hpp"

using namespace stabcut;

TEST(CodeFile, ParseRenderRoundTrip) {
  const StabilizerCode code = toric_code(2);
  const std::string text = io::render_code_file(code.generators(), "toric L=2");
  std::istringstream in(text);
  const io::CodeFile file = io::parse_code_file(in);
  EXPECT_EQ(file.n, 8u);
  ASSERT_EQ(file.stabilizers.size(), 8u);
  ASSERT_TRUE(file.toric_L.has_value());
  EXPECT_EQ(*file.toric_L, 2u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(file.stabilizers[i], code.generators()[i]);
  }
  const StabilizerCode parsed = file.to_code();
  EXPECT_EQ(parsed.num_logical_qubits(), 2u);
}

TEST(CodeFile, ParseErrors) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::parse_code_file(in);
  };
  EXPECT_THROW(parse(""), ParameterError);
  EXPECT_THROW(parse("stab ZZ\n"), ParameterError);
  EXPECT_THROW(parse("qubits 0\n"), ParameterError);
  EXPECT_THROW(parse("qubits 2\n"), ParameterError);           // no stabilizers
  EXPECT_THROW(parse("qubits 2\nstab ZZZ\n"), ParameterError); // wrong length
  EXPECT_THROW(parse("qubits 2\nstab ZQ\n"), ParameterError);  // bad letter
  EXPECT_THROW(parse("qubits 2\nfoo ZZ\n"), ParameterError);
  // non-commuting generators surface when building the code
  const io::CodeFile bad = parse("qubits 2\nstab XI\nstab ZI\n");
  EXPECT_THROW(bad.to_code(), ParameterError);
}

TEST(CodeFile, CommentsAndBlankLines) {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "qubits 3\n"
      "# another\n"
      "stab ZZI\n"
      "stab IZZ\n");
  const io::CodeFile file = io::parse_code_file(in);
  EXPECT_EQ(file.n, 3u);
  EXPECT_EQ(file.stabilizers.size(), 2u);
  EXPECT_FALSE(file.toric_L.has_value());
}

TEST(RegionSpec, InlineIndices) {
  std::istringstream in("qubits 5\nstab ZZIII\n");
  const io::CodeFile file = io::parse_code_file(in);
  const QubitSubset region = io::parse_region("0, 2,4", file);
  EXPECT_EQ(region.members(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_THROW(io::parse_region("5", file), ParameterError);
  EXPECT_THROW(io::parse_region("x", file), ParameterError);
  EXPECT_THROW(io::parse_region("1,1", file), ParameterError);
}

TEST(RegionSpec, NamedToricRegionsNeedTheHeader) {
  std::istringstream plain("qubits 8\nstab XXIIXXII\n");
  const io::CodeFile no_header = io::parse_code_file(plain);
  EXPECT_THROW(io::parse_region("toric:Qx", no_header), ParameterError);

  const std::string text =
      io::render_code_file(toric_code(2).generators(), "toric L=2");
  std::istringstream tagged(text);
  const io::CodeFile file = io::parse_code_file(tagged);
  EXPECT_EQ(io::parse_region("toric:Qx", file).size(), 4u);
  EXPECT_EQ(io::parse_region("toric:Qy", file).size(), 4u);
  EXPECT_EQ(io::parse_region("toric:R1", file).size(), 6u);
  EXPECT_EQ(io::parse_region("toric:rect:1x1", file).size(), 2u);
  EXPECT_THROW(io::parse_region("toric:rect:2x2", file), ParameterError);
  EXPECT_THROW(io::parse_region("toric:rect:1", file), ParameterError);
  EXPECT_THROW(io::parse_region("toric:Zx", file), ParameterError);
}

TEST(Reports, JsonIsSchemaStableAndDeterministic) {
  const StabilizerCode code = repetition_code(3);
  const QubitSubset a(3, {0});
  const auto report = classify(code, a);
  const auto dec = decompose(code, a);
  const std::string once = io::classification_json(report, a, dec);
  const std::string twice =
      io::classification_json(classify(code, a), a, decompose(code, a));
  EXPECT_EQ(once, twice);

  for (const char* key :
       {"\"code\"", "\"region\"", "\"counts\"", "\"decomposition\"",
        "\"operators\"", "\"qubitTypes\"", "\"checks\"", "\"secretSharing\"",
        "\"mA\"", "\"mB\"", "\"mAB\"", "\"mPhi\"", "\"gA\"", "\"gB\"",
        "\"mabPairs\"", "\"rPairs\"", "\"deltas\"", "\"alphaPairs\"",
        "\"betaPairs\""}) {
    EXPECT_NE(once.find(key), std::string::npos) << key;
  }
  // operator strings round-trip through the parser
  EXPECT_NE(once.find("\"ZII\""), std::string::npos);
  EXPECT_NE(once.find("\"XXX\""), std::string::npos);
}

TEST(Reports, TextMentionsTheCounts) {
  const StabilizerCode code = repetition_code(3);
  const QubitSubset a(3, {0});
  const std::string text =
      io::classification_text(classify(code, a), a, decompose(code, a));
  EXPECT_NE(text.find("gA=1"), std::string::npos);
  EXPECT_NE(text.find("mAB=1"), std::string::npos);
  EXPECT_NE(text.find("NONLOCAL"), std::string::npos);
}

// Command-line front end: generate reference codes, classify logical
// operators over a bipartition, report entanglement-entropy bounds, verify
// the count identities, and compute brute-force distances.
//
// Exit codes: 0 success, 1 property-check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "stabcut/codes.hpp"
#include "stabcut/io.hpp"
#include "stabcut/oracle.hpp"

namespace {

using namespace stabcut;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

io::CodeFile load_code_file(const std::string& path) {
  if (path == "-") return io::parse_code_file(std::cin);
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open code file: " + path);
  return io::parse_code_file(in);
}

struct BudgetOptions {
  std::size_t max_subset = 8;
  std::size_t max_statevector = 12;
  std::size_t max_distance_weight = static_cast<std::size_t>(-1);

  oracle::OracleBudget to_budget() const {
    return oracle::OracleBudget{max_subset, max_statevector, max_distance_weight};
  }
};

void add_budget_flags(CLI::App* cmd, BudgetOptions& opts) {
  cmd->add_option("--max-subset-qubits", opts.max_subset,
                  "enumeration budget for brute-force subset checks");
  cmd->add_option("--max-statevector-qubits", opts.max_statevector,
                  "qubit budget for dense statevector checks");
  cmd->add_option("--max-distance-weight", opts.max_distance_weight,
                  "largest operator weight tried by the distance search");
}

int run_gen(const std::string& kind, std::size_t L, std::size_t n) {
  if (kind == "toric") {
    const StabilizerCode code = toric_code(L);
    std::cout << io::render_code_file(code.generators(),
                                      "toric L=" + std::to_string(L));
  } else if (kind == "repetition") {
    const StabilizerCode code = repetition_code(n);
    std::cout << io::render_code_file(code.generators(),
                                      "repetition n=" + std::to_string(n));
  } else if (kind == "five_qubit") {
    std::cout << io::render_code_file(five_qubit_code().generators(),
                                      "five_qubit");
  } else {
    throw ParameterError("unknown code kind: " + kind);
  }
  return kExitOk;
}

int run_classify(const std::string& code_path, const std::string& region_spec,
                 const std::string& format) {
  const io::CodeFile file = load_code_file(code_path);
  const StabilizerCode code = file.to_code();
  const QubitSubset region = io::parse_region(region_spec, file);
  const ClassificationReport report = classify(code, region);
  const BoundaryDecomposition dec = decompose(code, region);
  if (format == "json") {
    std::cout << io::classification_json(report, region, dec);
  } else {
    std::cout << io::classification_text(report, region, dec);
  }
  return kExitOk;
}

int run_entropy(const std::string& code_path, const std::string& region_spec,
                const std::vector<std::string>& fixed_strings,
                const std::string& format) {
  const io::CodeFile file = load_code_file(code_path);
  const StabilizerCode code = file.to_code();
  const QubitSubset region = io::parse_region(region_spec, file);
  const EntropyBounds bounds = entropy_bounds(code, region);

  std::optional<double> state_entropy;
  if (!fixed_strings.empty()) {
    GeneratorList fixed(code.num_qubits());
    for (const auto& s : fixed_strings) {
      if (s.size() != code.num_qubits()) {
        throw SpecificationError("fixed logical has length " +
                                 std::to_string(s.size()) + ", expected " +
                                 std::to_string(code.num_qubits()));
      }
      fixed.add(PauliOperator::from_string(s));
    }
    state_entropy = entropy_of_state(GroundStateSpec{code, fixed}, region);
  }
  if (format == "json") {
    std::cout << io::entropy_json(bounds, state_entropy);
  } else {
    std::cout << io::entropy_text(bounds, state_entropy);
  }
  return kExitOk;
}

// One verify pass: the count identities plus in-budget oracle agreement.
std::vector<std::string> verify_one(const StabilizerCode& code,
                                    const QubitSubset& region,
                                    const oracle::OracleBudget& budget) {
  std::vector<std::string> failures;
  ClassificationReport report;
  try {
    report = classify(code, region);
  } catch (const InvariantError& e) {
    failures.push_back(std::string("internal invariant: ") + e.what());
    return failures;
  }
  if (report.g_a + report.g_b != 2 * report.k) {
    failures.push_back("duality: g_A + g_B != 2k");
  }
  if (report.m_ab != report.m_phi) {
    failures.push_back("counts: m_AB != m_phi");
  }
  const BoundaryDecomposition dec = decompose(code, region);
  if (dec.g_sa + dec.g_sb + dec.g_sab != code.num_stabilizer_generators()) {
    failures.push_back("decomposition: G(S_A)+G(S_B)+G(S_AB) != G(S)");
  }
  if (region.size() <= budget.max_subset_qubits) {
    const std::size_t brute = oracle::brute_localized_count(code, region, budget);
    if (brute != report.g_a) {
      failures.push_back("oracle: brute localized count " + std::to_string(brute) +
                         " != g_A " + std::to_string(report.g_a));
    }
  }
  return failures;
}

int run_verify(const std::string& code_path, const std::string& region_spec,
               std::size_t sweep, std::uint64_t seed,
               const BudgetOptions& budget_opts) {
  const io::CodeFile file = load_code_file(code_path);
  const StabilizerCode code = file.to_code();
  const oracle::OracleBudget budget = budget_opts.to_budget();

  std::vector<QubitSubset> regions;
  if (sweep > 0) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sweep; ++i) {
      regions.push_back(random_subset(code.num_qubits(), rng));
    }
  } else {
    if (region_spec.empty()) {
      throw ParameterError("verify needs --region or --sweep");
    }
    regions.push_back(io::parse_region(region_spec, file));
  }

  // Results are buffered per region and emitted in input order, so the
  // output is deterministic however the sweep is scheduled.
  std::vector<std::vector<std::string>> failures(regions.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(regions.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    failures[i] = verify_one(code, regions[i], budget);
  }

  bool all_ok = true;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (failures[i].empty()) {
      std::cout << "ok region[" << i << "] size=" << regions[i].size() << "\n";
    } else {
      all_ok = false;
      for (const auto& f : failures[i]) {
        std::cout << "FAIL region[" << i << "]: " << f << "\n";
      }
    }
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

int run_distance(const std::string& code_path, const BudgetOptions& budget_opts) {
  const io::CodeFile file = load_code_file(code_path);
  const StabilizerCode code = file.to_code();
  const std::size_t d = oracle::brute_distance(code, budget_opts.to_budget());
  const bool bound = singleton_check(code, d);
  const bool tight =
      code.num_logical_qubits() + 2 * (d - 1) == code.num_qubits();
  std::cout << "distance: " << d << "\n";
  std::cout << "singleton: " << (bound ? (tight ? "tight" : "holds") : "VIOLATED")
            << "\n";
  return bound ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical-operator locality analysis for stabilizer codes"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a reference code file");
  std::string gen_kind;
  std::size_t gen_L = 0, gen_n = 0;
  gen->add_option("kind", gen_kind, "toric | repetition | five_qubit")->required();
  gen->add_option("--L", gen_L, "lattice side (toric)");
  gen->add_option("--n", gen_n, "chain length (repetition)");

  // shared options
  std::string code_path = "-", region_spec, format = "text";
  std::vector<std::string> fixed_strings;
  std::size_t sweep = 0;
  std::uint64_t seed = 1;
  BudgetOptions budget;

  auto* cls = app.add_subcommand("classify", "classify logical operators");
  cls->add_option("--code", code_path, "code file, or - for stdin")->required();
  cls->add_option("--region", region_spec, "subset of qubits")->required();
  cls->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ent = app.add_subcommand("entropy", "entanglement-entropy bounds");
  ent->add_option("--code", code_path, "code file, or - for stdin")->required();
  ent->add_option("--region", region_spec, "subset of qubits")->required();
  ent->add_option("--fix", fixed_strings,
                  "fixed logical (Pauli string; repeatable, k needed for the "
                  "exact state entropy)");
  ent->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "check the count identities");
  ver->add_option("--code", code_path, "code file, or - for stdin")->required();
  ver->add_option("--region", region_spec, "subset of qubits");
  ver->add_option("--sweep", sweep, "verify this many random regions instead");
  ver->add_option("--seed", seed, "sweep RNG seed");
  add_budget_flags(ver, budget);

  auto* dist = app.add_subcommand("distance", "brute-force code distance");
  dist->add_option("--code", code_path, "code file, or - for stdin")->required();
  add_budget_flags(dist, budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (gen->parsed()) return run_gen(gen_kind, gen_L, gen_n);
    if (cls->parsed()) return run_classify(code_path, region_spec, format);
    if (ent->parsed()) return run_entropy(code_path, region_spec, fixed_strings, format);
    if (ver->parsed()) return run_verify(code_path, region_spec, sweep, seed, budget);
    if (dist->parsed()) return run_distance(code_path, budget);
  } catch (const InvariantError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

#include "stabcut/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "stabcut/codes.hpp"

namespace stabcut::io {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

const char* type_name(QubitType t) {
  switch (t) {
    case QubitType::LOCAL_A:
      return "LOCAL_A";
    case QubitType::LOCAL_B:
      return "LOCAL_B";
    default:
      return "NONLOCAL";
  }
}

ordered_json pair_list(
    const std::vector<std::pair<PauliOperator, PauliOperator>>& pairs,
    const char* first_key, const char* second_key) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b] : pairs) {
    out.push_back({{first_key, a.str()}, {second_key, b.str()}});
  }
  return out;
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
  CodeFile file;
  std::string line;
  bool saw_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      std::istringstream comment(stripped.substr(1));
      std::string tag, kind, lfield;
      comment >> tag >> kind >> lfield;
      if (tag == "generated-by:" && kind == "toric" && lfield.rfind("L=", 0) == 0) {
        file.toric_L = std::stoul(lfield.substr(2));
      }
      continue;
    }
    std::istringstream words(stripped);
    std::string keyword;
    words >> keyword;
    if (!saw_header) {
      if (keyword != "qubits") {
        throw ParameterError("line " + std::to_string(lineno) +
                             ": expected 'qubits <N>'");
      }
      long long n = -1;
      words >> n;
      if (words.fail() || n <= 0) {
        throw ParameterError("line " + std::to_string(lineno) +
                             ": invalid qubit count");
      }
      file.n = static_cast<std::size_t>(n);
      file.stabilizers = GeneratorList(file.n);
      saw_header = true;
      continue;
    }
    if (keyword != "stab") {
      throw ParameterError("line " + std::to_string(lineno) +
                           ": expected 'stab <pauli-string>'");
    }
    std::string pauli;
    words >> pauli;
    if (pauli.size() != file.n) {
      throw ParameterError("line " + std::to_string(lineno) + ": string length " +
                           std::to_string(pauli.size()) + " != qubits " +
                           std::to_string(file.n));
    }
    file.stabilizers.add(PauliOperator::from_string(pauli));
  }
  if (!saw_header) throw ParameterError("missing 'qubits <N>' line");
  if (file.stabilizers.empty()) {
    throw ParameterError("code file holds no stabilizer lines");
  }
  return file;
}

std::string render_code_file(const GeneratorList& stabilizers,
                             const std::string& generated_by) {
  std::ostringstream out;
  if (!generated_by.empty()) out << "# generated-by: " << generated_by << "\n";
  out << "qubits " << stabilizers.num_qubits() << "\n";
  for (const auto& g : stabilizers) out << "stab " << g.str() << "\n";
  return out.str();
}

QubitSubset parse_region(const std::string& raw, const CodeFile& file) {
  const std::string spec = trim(raw);
  if (spec.empty()) throw ParameterError("empty region spec");

  if (spec.rfind("toric:", 0) == 0) {
    if (!file.toric_L) {
      throw ParameterError("named toric regions need a generated toric code file");
    }
    const std::size_t L = *file.toric_L;
    const std::string name = spec.substr(6);
    if (name == "Qx") return toric_regions(L).qx.subset;
    if (name == "Qy") return toric_regions(L).qy.subset;
    if (name == "R1") return toric_regions(L).r1.subset;
    if (name.rfind("rect:", 0) == 0) {
      const std::string dims = name.substr(5);
      const auto sep = dims.find('x');
      if (sep == std::string::npos) {
        throw ParameterError("rectangle spec must look like toric:rect:<nx>x<ny>");
      }
      std::size_t nx = 0, ny = 0;
      try {
        nx = std::stoul(dims.substr(0, sep));
        ny = std::stoul(dims.substr(sep + 1));
      } catch (const std::exception&) {
        throw ParameterError("invalid rectangle dimensions: " + dims);
      }
      return toric_rectangle(L, nx, ny).subset;
    }
    throw ParameterError("unknown toric region: " + name);
  }

  std::vector<std::string> tokens;
  if (spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParameterError("cannot open region file: " + spec.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (!t.empty() && t.front() != '#') tokens.push_back(t);
    }
  } else {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) tokens.push_back(trim(tok));
  }

  std::vector<std::size_t> members;
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      throw ParameterError("invalid region index: " + tok);
    }
    if (pos != tok.size()) throw ParameterError("invalid region index: " + tok);
    members.push_back(static_cast<std::size_t>(value));
  }
  return QubitSubset(file.n, std::move(members));
}

std::string classification_json(const ClassificationReport& report,
                                const QubitSubset& region,
                                const BoundaryDecomposition& decomposition) {
  ordered_json j;
  j["code"] = {{"n", report.n}, {"k", report.k}};
  j["region"] = {{"size", region.size()}, {"qubits", region.members()}};
  j["counts"] = {{"k", report.k},     {"mA", report.m_a},   {"mB", report.m_b},
                 {"mAB", report.m_ab}, {"mPhi", report.m_phi},
                 {"gA", report.g_a},  {"gB", report.g_b}};
  j["decomposition"] = {{"gSA", decomposition.g_sa},
                        {"gSB", decomposition.g_sb},
                        {"gSAB", decomposition.g_sab}};

  ordered_json ops;
  ops["mabPairs"] = pair_list(report.mab_pairs, "inA", "inB");
  ops["rPairs"] = pair_list(report.r_pairs, "inA", "inB");
  ordered_json deltas = ordered_json::array();
  for (const auto& d : report.deltas) deltas.push_back(d.str());
  ops["deltas"] = deltas;
  ops["alphaPairs"] = pair_list(report.alpha_pairs, "first", "second");
  ops["betaPairs"] = pair_list(report.beta_pairs, "first", "second");
  j["operators"] = ops;

  ordered_json types = ordered_json::array();
  for (auto t : report.qubit_types) types.push_back(type_name(t));
  j["qubitTypes"] = types;

  j["checks"] = {
      {"countDuality", report.g_a + report.g_b == 2 * report.k},
      {"mabEqualsMphi", report.m_ab == report.m_phi},
      {"decompositionCounts",
       decomposition.g_sa + decomposition.g_sb + decomposition.g_sab ==
           report.n - report.k}};

  const SecretSharingSummary ss = secret_sharing(report);
  j["secretSharing"] = {{"classicalBits", ss.classical_bits},
                        {"quantumSharable", ss.quantum_sharable},
                        {"classicalPossible", ss.classical_possible}};
  return j.dump(2) + "\n";
}

std::string classification_text(const ClassificationReport& report,
                                const QubitSubset& region,
                                const BoundaryDecomposition& decomposition) {
  std::ostringstream out;
  out << "code: n=" << report.n << " k=" << report.k << "\n";
  out << "region A (" << region.size() << " qubits):";
  for (auto q : region.members()) out << " " << q;
  out << "\n";
  out << "counts: gA=" << report.g_a << " gB=" << report.g_b
      << " mA=" << report.m_a << " mB=" << report.m_b << " mAB=" << report.m_ab
      << " mPhi=" << report.m_phi << "\n";
  out << "stabilizer split: G(S_A)=" << decomposition.g_sa
      << " G(S_B)=" << decomposition.g_sb << " G(S_AB)=" << decomposition.g_sab
      << "\n";
  out << "qubit types:";
  for (auto t : report.qubit_types) out << " " << type_name(t);
  out << "\n";
  for (std::size_t i = 0; i < report.mab_pairs.size(); ++i) {
    out << "shared l_" << i + 1 << ":  A " << report.mab_pairs[i].first.str()
        << "  B " << report.mab_pairs[i].second.str() << "\n";
  }
  for (std::size_t i = 0; i < report.r_pairs.size(); ++i) {
    out << "partner r_" << i + 1 << ": A " << report.r_pairs[i].first.str()
        << "  B " << report.r_pairs[i].second.str() << "\n";
  }
  for (std::size_t i = 0; i < report.deltas.size(); ++i) {
    out << "nonlocal delta_" << i + 1 << ": " << report.deltas[i].str() << "\n";
  }
  for (std::size_t i = 0; i < report.alpha_pairs.size(); ++i) {
    out << "alpha pair " << i + 1 << ": " << report.alpha_pairs[i].first.str()
        << " , " << report.alpha_pairs[i].second.str() << "\n";
  }
  for (std::size_t i = 0; i < report.beta_pairs.size(); ++i) {
    out << "beta pair " << i + 1 << ": " << report.beta_pairs[i].first.str()
        << " , " << report.beta_pairs[i].second.str() << "\n";
  }
  const SecretSharingSummary ss = secret_sharing(report);
  out << "secret sharing: " << ss.classical_bits
      << " classical bit(s); quantum sharing impossible\n";
  return out.str();
}

std::string entropy_json(const EntropyBounds& bounds,
                         std::optional<double> state_entropy) {
  ordered_json j;
  j["eMin"] = bounds.e_min;
  j["eMax"] = bounds.e_max;
  j["gSAB"] = bounds.g_sab;
  j["mPhi"] = bounds.m_phi;
  if (state_entropy) {
    j["stateEntropy"] = *state_entropy;
  } else {
    j["stateEntropy"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string entropy_text(const EntropyBounds& bounds,
                         std::optional<double> state_entropy) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);  // bounds are exact half-integers
  out << "entropy bounds (bits): " << bounds.e_min << " .. " << bounds.e_max
      << "  [G(S_AB)=" << bounds.g_sab << ", mPhi=" << bounds.m_phi << "]\n";
  if (state_entropy) {
    out << "state entropy (bits): " << *state_entropy << "\n";
  }
  return out.str();
}

}  // namespace stabcut::io

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stabcut/bipartition.hpp"
#include "stabcut/classify.hpp"
#include "stabcut/entropy.hpp"

namespace stabcut::io {

// Text code file. Line 1: "qubits <N>"; each following non-comment line:
// "stab <pauli-string>" of length N over {I,X,Y,Z}. '#' begins a comment.
// Files emitted by the toric generator carry a "# generated-by: toric L=<L>"
// comment, which unlocks the named toric region specs.
struct CodeFile {
  std::size_t n = 0;
  GeneratorList stabilizers;
  std::optional<std::size_t> toric_L;

  StabilizerCode to_code() const { return StabilizerCode(n, stabilizers); }
};

CodeFile parse_code_file(std::istream& in);

std::string render_code_file(const GeneratorList& stabilizers,
                             const std::string& generated_by = "");

// Region specs: inline comma-separated indices ("0,1,5"), "@file" with one
// index per line, or a named toric region ("toric:Qx", "toric:Qy",
// "toric:R1", "toric:rect:<nx>x<ny>"; generated toric files only).
QubitSubset parse_region(const std::string& spec, const CodeFile& file);

// Machine-readable report: stable keys and structure for every input,
// operators as Pauli strings. Deterministic given deterministic inputs.
std::string classification_json(const ClassificationReport& report,
                                const QubitSubset& region,
                                const BoundaryDecomposition& decomposition);

std::string classification_text(const ClassificationReport& report,
                                const QubitSubset& region,
                                const BoundaryDecomposition& decomposition);

std::string entropy_json(const EntropyBounds& bounds,
                         std::optional<double> state_entropy);

std::string entropy_text(const EntropyBounds& bounds,
                         std::optional<double> state_entropy);

}  // namespace stabcut::io

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabcut/bitvec.hpp"
#include "stabcut/errors.hpp"

namespace stabcut {

// Phaseless N-qubit Pauli operator: a pair of length-N binary vectors.
// Qubit i carries I/X/Z/Y exactly when (x_i, z_i) = (0,0)/(1,0)/(0,1)/(1,1).
// Elements of the Pauli group modulo <iI>; no sign is ever tracked.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVec x, BitVec z);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator single(std::size_t n, std::size_t qubit, char letter);

  // Text form: one character per qubit from {I,X,Y,Z}, qubit 0 leftmost.
  static PauliOperator from_string(std::string_view s);
  std::string str() const;

  std::size_t num_qubits() const { return x_.size(); }
  bool is_identity() const { return x_.none() && z_.none(); }
  std::size_t weight() const;

  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  BitVec& x() { return x_; }
  BitVec& z() { return z_; }

  bool operator==(const PauliOperator&) const = default;

 private:
  BitVec x_, z_;
};

// Sorted, duplicate-free set of qubit indices inside an ambient register.
class QubitSubset {
 public:
  QubitSubset() = default;
  // Indices may arrive in any order; duplicates and out-of-range are rejected.
  QubitSubset(std::size_t n, std::vector<std::size_t> members);

  static QubitSubset empty(std::size_t n) { return QubitSubset(n, {}); }
  static QubitSubset full(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }
  const BitVec& mask() const { return mask_; }
  bool contains(std::size_t q) const { return mask_.get(q); }
  QubitSubset complement() const;

  bool operator==(const QubitSubset&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> members_;
  BitVec mask_;
};

// Ordered list of Pauli operators on a shared register. The identity is
// never stored; adding it is a no-op.
class GeneratorList {
 public:
  GeneratorList() = default;
  explicit GeneratorList(std::size_t n) : n_(n) {}
  GeneratorList(std::size_t n, const std::vector<PauliOperator>& ops);

  void add(const PauliOperator& op);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  const PauliOperator& operator[](std::size_t i) const { return ops_[i]; }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }
  const std::vector<PauliOperator>& ops() const { return ops_; }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> ops_;
};

// True iff pq = qp, i.e. the binary symplectic product
// x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Group product modulo phase: componentwise XOR of the x and z parts.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return multiply(p, q);
}

// Keeps p's letters on qubits in `subset`, identity elsewhere. The result
// stays in the full ambient register.
PauliOperator restrict_to(const PauliOperator& p, const QubitSubset& subset);

inline std::size_t weight(const PauliOperator& p) { return p.weight(); }

// Product of the generators selected by `combo` (a bit vector over `gens`).
PauliOperator product(const GeneratorList& gens, const BitVec& combo);

// GF(2) Gaussian elimination over the interleaved (x|z) row representation
// of Pauli operators. Columns are ordered x_0, z_0, x_1, z_1, ...
BitVec to_row(const PauliOperator& p);
PauliOperator from_row(const BitVec& row);

// Independent basis of the subgroup generated by `gens`: the subsequence of
// generators that add a new pivot when eliminated in input order. Output is
// deterministic given the input order.
GeneratorList reduce(const GeneratorList& gens);

// Solves p = prod_{j in R} gens[j] modulo phase. Returns the index set R as
// a bit vector over `gens` when p lies in the span, absent otherwise. The
// solution is unique when `gens` is independent.
std::optional<BitVec> in_group(const PauliOperator& p, const GeneratorList& gens);

namespace gf2 {

// All rows must share one length. Deterministic elimination: rows are
// consumed in order and pivots prefer lower column indices.
std::size_t rank(const std::vector<BitVec>& rows);

// Basis of {c : sum_{j in c} rows[j] = 0}, each vector indexed over rows.
std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows);

// Basis of {v : rows[j] . v = 0 for all j} over `ncols` columns.
std::vector<BitVec> right_kernel(const std::vector<BitVec>& rows, std::size_t ncols);

// Combination c over rows with sum_{j in c} rows[j] = target, if any.
std::optional<BitVec> express(const BitVec& target, const std::vector<BitVec>& rows);

// Incremental row space: rows reduce against pivots keyed by leading column.
class Echelon {
 public:
  // True when the row carried a new pivot into the space.
  bool insert(BitVec row);
  bool contains(BitVec row) const;
  std::size_t size() const { return pivots_.size(); }

 private:
  std::map<std::size_t, BitVec> pivots_;
};

}  // namespace gf2

}  // namespace stabcut

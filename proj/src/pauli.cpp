#include "stabcut/pauli.hpp"

#include <algorithm>
#include <map>

namespace stabcut {

PauliOperator::PauliOperator(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) {
    throw DimensionError("x and z parts must have equal length");
  }
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
  if (qubit >= n) throw ParameterError("qubit index out of range");
  PauliOperator p(n);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x_.set(qubit);
      break;
    case 'Z':
      p.z_.set(qubit);
      break;
    case 'Y':
      p.x_.set(qubit);
      p.z_.set(qubit);
      break;
    default:
      throw ParameterError(std::string("invalid Pauli letter: ") + letter);
  }
  return p;
}

PauliOperator PauliOperator::from_string(std::string_view s) {
  PauliOperator p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(i);
        break;
      case 'Z':
        p.z_.set(i);
        break;
      case 'Y':
        p.x_.set(i);
        p.z_.set(i);
        break;
      default:
        throw ParameterError(std::string("invalid character in Pauli string: ") + s[i]);
    }
  }
  return p;
}

std::string PauliOperator::str() const {
  std::string out(num_qubits(), 'I');
  for (std::size_t i = 0; i < num_qubits(); ++i) {
    const bool xb = x_.get(i), zb = z_.get(i);
    if (xb && zb) {
      out[i] = 'Y';
    } else if (xb) {
      out[i] = 'X';
    } else if (zb) {
      out[i] = 'Z';
    }
  }
  return out;
}

std::size_t PauliOperator::weight() const {
  BitVec support = x_;
  support ^= z_;
  support ^= x_ & z_;  // support = x OR z
  return support.count();
}

QubitSubset::QubitSubset(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)), mask_(n) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= n_) throw ParameterError("subset index out of range");
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw ParameterError("duplicate index in subset");
    }
    mask_.set(members_[i]);
  }
}

QubitSubset QubitSubset::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return QubitSubset(n, std::move(all));
}

QubitSubset QubitSubset::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(n_ - members_.size());
  for (std::size_t q = 0; q < n_; ++q) {
    if (!mask_.get(q)) rest.push_back(q);
  }
  return QubitSubset(n_, std::move(rest));
}

GeneratorList::GeneratorList(std::size_t n, const std::vector<PauliOperator>& ops)
    : n_(n) {
  for (const auto& op : ops) add(op);
}

void GeneratorList::add(const PauliOperator& op) {
  if (op.num_qubits() != n_) {
    throw DimensionError("generator register size mismatch");
  }
  if (op.is_identity()) return;
  ops_.push_back(op);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("operators act on different register sizes");
  }
  return !(p.x().parity_and(q.z()) ^ p.z().parity_and(q.x()));
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("operators act on different register sizes");
  }
  return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z());
}

PauliOperator restrict_to(const PauliOperator& p, const QubitSubset& subset) {
  if (subset.num_qubits() != p.num_qubits()) {
    throw DimensionError("subset register size mismatch");
  }
  return PauliOperator(p.x() & subset.mask(), p.z() & subset.mask());
}

PauliOperator product(const GeneratorList& gens, const BitVec& combo) {
  if (combo.size() != gens.size()) {
    throw DimensionError("combination length must match generator count");
  }
  PauliOperator out(gens.num_qubits());
  for (auto j : combo.indices()) out = multiply(out, gens[j]);
  return out;
}

BitVec to_row(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVec row(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x().get(i)) row.set(2 * i);
    if (p.z().get(i)) row.set(2 * i + 1);
  }
  return row;
}

PauliOperator from_row(const BitVec& row) {
  const std::size_t n = row.size() / 2;
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (row.get(2 * i)) p.x().set(i);
    if (row.get(2 * i + 1)) p.z().set(i);
  }
  return p;
}

namespace gf2 {
namespace {

// Echelon accumulator keyed by leading column. Rows are inserted in input
// order; each is first reduced against the pivots collected so far. An
// optional companion vector is carried through every XOR, which yields the
// expressing combination for solves and kernel combinations for zero rows.
class TrackingEchelon {
 public:
  // Reduces `row` (and `companion`, when given) in place. Returns false when
  // the row vanished, true when it was installed as a new pivot.
  bool insert(BitVec& row, BitVec* companion) {
    reduce(row, companion);
    auto lead = row.first_set();
    if (lead < 0) return false;
    pivots_.emplace(static_cast<std::size_t>(lead),
                    Entry{row, companion ? *companion : BitVec()});
    return true;
  }

  void reduce(BitVec& row, BitVec* companion) const {
    while (true) {
      auto lead = row.first_set();
      if (lead < 0) return;
      auto it = pivots_.find(static_cast<std::size_t>(lead));
      if (it == pivots_.end()) return;
      row ^= it->second.row;
      if (companion) *companion ^= it->second.companion;
    }
  }

  std::size_t size() const { return pivots_.size(); }

 private:
  struct Entry {
    BitVec row;
    BitVec companion;
  };
  std::map<std::size_t, Entry> pivots_;
};

}  // namespace

std::size_t rank(const std::vector<BitVec>& rows) {
  TrackingEchelon ech;
  for (const auto& r : rows) {
    BitVec row = r;
    ech.insert(row, nullptr);
  }
  return ech.size();
}

std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows) {
  TrackingEchelon ech;
  std::vector<BitVec> combos;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    BitVec row = rows[j];
    BitVec combo = BitVec::unit(rows.size(), j);
    if (!ech.insert(row, &combo)) combos.push_back(combo);
  }
  return combos;
}

std::vector<BitVec> right_kernel(const std::vector<BitVec>& in_rows, std::size_t ncols) {
  // Full row reduction, then one kernel vector per free column.
  std::vector<BitVec> rows = in_rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].get(col)) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivot_cols.push_back(col);
    ++next;
  }

  BitVec is_pivot(ncols);
  for (auto c : pivot_cols) is_pivot.set(c);

  std::vector<BitVec> kernel;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (is_pivot.get(col)) continue;
    BitVec v(ncols);
    v.set(col);
    for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
      if (rows[t].get(col)) v.set(pivot_cols[t]);
    }
    kernel.push_back(v);
  }
  return kernel;
}

std::optional<BitVec> express(const BitVec& target, const std::vector<BitVec>& rows) {
  TrackingEchelon ech;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    BitVec row = rows[j];
    BitVec combo = BitVec::unit(rows.size(), j);
    ech.insert(row, &combo);
  }
  BitVec residual = target;
  BitVec combo(rows.size());
  ech.reduce(residual, &combo);
  if (!residual.none()) return std::nullopt;
  return combo;
}

bool Echelon::insert(BitVec row) {
  while (true) {
    auto lead = row.first_set();
    if (lead < 0) return false;
    auto it = pivots_.find(static_cast<std::size_t>(lead));
    if (it == pivots_.end()) {
      pivots_.emplace(static_cast<std::size_t>(lead), std::move(row));
      return true;
    }
    row ^= it->second;
  }
}

bool Echelon::contains(BitVec row) const {
  while (true) {
    auto lead = row.first_set();
    if (lead < 0) return true;
    auto it = pivots_.find(static_cast<std::size_t>(lead));
    if (it == pivots_.end()) return false;
    row ^= it->second;
  }
}

}  // namespace gf2

GeneratorList reduce(const GeneratorList& gens) {
  gf2::Echelon ech;
  GeneratorList out(gens.num_qubits());
  for (const auto& g : gens) {
    if (ech.insert(to_row(g))) out.add(g);
  }
  return out;
}

std::optional<BitVec> in_group(const PauliOperator& p, const GeneratorList& gens) {
  if (p.num_qubits() != gens.num_qubits()) {
    throw DimensionError("operator register size mismatch");
  }
  std::vector<BitVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(to_row(g));
  return gf2::express(to_row(p), rows);
}

}  // namespace stabcut

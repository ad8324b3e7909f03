#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>

#include "stabcut/oracle.hpp"

// Reference implementations: single-threaded transliterations of the
// definitions. The OpenMP kernels in oracle.cpp must produce identical
// results; tests and the benchmark target compare the two.

namespace stabcut::oracle::serial {
namespace {

constexpr double kEigenvalueFloor = 1e-12;

PauliOperator pattern_op(std::uint64_t e, const QubitSubset& sub, std::size_t n) {
  PauliOperator op(n);
  for (std::size_t t = 0; t < sub.size(); ++t) {
    const std::size_t q = sub.members()[t];
    if ((e >> (2 * t)) & 1u) op.x().set(q);
    if ((e >> (2 * t + 1)) & 1u) op.z().set(q);
  }
  return op;
}

bool commutes_with_all(const PauliOperator& op, const GeneratorList& gens) {
  for (const auto& g : gens) {
    if (!commutes(op, g)) return false;
  }
  return true;
}

void check_enumerable(std::size_t qubits, std::size_t limit, const char* what) {
  if (qubits > limit || qubits > 24) {
    throw BudgetError(std::string(what) + " exceeds the enumeration budget (" +
                      std::to_string(qubits) + " qubits)");
  }
}

// v <- (v + P v) / 2 for the Hermitian letter representative of P
// (Y where x and z overlap). P|b> = i^{#Y} (-1)^{parity(z & b)} |b ^ x>.
void apply_projector(std::vector<std::complex<double>>& v,
                     std::vector<std::complex<double>>& scratch,
                     const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  std::uint64_t xm = 0, zm = 0;
  std::size_t ny = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool xb = p.x().get(i), zb = p.z().get(i);
    if (xb) xm |= std::uint64_t{1} << i;
    if (zb) zm |= std::uint64_t{1} << i;
    if (xb && zb) ++ny;
  }
  static const std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> base = kPhases[ny % 4];
  for (std::size_t b = 0; b < v.size(); ++b) {
    const std::size_t src = b ^ xm;
    const double sign = (std::popcount(zm & src) & 1u) ? -1.0 : 1.0;
    scratch[b] = 0.5 * (v[b] + base * sign * v[src]);
  }
  v.swap(scratch);
}

double reduced_entropy(const std::vector<std::complex<double>>& v,
                       const QubitSubset& a, std::size_t n) {
  const QubitSubset side = (2 * a.size() <= n) ? a : a.complement();
  const QubitSubset rest = side.complement();
  const std::size_t dim_s = std::size_t{1} << side.size();
  const std::size_t dim_r = std::size_t{1} << rest.size();

  std::vector<std::size_t> scatter_s(dim_s, 0), scatter_r(dim_r, 0);
  for (std::size_t i = 0; i < dim_s; ++i) {
    for (std::size_t t = 0; t < side.size(); ++t) {
      if ((i >> t) & 1u) scatter_s[i] |= std::size_t{1} << side.members()[t];
    }
  }
  for (std::size_t r = 0; r < dim_r; ++r) {
    for (std::size_t t = 0; t < rest.size(); ++t) {
      if ((r >> t) & 1u) scatter_r[r] |= std::size_t{1} << rest.members()[t];
    }
  }

  Eigen::MatrixXcd rho(dim_s, dim_s);
  for (std::size_t i = 0; i < dim_s; ++i) {
    for (std::size_t j = 0; j < dim_s; ++j) {
      std::complex<double> acc = 0;
      for (std::size_t r = 0; r < dim_r; ++r) {
        acc += v[scatter_s[i] | scatter_r[r]] * std::conj(v[scatter_s[j] | scatter_r[r]]);
      }
      rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0;
  for (Eigen::Index t = 0; t < solver.eigenvalues().size(); ++t) {
    const double lambda = solver.eigenvalues()[t];
    if (lambda > kEigenvalueFloor) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

}  // namespace

std::size_t brute_localized_count(const StabilizerCode& code, const QubitSubset& a,
                                  const OracleBudget& budget) {
  if (a.num_qubits() != code.num_qubits()) {
    throw DimensionError("subset register size mismatch");
  }
  check_enumerable(a.size(), budget.max_subset_qubits, "subset enumeration");

  gf2::Echelon stabilizer_span;
  for (const auto& g : code.basis()) stabilizer_span.insert(to_row(g));

  gf2::Echelon qualifying, qualifying_in_s;
  std::size_t rank_all = 0, rank_s = 0;
  const std::uint64_t total = std::uint64_t{1} << (2 * a.size());
  for (std::uint64_t e = 0; e < total; ++e) {
    const PauliOperator op = pattern_op(e, a, code.num_qubits());
    if (!commutes_with_all(op, code.generators())) continue;
    const BitVec row = to_row(op);
    if (qualifying.insert(row)) ++rank_all;
    if (stabilizer_span.contains(row) && qualifying_in_s.insert(row)) ++rank_s;
  }
  return rank_all - rank_s;
}

double statevector_entropy(const GroundStateSpec& spec, const QubitSubset& a,
                           const OracleBudget& budget) {
  const std::size_t n = spec.code.num_qubits();
  if (a.num_qubits() != n) throw DimensionError("subset register size mismatch");
  check_enumerable(n, budget.max_statevector_qubits, "statevector");
  validate(spec);

  std::vector<PauliOperator> conditions(spec.code.basis().begin(),
                                        spec.code.basis().end());
  conditions.insert(conditions.end(), spec.fixed_logicals.begin(),
                    spec.fixed_logicals.end());

  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::complex<double>> v(dim), scratch(dim);
  for (std::size_t start = 0; start < dim; ++start) {
    std::fill(v.begin(), v.end(), std::complex<double>{0, 0});
    v[start] = 1.0;
    for (const auto& p : conditions) apply_projector(v, scratch, p);
    double norm2 = 0;
    for (const auto& amp : v) norm2 += std::norm(amp);
    if (norm2 > 1e-9) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& amp : v) amp *= inv;
      return reduced_entropy(v, a, n);
    }
  }
  throw InvariantError("projector products annihilated every basis state");
}

std::size_t brute_distance(const StabilizerCode& code, const OracleBudget& budget) {
  if (code.num_logical_qubits() == 0) {
    throw UndefinedDistanceError("distance is undefined when k = 0");
  }
  const std::size_t n = code.num_qubits();
  const std::size_t max_w = std::min(n, budget.max_distance_weight);

  gf2::Echelon stabilizer_span;
  for (const auto& g : code.basis()) stabilizer_span.insert(to_row(g));

  for (std::size_t w = 1; w <= max_w; ++w) {
    double work = std::pow(3.0, static_cast<double>(w));
    for (std::size_t i = 0; i < w; ++i) work *= static_cast<double>(n - i) / (i + 1);
    if (work > 2.5e8) {
      throw BudgetError("weight-" + std::to_string(w) + " enumeration too large");
    }

    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    std::uint64_t letters_total = 1;
    for (std::size_t i = 0; i < w; ++i) letters_total *= 3;

    while (true) {
      for (std::uint64_t letters = 0; letters < letters_total; ++letters) {
        PauliOperator op(n);
        std::uint64_t rem = letters;
        for (std::size_t i = 0; i < w; ++i) {
          const std::size_t q = support[i];
          switch (rem % 3) {
            case 0:
              op.x().set(q);
              break;
            case 1:
              op.z().set(q);
              break;
            default:
              op.x().set(q);
              op.z().set(q);
          }
          rem /= 3;
        }
        if (commutes_with_all(op, code.generators()) &&
            !stabilizer_span.contains(to_row(op))) {
          return w;
        }
      }
      // advance to the next ascending support
      std::size_t i = w;
      while (i-- > 0) {
        if (support[i] + (w - i) < n) break;
        if (i == 0) goto next_weight;
      }
      ++support[i];
      for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  next_weight:;
  }
  if (max_w < n) throw BudgetError("distance exceeds the weight budget");
  throw InvariantError("no logical operator found although k > 0");
}

bool quantum_sharing_witness_exists(const StabilizerCode& code,
                                    const QubitSubset& a,
                                    const OracleBudget& budget) {
  const std::size_t n = code.num_qubits();
  if (a.num_qubits() != n) throw DimensionError("subset register size mismatch");
  check_enumerable(n, budget.max_subset_qubits, "witness search");
  const QubitSubset b = a.complement();

  // L_side is generated by the stabilizer generators together with every
  // qualifying operator supported inside the side.
  const auto side_span = [&](const QubitSubset& side, gf2::Echelon& span,
                             std::vector<PauliOperator>& extra) {
    for (const auto& g : code.basis()) span.insert(to_row(g));
    const std::uint64_t total = std::uint64_t{1} << (2 * side.size());
    for (std::uint64_t e = 0; e < total; ++e) {
      const PauliOperator op = pattern_op(e, side, n);
      if (!commutes_with_all(op, code.generators())) continue;
      if (span.insert(to_row(op))) extra.push_back(op);
    }
  };
  gf2::Echelon la_span, lb_span;
  std::vector<PauliOperator> ca_ops, cb_ops;
  side_span(a, la_span, ca_ops);
  side_span(b, lb_span, cb_ops);
  const GeneratorList ca_list(n, ca_ops);
  const GeneratorList cb_list(n, cb_ops);

  std::vector<PauliOperator> candidates;
  const QubitSubset everything = QubitSubset::full(n);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t e = 0; e < total; ++e) {
    const PauliOperator op = pattern_op(e, everything, n);
    if (!commutes_with_all(op, code.generators())) continue;
    const BitVec row = to_row(op);
    if (la_span.contains(row) || lb_span.contains(row)) continue;
    if (!commutes_with_all(op, ca_list) || !commutes_with_all(op, cb_list)) {
      continue;
    }
    candidates.push_back(op);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!commutes(candidates[i], candidates[j])) return true;
    }
  }
  return false;
}

}  // namespace stabcut::oracle::serial

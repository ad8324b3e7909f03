#include "stabcut/codes.hpp"

#include <algorithm>

namespace stabcut {

StabilizerCode toric_code(std::size_t L) {
  if (L < 2) throw ParameterError("toric code needs L >= 2");
  const ToricLayout lat{L};
  GeneratorList gens(lat.num_qubits());

  // Star at vertex (r, c): X on the four incident edges.
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      PauliOperator star(lat.num_qubits());
      star.x().set(lat.horizontal(r, c));
      star.x().set(lat.horizontal(r, c + L - 1));
      star.x().set(lat.vertical(r, c));
      star.x().set(lat.vertical(r + L - 1, c));
      gens.add(star);
    }
  }
  // Plaquette with top-left vertex (r, c): Z on its four boundary edges.
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      PauliOperator plaq(lat.num_qubits());
      plaq.z().set(lat.horizontal(r, c));
      plaq.z().set(lat.horizontal(r + 1, c));
      plaq.z().set(lat.vertical(r, c));
      plaq.z().set(lat.vertical(r, c + 1));
      gens.add(plaq);
    }
  }
  return StabilizerCode(lat.num_qubits(), std::move(gens));
}

ToricRegions toric_regions(std::size_t L) {
  if (L < 2) throw ParameterError("toric regions need L >= 2");
  const ToricLayout lat{L};

  // Row 0 of horizontal edges carries a Z loop around x, row 0 of vertical
  // edges an X loop around x; together they make a width-1 strip with g = 2.
  std::vector<std::size_t> qx_members;
  for (std::size_t c = 0; c < L; ++c) {
    qx_members.push_back(lat.horizontal(0, c));
    qx_members.push_back(lat.vertical(0, c));
  }
  ToricRegion qx{QubitSubset(lat.num_qubits(), std::move(qx_members)), 1, 0};

  std::vector<std::size_t> qy_members;
  for (std::size_t r = 0; r < L; ++r) {
    qy_members.push_back(lat.vertical(r, 0));
    qy_members.push_back(lat.horizontal(r, 0));
  }
  ToricRegion qy{QubitSubset(lat.num_qubits(), std::move(qy_members)), 0, 1};

  std::vector<std::size_t> r1_members = qx.subset.members();
  for (auto q : qy.subset.members()) {
    if (!qx.subset.contains(q)) r1_members.push_back(q);
  }
  ToricRegion r1{QubitSubset(lat.num_qubits(), std::move(r1_members)), 1, 1};

  return ToricRegions{std::move(qx), std::move(qy), std::move(r1)};
}

ToricRegion toric_rectangle(std::size_t L, std::size_t nx, std::size_t ny) {
  if (L < 2) throw ParameterError("toric regions need L >= 2");
  if (nx < 1 || ny < 1 || nx >= L || ny >= L) {
    throw ParameterError("rectangle must satisfy 1 <= nx, ny < L");
  }
  const ToricLayout lat{L};
  std::vector<std::size_t> members;
  for (std::size_t r = 0; r < ny; ++r) {
    for (std::size_t c = 0; c < nx; ++c) {
      members.push_back(lat.horizontal(r, c));
      members.push_back(lat.vertical(r, c));
    }
  }
  return ToricRegion{QubitSubset(lat.num_qubits(), std::move(members)), 0, 0};
}

StabilizerCode repetition_code(std::size_t n) {
  if (n < 2) throw ParameterError("repetition code needs n >= 2");
  GeneratorList gens(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PauliOperator zz(n);
    zz.z().set(i);
    zz.z().set(i + 1);
    gens.add(zz);
  }
  return StabilizerCode(n, std::move(gens));
}

StabilizerCode five_qubit_code() {
  GeneratorList gens(5);
  const char* base = "XZZXI";
  for (std::size_t shift = 0; shift < 4; ++shift) {
    std::string s(5, 'I');
    for (std::size_t i = 0; i < 5; ++i) s[(i + shift) % 5] = base[i];
    gens.add(PauliOperator::from_string(s));
  }
  return StabilizerCode(5, std::move(gens));
}

StabilizerCode random_code(std::size_t n, std::size_t num_generators,
                           std::mt19937_64& rng) {
  if (num_generators < 1 || num_generators > n) {
    throw ParameterError("need 1 <= num_generators <= n");
  }
  GeneratorList chosen(n);
  std::vector<BitVec> swapped_rows;  // z|x rows of chosen, so dot = symplectic
  while (chosen.size() < num_generators) {
    auto candidates = gf2::right_kernel(swapped_rows, 2 * n);
    const std::size_t before = chosen.size();
    for (int attempt = 0; attempt < 256; ++attempt) {
      BitVec row(2 * n);
      for (const auto& basis_vec : candidates) {
        if (rng() & 1u) row ^= basis_vec;
      }
      PauliOperator op = from_row(row);
      if (op.is_identity() || in_group(op, chosen)) continue;
      chosen.add(op);
      BitVec swapped(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (op.z().get(i)) swapped.set(2 * i);
        if (op.x().get(i)) swapped.set(2 * i + 1);
      }
      swapped_rows.push_back(std::move(swapped));
      break;
    }
    if (chosen.size() == before) {
      throw InvariantError("random commuting extension failed to progress");
    }
  }
  return StabilizerCode(n, std::move(chosen));
}

QubitSubset random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> members;
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1u) members.push_back(q);
  }
  return QubitSubset(n, std::move(members));
}

}  // namespace stabcut

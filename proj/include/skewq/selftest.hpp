#pragma once

#include "skewq/instance.hpp"
#include "skewq/result.hpp"

namespace skewq {

/// Skew-vertex indices of the bundled binary-dihedral-12 example,
/// identified by character values rather than table positions:
/// the four scalar characters by their value at b, the two 2-dimensional
/// ones by their value at a, and the stabilizer characters of the
/// satellite orbit by their value at b.
struct Bd12Vertices {
  int elem_a = -1, elem_b = -1;  // group elements of the two generators
  // vertices over the fixed vertex (stabilizer = whole group)
  int v0_1 = -1, v0_m1 = -1, v0_i = -1, v0_mi = -1, v0_rho = -1, v0_sigma = -1;
  // vertices over the satellite orbit (stabilizer of order 4)
  int v1_1 = -1, v1_m1 = -1, v1_i = -1, v1_mi = -1;
};

/// Locates the labeled vertices in a fold of binary_dihedral_12_instance().
/// Throws Error on structural mismatch.
Bd12Vertices identify_bd12(const FoldResult& fold, const InstanceFile& file);

/// Same, with the two generator elements already known (e.g. when the
/// group came in as an explicit table).
Bd12Vertices identify_bd12_elements(const FoldResult& fold, int elem_a, int elem_b);

struct SelftestReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};

/// The bundled-example suite: the binary-dihedral-12 fold with its pinned
/// multiplicities and oracle agreement, the glued-chain forks, and the SL2
/// crosschecks.
SelftestReport run_selftest();

}  // namespace skewq

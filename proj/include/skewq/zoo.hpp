#pragma once

#include "skewq/cyclo.hpp"
#include "skewq/group.hpp"

namespace skewq {

/// Abstract test groups, all as validated Cayley tables.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);        // order 2n, n >= 1
FiniteGroup symmetric_group(int n);       // n <= 5 is plenty here
FiniteGroup binary_dihedral_group(int n); // order 4n: a^(2n)=1, b^2=a^n, bab^-1=a^-1
FiniteGroup quaternion_group();           // = binary dihedral of order 8

/// 2x2 cyclotomic generator matrices of a finite subgroup of SL2.
struct Sl2Generators {
  std::string name;
  long level = 1;
  std::vector<CycloMatrix> generators;
};

Sl2Generators sl2_cyclic(int m);                  // diag(zeta_m, zeta_m^-1)
Sl2Generators sl2_binary_dihedral(int order4n);   // orders 8, 12, 16, ...
Sl2Generators sl2_binary_tetrahedral();           // order 24

/// The bundled SL2 zoo: cyclic m <= 8, binary dihedral 8/12/16, binary
/// tetrahedral.
std::vector<Sl2Generators> sl2_zoo();

}  // namespace skewq

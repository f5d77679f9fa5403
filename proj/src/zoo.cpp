#include "skewq/zoo.hpp"

#include <numeric>

#include "skewq/error.hpp"

namespace skewq {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_cayley_table(t);
}

FiniteGroup dihedral_group(int n) {
  // elements (k, s), k in Z/n, s in {0,1}; index = k + n*s
  const int order = 2 * n;
  auto mul = [n](int x, int y) {
    int k1 = x % n, s1 = x / n, k2 = y % n, s2 = y / n;
    int k = s1 == 0 ? (k1 + k2) % n : ((k1 - k2) % n + n) % n;
    return k + n * ((s1 + s2) % 2);
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t[i][j] = mul(i, j);
  return from_cayley_table(t);
}

FiniteGroup symmetric_group(int n) {
  std::vector<std::vector<int>> gens;
  std::vector<int> cycle(n), swap01(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::iota(swap01.begin(), swap01.end(), 0);
  if (n >= 2) {
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::swap(swap01[0], swap01[1]);
    gens = {cycle, swap01};
  }
  return from_permutation_generators(n, gens).first;
}

FiniteGroup binary_dihedral_group(int n) {
  // a^k b^j, k in Z/2n, j in {0,1}; index = k + 2n*j
  const int two_n = 2 * n;
  const int order = 4 * n;
  auto mul = [two_n, n](int x, int y) {
    int k1 = x % two_n, j1 = x / two_n, k2 = y % two_n, j2 = y / two_n;
    if (j1 == 0) return (k1 + k2) % two_n + two_n * j2;
    // b a^k = a^-k b, b^2 = a^n
    int k = ((k1 - k2) % two_n + two_n) % two_n;
    if (j2 == 0) return k + two_n;
    return (k + n) % two_n;
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t[i][j] = mul(i, j);
  return from_cayley_table(t);
}

FiniteGroup quaternion_group() { return binary_dihedral_group(2); }

namespace {

CycloMatrix mat2(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c,
                 const CycloNumber& d) {
  CycloMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

Sl2Generators sl2_cyclic(int m) {
  Sl2Generators s;
  s.name = "cyclic-" + std::to_string(m);
  s.level = m;
  s.generators.push_back(mat2(CycloNumber::root_of_unity(m, 1), CycloNumber(0), CycloNumber(0),
                              CycloNumber::root_of_unity(m, m - 1)));
  return s;
}

Sl2Generators sl2_binary_dihedral(int order4n) {
  if (order4n % 4 != 0 || order4n < 8)
    fail_input("BadZooEntry", "binary dihedral order must be 4n with n >= 2");
  const int n = order4n / 4;
  Sl2Generators s;
  s.name = "binary-dihedral-" + std::to_string(order4n);
  s.level = std::lcm(2 * n, 4L);
  s.generators.push_back(mat2(CycloNumber::root_of_unity(2 * n, 1), CycloNumber(0),
                              CycloNumber(0), CycloNumber::root_of_unity(2 * n, 2 * n - 1)));
  s.generators.push_back(mat2(CycloNumber(0), CycloNumber(-1), CycloNumber(1), CycloNumber(0)));
  return s;
}

Sl2Generators sl2_binary_tetrahedral() {
  Sl2Generators s;
  s.name = "binary-tetrahedral";
  s.level = 4;
  const CycloNumber i = CycloNumber::root_of_unity(4, 1);
  const Rational half(BigInt(1), BigInt(2));
  const CycloNumber h(half, 4);
  // quaternion i, and w = (-1+i+j+k)/2 of order 3 in the rotation group
  s.generators.push_back(mat2(i, CycloNumber(0), CycloNumber(0), -i));
  s.generators.push_back(mat2(h * (CycloNumber(-1) + i), h * (CycloNumber(1) + i),
                              h * (CycloNumber(-1) + i), h * (CycloNumber(-1) - i)));
  return s;
}

std::vector<Sl2Generators> sl2_zoo() {
  std::vector<Sl2Generators> zoo;
  for (int m = 1; m <= 8; ++m) zoo.push_back(sl2_cyclic(m));
  zoo.push_back(sl2_binary_dihedral(8));
  zoo.push_back(sl2_binary_dihedral(12));
  zoo.push_back(sl2_binary_dihedral(16));
  zoo.push_back(sl2_binary_tetrahedral());
  return zoo;
}

}  // namespace skewq

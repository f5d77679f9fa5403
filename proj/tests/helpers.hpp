#pragma once

#include <numeric>
#include <vector>

#include "skewq/chartable.hpp"
#include "skewq/instance.hpp"
#include "skewq/oracle.hpp"
#include "skewq/skew.hpp"

namespace skewq::test {

// Cayley table of <a, b | a^3 = b^2, b^4 = 1, aba = b> in the normal form
// a^k b^j <-> k + 6j, built from the rewriting rules and independent of the
// library's action-closure path.
inline std::vector<std::vector<int>> bd12_table() {
  auto mul = [](int x, int y) {
    int k1 = x % 6, j1 = x / 6, k2 = y % 6, j2 = y / 6;
    if (j1 == 0) return (k1 + k2) % 6 + 6 * j2;
    int k = ((k1 - k2) % 6 + 6) % 6;
    if (j2 == 0) return k + 6;
    return (k + 3) % 6;
  };
  std::vector<std::vector<int>> t(12, std::vector<int>(12));
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) t[x][y] = mul(x, y);
  return t;
}

struct Bd12Fixture {
  InstanceFile file;
  ResolvedInstance inst;
  FoldResult fold;
  ExplicitBimodule bim;
};

// shared across test cases; the fold is deterministic so reuse is safe
inline const Bd12Fixture& bd12() {
  static const Bd12Fixture fx = [] {
    Bd12Fixture f;
    f.file = binary_dihedral_12_instance();
    f.inst = resolve_instance(f.file);
    f.fold = build_skew_quiver(f.inst.quiver, *f.inst.group, f.inst.action);
    f.bim = build_explicit(f.inst.quiver, *f.inst.group, f.fold.act_p, f.fold.emb);
    return f;
  }();
  return fx;
}

inline Quiver single_vertex_loops(int n_loops) {
  Quiver q;
  q.n_vertices = 1;
  q.vertex_labels = {"0"};
  for (int k = 0; k < n_loops; ++k)
    q.arrows.push_back({k, 0, 0, "l" + std::to_string(k)});
  return q;
}

inline Quiver path_quiver(int n_vertices) {  // 0 -> 1 -> ... -> n-1
  Quiver q;
  q.n_vertices = n_vertices;
  for (int v = 0; v < n_vertices; ++v) q.vertex_labels.push_back(std::to_string(v));
  for (int v = 0; v + 1 < n_vertices; ++v) q.arrows.push_back({v, v, v + 1, "a" + std::to_string(v)});
  return q;
}

// independent Euler totient for cross-checking polynomial degrees
inline long totient_oracle(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

// independent primality by trial division
inline bool is_prime_oracle(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// induced-character value formula, used only to state Frobenius
// reciprocity as a test: Ind psi (h) = |K|^-1 sum_x psi0(x h x^-1)
inline ClassFunction induce_oracle(const ClassFunction& psi, const SubgroupCtxPtr& big) {
  const SubgroupCtx& k_ctx = *psi.dom;
  const PrimeField f(psi.p);
  ClassFunction ind;
  ind.dom = big;
  ind.p = psi.p;
  ind.values.resize(big->num_classes());
  for (int c = 0; c < big->num_classes(); ++c) {
    const int h = big->to_parent[big->classes.reps[c]];
    std::uint32_t acc = 0;
    for (int xl = 0; xl < big->order(); ++xl) {
      const int x = big->to_parent[xl];
      const int conj = big->sub.parent->conj(h, x);
      if (conj >= 0 && conj < static_cast<int>(k_ctx.from_parent.size()) &&
          k_ctx.from_parent[conj] >= 0)
        acc = f.add(acc, psi.eval_parent(conj));
    }
    ind.values[c] = f.mul(acc, f.inv(f.from_ll(k_ctx.order())));
  }
  return ind;
}

}  // namespace skewq::test

#include "skewq/selftest.hpp"

#include <algorithm>

#include "skewq/error.hpp"
#include "skewq/oracle.hpp"

namespace skewq {

Bd12Vertices identify_bd12(const FoldResult& fold, const InstanceFile& file) {
  int elem_a = -1, elem_b = -1;
  const FiniteGroup& g = *fold.group;
  for (int x = 0; x < g.order; ++x) {
    for (std::size_t k = 0; k < file.vertex_perms.size(); ++k) {
      if (fold.action->vertex_perm[x] == file.vertex_perms[k] &&
          fold.action->arrow_matrix[x] == file.arrow_matrices[k]) {
        (k == 0 ? elem_a : elem_b) = x;
      }
    }
  }
  return identify_bd12_elements(fold, elem_a, elem_b);
}

Bd12Vertices identify_bd12_elements(const FoldResult& fold, int elem_a, int elem_b) {
  Bd12Vertices ids;
  ids.elem_a = elem_a;
  ids.elem_b = elem_b;
  if (ids.elem_a < 0 || ids.elem_b < 0)
    fail_guard("SelftestShape", "generators not found in the closed group");
  if (fold.frame.orbits.size() != 2 || fold.frame.reps[0] != 0)
    fail_guard("SelftestShape", "unexpected orbit structure");

  const PrimeEmbedding& e = fold.emb;
  if (e.level % 4 != 0) fail_guard("SelftestShape", "embedding level misses the 4th roots");
  const std::uint32_t i_val = e.root_power(e.level / 4);
  const std::uint32_t one = 1, m1 = e.field.neg(1), mi_val = e.field.neg(i_val);

  // fixed vertex: stabilizer is the whole group, six irreducibles
  const CharacterTable& t0 = fold.tables[0];
  for (int k = 0; k < t0.size(); ++k) {
    const ClassFunction& chi = t0.irreducibles[k];
    const int vtx = fold.vertex_index(0, k);
    if (t0.degrees[k] == 1) {
      const std::uint32_t at_b = chi.eval_parent(ids.elem_b);
      if (at_b == one) ids.v0_1 = vtx;
      if (at_b == m1) ids.v0_m1 = vtx;
      if (at_b == i_val) ids.v0_i = vtx;
      if (at_b == mi_val) ids.v0_mi = vtx;
    } else if (t0.degrees[k] == 2) {
      const std::uint32_t at_a = chi.eval_parent(ids.elem_a);
      if (at_a == one) ids.v0_rho = vtx;
      if (at_a == m1) ids.v0_sigma = vtx;
    }
  }
  // satellite orbit: stabilizer generated by b, four scalar characters
  const CharacterTable& t1 = fold.tables[1];
  for (int k = 0; k < t1.size(); ++k) {
    const std::uint32_t at_b = t1.irreducibles[k].eval_parent(ids.elem_b);
    const int vtx = fold.vertex_index(1, k);
    if (at_b == one) ids.v1_1 = vtx;
    if (at_b == m1) ids.v1_m1 = vtx;
    if (at_b == i_val) ids.v1_i = vtx;
    if (at_b == mi_val) ids.v1_mi = vtx;
  }
  for (int v : {ids.v0_1, ids.v0_m1, ids.v0_i, ids.v0_mi, ids.v0_rho, ids.v0_sigma, ids.v1_1,
                ids.v1_m1, ids.v1_i, ids.v1_mi})
    if (v < 0) fail_guard("SelftestShape", "an expected character is missing");
  return ids;
}

bool SelftestReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

bool bd12_checks(SelftestReport& rep) {
  const InstanceFile file = binary_dihedral_12_instance();
  const ResolvedInstance inst = resolve_instance(file);
  FoldResult fold = build_skew_quiver(inst.quiver, *inst.group, inst.action);
  const SkewQuiver& s = fold.skew;
  rep.checks.emplace_back("binary-dihedral-12: group closes to order 12",
                          inst.group->order == 12);
  rep.checks.emplace_back("binary-dihedral-12: 10 skew vertices (6 + 4)", s.size() == 10);

  Bd12Vertices ids = identify_bd12(fold, file);
  auto mult = [&](int v, int w) { return s.mult[v][w]; };
  rep.checks.emplace_back("binary-dihedral-12: one arrow rho -> sigma over the fixed vertex",
                          mult(ids.v0_rho, ids.v0_sigma) == 1);
  rep.checks.emplace_back("binary-dihedral-12: no arrow from the trivial vertex to sigma",
                          mult(ids.v0_1, ids.v0_sigma) == 0);
  rep.checks.emplace_back("binary-dihedral-12: one arrow from the i-character to sigma",
                          mult(ids.v0_i, ids.v0_sigma) == 1);
  rep.checks.emplace_back("binary-dihedral-12: no arrow from satellite-i to sigma",
                          mult(ids.v1_i, ids.v0_sigma) == 0);
  rep.checks.emplace_back("binary-dihedral-12: one arrow from satellite-1 to sigma",
                          mult(ids.v1_1, ids.v0_sigma) == 1);
  rep.checks.emplace_back("binary-dihedral-12: one arrow from satellite-1 to the -1 character",
                          mult(ids.v1_1, ids.v0_m1) == 1);

  bool symmetric = true, even_diag = true;
  for (int v = 0; v < s.size(); ++v) {
    for (int w = 0; w < s.size(); ++w) symmetric = symmetric && s.mult[v][w] == s.mult[w][v];
    even_diag = even_diag && s.mult[v][v] % 2 == 0;
  }
  rep.checks.emplace_back("binary-dihedral-12: multiplicity matrix symmetric", symmetric);
  rep.checks.emplace_back("binary-dihedral-12: even diagonal", even_diag);
  rep.checks.emplace_back("binary-dihedral-12: 26 arrows in total", s.total_arrows() == 26);

  // degree sequence of the restriction to the fixed-vertex block
  std::vector<int> deg;
  const std::vector<int> zero_part{ids.v0_1, ids.v0_m1, ids.v0_i, ids.v0_mi, ids.v0_rho,
                                   ids.v0_sigma};
  for (int v : zero_part) {
    int d = 0;
    for (int w : zero_part) d += static_cast<int>(s.mult[v][w]);
    deg.push_back(d);
  }
  std::sort(deg.begin(), deg.end());
  rep.checks.emplace_back("binary-dihedral-12: fixed-vertex block has the D~5 degree sequence",
                          deg == std::vector<int>({1, 1, 1, 1, 3, 3}));

  ExplicitBimodule bim = build_explicit(inst.quiver, *inst.group, fold.act_p, fold.emb);
  bool oracle_ok = oracle_all_counts(bim, fold) == s.mult;
  rep.checks.emplace_back("binary-dihedral-12: independent rank counts match all entries",
                          oracle_ok);

  rep.checks.emplace_back("binary-dihedral-12: preprojective relation is stable",
                          check_relation_invariance(*inst.dq, inst.action, fold.emb).invariant);
  rep.checks.emplace_back("binary-dihedral-12: relation identity in the doubled bimodule",
                          verify_rg(bim, *inst.dq, fold.emb, fold.act_p));
  return rep.ok();
}

bool glued_chain_checks(SelftestReport& rep) {
  for (int n = 3; n <= 6; ++n) {
    const ResolvedInstance inst = resolve_instance(glued_chains_instance(n));
    FoldResult fold = build_skew_quiver(inst.quiver, *inst.group, inst.action);
    const SkewQuiver& s = fold.skew;
    bool ok = s.size() == n + 1 && s.total_arrows() == n;
    // fork shape: the two stabilizer characters of the sink each receive
    // one arrow from the last chain vertex, and the chain is a path
    if (ok) {
      std::vector<int> in_deg(s.size(), 0), out_deg(s.size(), 0);
      for (int v = 0; v < s.size(); ++v)
        for (int w = 0; w < s.size(); ++w) {
          in_deg[w] += static_cast<int>(s.mult[v][w]);
          out_deg[v] += static_cast<int>(s.mult[v][w]);
          ok = ok && s.mult[v][w] <= 1;
        }
      int sources = 0, sinks = 0;
      for (int v = 0; v < s.size(); ++v) {
        if (in_deg[v] == 0 && out_deg[v] == 1) ++sources;
        if (out_deg[v] == 0 && in_deg[v] == 1) ++sinks;
      }
      ok = ok && sources == 1 && sinks == 2;
    }
    rep.checks.emplace_back("glued-chains-" + std::to_string(n) + ": fork with " +
                                std::to_string(n + 1) + " vertices and " + std::to_string(n) +
                                " arrows",
                            ok);
  }
  return rep.ok();
}

bool sl2_checks(SelftestReport& rep) {
  for (int m = 2; m <= 8; ++m) {
    SL2Subgroup s = close_sl2(sl2_cyclic(m));
    McKayGraph mk = mckay_graph(s);
    bool ok = mk.affine_type == (m == 1   ? std::string("A~0 (double loop)")
                                 : m == 2 ? std::string("A~1")
                                          : "A~" + std::to_string(m - 1));
    ok = ok && crosscheck_mckay_fold(s);
    rep.checks.emplace_back("sl2 cyclic-" + std::to_string(m) + ": fold = McKay = " +
                                mk.affine_type,
                            ok);
  }
  SL2Subgroup bd = close_sl2(sl2_binary_dihedral(12));
  McKayGraph mk = mckay_graph(bd);
  rep.checks.emplace_back("sl2 binary-dihedral-12: D~5 with passing crosscheck",
                          mk.affine_type == "D~5" && crosscheck_mckay_fold(bd));
  return rep.ok();
}

}  // namespace

SelftestReport run_selftest() {
  SelftestReport rep;
  bd12_checks(rep);
  glued_chain_checks(rep);
  sl2_checks(rep);
  return rep;
}

}  // namespace skewq

#include "doctest.h"
#include "helpers.hpp"
#include "skewq/error.hpp"
#include "skewq/zoo.hpp"

using namespace skewq;

TEST_CASE("doubling a quiver") {
  {
    Quiver q;
    q.n_vertices = 1;
    DoubleQuiver dq = double_quiver(q);
    CHECK(dq.n_arrows() == 0);
  }
  {
    DoubleQuiver dq = double_quiver(test::single_vertex_loops(1));
    REQUIRE(dq.n_arrows() == 2);
    CHECK(dq.quiver.arrows[1].label == "l0*");
    CHECK(dq.partner == std::vector<int>{1, 0});
    CHECK(dq.is_dual == std::vector<bool>{false, true});
  }
  {
    DoubleQuiver dq = double_quiver(test::path_quiver(2));  // one arrow 0 -> 1
    REQUIRE(dq.n_arrows() == 2);
    CHECK(dq.quiver.arrows[1].source == 1);
    CHECK(dq.quiver.arrows[1].target == 0);
  }
  // declared pairings validate orientation reversal and involutivity
  Quiver q = test::path_quiver(2);
  q.arrows.push_back({1, 1, 0, "back"});
  DoubleQuiver dq = declared_double(q, {{0, 1}});
  CHECK(dq.partner == std::vector<int>{1, 0});
  CHECK_THROWS_AS(declared_double(q, {{0, 0}}), Error);
  Quiver bad = test::path_quiver(3);
  CHECK_THROWS_AS(declared_double(bad, {{0, 1}}), Error);  // does not reverse
}

TEST_CASE("the canonical form is skew, non-degenerate and block-paired") {
  const auto& fx = test::bd12();
  const DoubleQuiver& dq = *fx.inst.dq;
  SymplecticData sd = symplectic_data(dq, fx.fold.emb);
  const int n = dq.n_arrows();
  const PrimeField f(fx.fold.emb.field.p());
  CHECK(rank(sd.gram) == n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      CHECK(sd.gram.at(u, v) == f.neg(sd.gram.at(v, u)));
      // pairing only couples the block (i, j) with (j, i)
      if (sd.gram.at(u, v) != 0) {
        CHECK(dq.quiver.arrows[u].source == dq.quiver.arrows[v].target);
        CHECK(dq.quiver.arrows[u].target == dq.quiver.arrows[v].source);
      }
    }
}

TEST_CASE("the relation is independent of the basis") {
  const auto& fx = test::bd12();
  const DoubleQuiver& dq = *fx.inst.dq;
  SymplecticData sd = symplectic_data(dq, fx.fold.emb);
  const std::uint32_t p = fx.fold.emb.field.p();
  ModMatrix canonical = relation_matrix(dq, sd, p);
  CHECK(relation_matrix_from_basis(dq, sd, ModMatrix::identity(dq.n_arrows(), p)) == canonical);
  // random block-respecting change of basis (mixing arrows with the same
  // endpoints, scaling the rest)
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    ModMatrix change(dq.n_arrows(), dq.n_arrows(), p);
    for (int u = 0; u < dq.n_arrows(); ++u)
      change.at(u, u) = 1 + static_cast<std::uint32_t>(rng.below(p - 1));
    // alpha and alpha* share endpoints with each other: mix them
    change.at(0, 1) = static_cast<std::uint32_t>(rng.below(p));
    change.at(1, 0) = static_cast<std::uint32_t>(rng.below(p));
    if (rank(change) < dq.n_arrows()) continue;
    CHECK(relation_matrix_from_basis(dq, sd, change) == canonical);
  }
}

TEST_CASE("contragredient extension") {
  {
    static FiniteGroup triv = from_cayley_table({{0}});
    Quiver q = test::path_quiver(2);
    DoubleQuiver dq = double_quiver(q);
    LinearQuiverAction ext = extend_action_contragredient(q, trivial_action(triv, q), dq);
    CHECK(ext.arrow_matrix[0] == CycloMatrix::identity(2));
  }
  {
    // negating one loop extends to negating its dual
    static FiniteGroup z2 = cyclic_group(2);
    Quiver q = test::single_vertex_loops(1);
    LinearQuiverAction act = trivial_action(z2, q);
    act.arrow_matrix[1].at(0, 0) = CycloNumber(-1);
    DoubleQuiver dq = double_quiver(q);
    LinearQuiverAction ext = extend_action_contragredient(q, act, dq);
    CHECK(ext.arrow_matrix[1].at(1, 1) == CycloNumber(-1));
    CHECK(ext.arrow_matrix[1].at(0, 0) == CycloNumber(-1));
  }
  // extensions always stabilize the form, over random instances
  for (std::uint64_t seed : {11ull, 12ull, 13ull, 14ull}) {
    ResolvedInstance inst = resolve_instance(random_instance(seed));
    DoubleQuiver dq = double_quiver(inst.quiver);
    LinearQuiverAction ext = extend_action_contragredient(inst.quiver, inst.action, dq);
    CHECK(validate_action(dq.quiver, ext).empty());
    PrimeEmbedding e = choose_prime(std::lcm(inst.group->exponent(), inst.action.level),
                                    default_safety_bound(dq.quiver, *inst.group));
    CHECK(check_relation_invariance(dq, ext, e).invariant);
  }
}

TEST_CASE("relation invariance check: the worked example and a broken scaling") {
  const auto& fx = test::bd12();
  CHECK(check_relation_invariance(*fx.inst.dq, fx.inst.action, fx.fold.emb).invariant);

  // replacing gamma -> -delta by gamma -> -2 delta in one generator alone
  // is not even an action (it violates the group relations)
  {
    InstanceFile file = binary_dihedral_12_instance();
    file.arrow_matrices[1].at(6, 4) = CycloNumber(-2);
    CHECK_THROWS_AS(resolve_instance(file), Error);
  }

  // rescaling gamma consistently (conjugating the action by a diagonal
  // change of basis) keeps a valid action with b: gamma -> -2 delta, but
  // the canonical form now pairs gamma with gamma* by 2 instead of 1
  InstanceFile file = binary_dihedral_12_instance();
  const Rational half(BigInt(1), BigInt(2));
  file.arrow_matrices[0].at(4, 2) = CycloNumber(half, 1);  // a: beta -> gamma/2
  file.arrow_matrices[0].at(6, 4) = CycloNumber(2);        // a: gamma -> 2 delta
  file.arrow_matrices[1].at(6, 4) = CycloNumber(-2);       // b: gamma -> -2 delta
  file.arrow_matrices[1].at(4, 6) = -CycloNumber(half, 1); // b: delta -> -gamma/2
  ResolvedInstance broken = resolve_instance(file);
  REQUIRE(validate_action(broken.quiver, broken.action).empty());
  InvarianceReport rep = check_relation_invariance(*broken.dq, broken.action, fx.fold.emb);
  CHECK(!rep.invariant);
  CHECK(rep.witness_element > 0);
  CHECK_THROWS_AS(fold_double(*broken.dq, *broken.group, broken.action), Error);
  try {
    fold_double(*broken.dq, *broken.group, broken.action);
  } catch (const Error& ex) {
    CHECK(ex.category() == ErrorCategory::kHypothesis);
    CHECK(ex.kind() == "NotInvariant");
  }
}

TEST_CASE("fold_double: trivial group returns the double itself") {
  static FiniteGroup triv = from_cayley_table({{0}});
  Quiver q = test::path_quiver(2);
  DoubleQuiver dq = double_quiver(q);
  FoldDoubleResult fd = fold_double(dq, triv, trivial_action(triv, dq.quiver));
  REQUIRE(fd.fold.skew.size() == 2);
  CHECK(fd.fold.skew.mult[0][1] == 1);
  CHECK(fd.fold.skew.mult[1][0] == 1);
  REQUIRE(fd.structure.q_prime.size() == 1);
  CHECK(fd.structure.q_prime[0].count == 1);
}

TEST_CASE("fold_double: the worked example is symmetric with even diagonal") {
  const auto& fx = test::bd12();
  FoldDoubleResult fd = fold_double(*fx.inst.dq, *fx.inst.group, fx.inst.action);
  CHECK(fd.fold.skew.size() == 10);
  long long q_prime_arrows = 0;
  for (const auto& e : fd.structure.q_prime) q_prime_arrows += e.count;
  CHECK(q_prime_arrows == 13);  // half of 26
}

TEST_CASE("doubled fold equals base plus transpose for extended actions") {
  for (std::uint64_t seed = 20; seed < 40; ++seed) {
    ResolvedInstance inst = resolve_instance(random_instance(seed));
    DoubleQuiver dq = double_quiver(inst.quiver);
    LinearQuiverAction ext = extend_action_contragredient(inst.quiver, inst.action, dq);
    FoldResult base = build_skew_quiver(inst.quiver, *inst.group, inst.action);
    // fold_double itself asserts mult = base + base^t when handed the base
    FoldDoubleResult fd = fold_double(dq, *inst.group, ext, {}, &base.skew);
    CHECK(fd.fold.skew.size() == base.skew.size());
  }
}

#include "doctest.h"
#include "helpers.hpp"
#include "skewq/error.hpp"
#include "skewq/selftest.hpp"
#include "skewq/zoo.hpp"

using namespace skewq;

TEST_CASE("validation accepts the worked example and the trivial action") {
  const auto& fx = test::bd12();
  CHECK(validate_action(fx.inst.quiver, fx.inst.action).empty());
  static FiniteGroup triv = from_cayley_table({{0}});
  Quiver q = test::path_quiver(3);
  CHECK(validate_action(q, trivial_action(triv, q)).empty());
}

TEST_CASE("a flipped sign breaks a generator relation, with a witness") {
  // beta sent to +beta instead of -beta under the order-4 generator: as
  // generators of a declared group this violates its relations
  {
    InstanceFile file = binary_dihedral_12_instance();
    file.arrow_matrices[1].at(2, 2) = CycloNumber(1);
    file.group_type = InstanceFile::GroupType::kCayleyTable;
    file.cayley = test::bd12_table();
    file.action_elements = {1, 6};  // a = a^1 b^0, b = a^0 b^1
    CHECK_THROWS_WITH_AS(resolve_instance(file), doctest::Contains("relation"), Error);
  }
  // with no declared group the same data is free to generate whatever
  // group it generates: a strictly larger closure, still a valid action
  {
    InstanceFile file = binary_dihedral_12_instance();
    file.arrow_matrices[1].at(2, 2) = CycloNumber(1);
    ResolvedInstance flipped = resolve_instance(file);
    CHECK(flipped.group->order > 12);
    CHECK(validate_action(flipped.quiver, flipped.action).empty());
  }
  // the unflipped data resolves against the declared table and folds to
  // the same quiver as the action-generated group (vertex order may
  // differ: element numbering differs between the two presentations)
  {
    InstanceFile file = binary_dihedral_12_instance();
    file.group_type = InstanceFile::GroupType::kCayleyTable;
    file.cayley = test::bd12_table();
    file.action_elements = {1, 6};
    ResolvedInstance declared = resolve_instance(file);
    CHECK(declared.group->order == 12);
    FoldResult fold = build_skew_quiver(declared.quiver, *declared.group, declared.action);
    const auto& fx = test::bd12();
    Bd12Vertices da = identify_bd12_elements(fold, 1, 6);
    Bd12Vertices fa = identify_bd12(fx.fold, fx.file);
    const std::vector<int> lhs{da.v0_1, da.v0_m1, da.v0_i,  da.v0_mi, da.v0_rho,
                               da.v0_sigma, da.v1_1, da.v1_m1, da.v1_i, da.v1_mi};
    const std::vector<int> rhs{fa.v0_1, fa.v0_m1, fa.v0_i,  fa.v0_mi, fa.v0_rho,
                               fa.v0_sigma, fa.v1_1, fa.v1_m1, fa.v1_i, fa.v1_mi};
    for (std::size_t v = 0; v < lhs.size(); ++v)
      for (std::size_t w = 0; w < lhs.size(); ++w)
        CHECK(fold.skew.mult[lhs[v]][lhs[w]] == fx.fold.skew.mult[rhs[v]][rhs[w]]);
  }

  // the same flip handed over as a full per-element table is caught by
  // validate_action's composition check
  const auto& fx = test::bd12();
  LinearQuiverAction bad = fx.inst.action;
  const InstanceFile clean = binary_dihedral_12_instance();
  int b_elem = -1;
  for (int x = 0; x < fx.inst.group->order; ++x)
    if (bad.vertex_perm[x] == clean.vertex_perms[1] &&
        bad.arrow_matrix[x] == clean.arrow_matrices[1])
      b_elem = x;
  REQUIRE(b_elem >= 0);
  bad.arrow_matrix[b_elem].at(2, 2) = CycloNumber(1);
  auto violations = validate_action(fx.inst.quiver, bad);
  CHECK(!violations.empty());
  bool has_composition_witness = false;
  for (const auto& v : violations)
    if (v.what.find("composition fails") != std::string::npos) has_composition_witness = true;
  CHECK(has_composition_witness);
}

TEST_CASE("block support violations are reported") {
  static FiniteGroup z2 = cyclic_group(2);
  Quiver q = test::path_quiver(3);  // arrows 0->1, 1->2
  LinearQuiverAction act = trivial_action(z2, q);
  // send the first arrow to the second without moving vertices
  act.arrow_matrix[1] = CycloMatrix(2, 2);
  act.arrow_matrix[1].at(1, 0) = CycloNumber(1);
  act.arrow_matrix[1].at(0, 1) = CycloNumber(1);
  auto violations = validate_action(q, act);
  bool has_block = false;
  for (const auto& v : violations)
    if (v.what.find("block") != std::string::npos) has_block = true;
  CHECK(has_block);
}

TEST_CASE("arrow blocks of the worked example") {
  const auto& fx = test::bd12();
  const PrimeEmbedding& e = fx.fold.emb;

  // no arrows between two satellites
  ArrowBlock empty = arrow_block(fx.inst.quiver, fx.inst.action, e, 1, 1);
  CHECK(empty.dim() == 0);

  // the loop block at the fixed vertex is 2-dimensional and carries the
  // 2-dimensional character with value 1 at a, -2 at the central element
  ArrowBlock loops = arrow_block(fx.inst.quiver, fx.inst.action, e, 0, 0);
  CHECK(loops.dim() == 2);
  CHECK(loops.stabilizer_pair->order() == 12);
  ClassFunction chi = action_character(
      loops.stabilizer_pair, [&](int x) { return loops.matrix_of_parent(x); });
  // identify a and the central involution through element orders
  int a_elem = -1;
  for (int x = 0; x < fx.inst.group->order; ++x)
    if (fx.inst.group->element_order[x] == 6) {
      a_elem = x;
      break;
    }
  REQUIRE(a_elem >= 0);
  CHECK(chi.eval_parent(a_elem) == 1);
  CHECK(chi.eval_parent(0) == 2);

  // the satellite-to-center block is 1-dimensional and the order-4
  // stabilizer generator acts by -1
  ArrowBlock beta = arrow_block(fx.inst.quiver, fx.inst.action, e, 1, 0);
  CHECK(beta.dim() == 1);
  CHECK(beta.stabilizer_pair->order() == 4);
  for (int loc = 0; loc < 4; ++loc) {
    const int x = beta.stabilizer_pair->to_parent[loc];
    if (fx.inst.group->element_order[x] == 4)
      CHECK(beta.matrices[loc].at(0, 0) == e.field.neg(1));
  }
}

TEST_CASE("valid actions permute arrow blocks consistently") {
  InstanceFile file = random_instance(314);
  ResolvedInstance inst = resolve_instance(file);
  REQUIRE(validate_action(inst.quiver, inst.action).empty());
  const PrimeEmbedding e = choose_prime(std::lcm(inst.group->exponent(), inst.action.level),
                                        default_safety_bound(inst.quiver, *inst.group));
  ActionModP act = embed_action(inst.action, e);
  for (int x = 0; x < inst.group->order; ++x) {
    for (int i = 0; i < inst.quiver.n_vertices; ++i) {
      for (int j = 0; j < inst.quiver.n_vertices; ++j) {
        std::vector<int> from = inst.quiver.arrows_between(i, j);
        std::vector<int> to = inst.quiver.arrows_between(act.vertex_perm[x][i],
                                                         act.vertex_perm[x][j]);
        CHECK(from.size() == to.size());
        if (from.empty()) continue;
        // the submatrix carrying the block to its image is invertible
        ModMatrix sub(static_cast<int>(to.size()), static_cast<int>(from.size()), e.field.p());
        for (std::size_t r = 0; r < to.size(); ++r)
          for (std::size_t c = 0; c < from.size(); ++c)
            sub.at(static_cast<int>(r), static_cast<int>(c)) =
                act.arrow_matrix[x].at(to[r], from[c]);
        CHECK(rank(sub) == static_cast<int>(from.size()));
      }
    }
  }
}

TEST_CASE("opposite quiver swaps sources and targets") {
  Quiver q = test::path_quiver(3);
  Quiver op = opposite_quiver(q);
  CHECK(op.arrows[0].source == 1);
  CHECK(op.arrows[0].target == 0);
  CHECK(op.arrows[1].source == 2);
}

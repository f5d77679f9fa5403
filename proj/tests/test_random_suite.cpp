#include "doctest.h"
#include "helpers.hpp"
#include "skewq/zoo.hpp"

using namespace skewq;

// Seeded property runs over generated instances. The acceptance binary
// runs the full-size versions; these keep the unit suite quick.

TEST_CASE("generated instances validate and agree with the oracle") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    CAPTURE(seed);
    ResolvedInstance inst = resolve_instance(random_instance(seed));
    CHECK(validate_action(inst.quiver, inst.action).empty());
    FoldResult fold = build_skew_quiver(inst.quiver, *inst.group, inst.action);
    ExplicitBimodule bim = build_explicit(inst.quiver, *inst.group, fold.act_p, fold.emb);
    CHECK(oracle_all_counts(bim, fold) == fold.skew.mult);
    // vertex count identity
    int class_sum = 0;
    for (const auto& t : fold.tables) class_sum += t.size();
    CHECK(fold.skew.size() == class_sum);
  }
}

TEST_CASE("generated instances are choice-invariant") {
  for (std::uint64_t seed = 200; seed < 204; ++seed) {
    CAPTURE(seed);
    ResolvedInstance inst = resolve_instance(random_instance(seed));
    FoldResult canonical = build_skew_quiver(inst.quiver, *inst.group, inst.action);
    for (std::uint64_t roll = 1; roll <= 2; ++roll) {
      FoldOptions opts;
      opts.choices = FrameChoices{true, seed * 31 + roll};
      FoldResult redo = build_skew_quiver(inst.quiver, *inst.group, inst.action, opts);
      auto matching = match_by_twist(canonical, redo);
      REQUIRE(matching.has_value());
      CHECK(isomorphic_as_labeled(canonical.skew, redo.skew, *matching));
    }
  }
}

TEST_CASE("contragredient doubles satisfy the relation identity") {
  for (std::uint64_t seed = 300; seed < 306; ++seed) {
    CAPTURE(seed);
    ResolvedInstance inst = resolve_instance(random_instance(seed));
    if (inst.quiver.arrows.empty()) continue;
    DoubleQuiver dq = double_quiver(inst.quiver);
    LinearQuiverAction ext = extend_action_contragredient(inst.quiver, inst.action, dq);
    FoldResult fold = build_skew_quiver(dq.quiver, *inst.group, ext);
    CHECK(check_relation_invariance(dq, ext, fold.emb).invariant);
    ExplicitBimodule bim = build_explicit(dq.quiver, *inst.group, fold.act_p, fold.emb);
    CHECK(verify_rg(bim, dq, fold.emb, fold.act_p));
    // fold of the double is symmetric with even diagonal
    for (int v = 0; v < fold.skew.size(); ++v) {
      for (int w = 0; w < fold.skew.size(); ++w)
        CHECK(fold.skew.mult[v][w] == fold.skew.mult[w][v]);
      CHECK(fold.skew.mult[v][v] % 2 == 0);
    }
  }
}

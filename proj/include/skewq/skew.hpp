#pragma once

#include <optional>

#include "skewq/quiver.hpp"

namespace skewq {

/// Vertex of the folded quiver: an orbit representative together with an
/// irreducible character of its stabilizer.
struct SkewVertex {
  int orbit = 0;      // orbit index in the frame
  int orbit_rep = 0;  // representative vertex of the base quiver
  int irr = 0;        // index into the stabilizer's character table
  int degree = 1;     // degree of that irreducible
  std::string label;  // "<vertex>#<irr>"
};

struct SkewContribution {
  std::pair<int, int> pair;  // (i', j') in the base quiver
  long long count = 0;
};

struct SkewQuiver {
  std::vector<SkewVertex> vertices;
  std::vector<std::vector<long long>> mult;  // mult[v][w] = #arrows v -> w
  // nonzero contributions per ordered vertex pair, same indexing as mult
  std::vector<std::vector<std::vector<SkewContribution>>> provenance;

  int size() const { return static_cast<int>(vertices.size()); }
  long long total_arrows() const;
};

struct FoldOptions {
  std::optional<long long> prime_override;
  FrameChoices choices;
};

/// Everything the fold computed, kept for downstream consumers (oracle
/// comparison, vertex matching, result serialization).
struct FoldResult {
  const Quiver* quiver = nullptr;
  const FiniteGroup* group = nullptr;
  const LinearQuiverAction* action = nullptr;
  PrimeEmbedding emb;
  OrbitFrame frame;
  PairOrbitReps pair_reps;
  std::vector<SubgroupCtxPtr> stab_ctx;   // per orbit
  std::vector<CharacterTable> tables;     // per orbit
  ActionModP act_p;
  SkewQuiver skew;

  int vertex_offset(int orbit) const;
  /// Index of the skew vertex (orbit, irr).
  int vertex_index(int orbit, int irr) const;
};

/// Default safety bound: comfortably above every dimension count and
/// inner product that can appear (2 |A| |G|^2 covers the doubled arrow
/// space of any input here).
long long default_safety_bound(const Quiver& q, const FiniteGroup& g);

/// The main construction. For each ordered pair of orbit representatives
/// and each diagonal-orbit representative pair (i', j'), the contribution
/// of the arrow block i' -> j' to mult[(i,rho)][(j,sigma)] is the inner
/// product over G_i' intersect G_j' of the twisted restriction of rho
/// against the twisted restriction of sigma times the block character.
/// Validates the action first; propagates validation failures as input
/// errors with witnesses.
FoldResult build_skew_quiver(const Quiver& q, const FiniteGroup& g,
                             const LinearQuiverAction& act, const FoldOptions& opts = {});

/// Multiplicity matrices agree under an explicit vertex bijection.
bool isomorphic_as_labeled(const SkewQuiver& s1, const SkewQuiver& s2,
                           const std::vector<int>& matching);

/// Vertex matching between two folds of the same instance that differ only
/// in frame choices: vertex (i, rho) of a corresponds to (i_b, rho . u)
/// of b, where u carries a's representative to b's. Returns nullopt if an
/// irreducible fails to match (would contradict well-definedness).
std::optional<std::vector<int>> match_by_twist(const FoldResult& a, const FoldResult& b);

}  // namespace skewq

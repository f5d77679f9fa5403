#pragma once

#include "skewq/skew.hpp"

namespace skewq {

/// A quiver together with a fixed-point-free orientation-reversing pairing
/// of its arrows. partner[a] is the arrow paired with a; is_dual[a] marks
/// the starred member of each pair (the sign convention of the canonical
/// form hangs on this flag).
struct DoubleQuiver {
  Quiver quiver;
  std::vector<int> partner;
  std::vector<bool> is_dual;

  int n_arrows() const { return static_cast<int>(quiver.arrows.size()); }
};

/// Adjoin a reversed dual a* for every arrow a; duals get ids m..2m-1 in
/// the order of the originals and labels suffixed with '*'.
DoubleQuiver double_quiver(const Quiver& q);

/// Interpret an existing quiver as a double via a declared pairing
/// [(plain, star), ...]. The pairing must be a fixed-point-free involution
/// matching sources to targets.
DoubleQuiver declared_double(const Quiver& q, const std::vector<std::pair<int, int>>& pairing);

/// The canonical non-degenerate skew-symmetric form on the doubled arrow
/// span and the preprojective relation for it.
struct SymplecticData {
  ModMatrix gram;  // gram[u][v] = <x_u, x_v>
  struct RelationTerm {
    int vertex;       // the e_i r e_i component this term belongs to
    int first, second;  // tensor factor arrow ids
    int coeff;          // +1 or -1
  };
  std::vector<RelationTerm> relation;  // r = sum of coeff * (first (x) second)
};

SymplecticData symplectic_data(const DoubleQuiver& dq, const PrimeEmbedding& e);

/// The preprojective relation as a matrix r[u][v] = coefficient of
/// x_u (x) x_v, computed from an arbitrary basis (columns of basis_change,
/// which must be invertible and respect the source/target blocks) and its
/// left dual. Used to exercise basis independence.
ModMatrix relation_matrix_from_basis(const DoubleQuiver& dq, const SymplecticData& sd,
                                     const ModMatrix& basis_change);

ModMatrix relation_matrix(const DoubleQuiver& dq, const SymplecticData& sd, std::uint32_t p);

/// Extend an action on kQ to the double: dual arrows carry the
/// contragredient matrices (inverse transpose arranged for the right
/// action), which preserves the canonical form exactly.
LinearQuiverAction extend_action_contragredient(const Quiver& q, const LinearQuiverAction& act,
                                                const DoubleQuiver& dq);

struct InvarianceReport {
  bool invariant = true;
  int witness_element = -1;
  std::string detail;
};

/// The action stabilizes the preprojective relation iff it stabilizes the
/// bilinear form; checked as T(g)^t gram T(g) = gram on a generating set,
/// with a direct comparison of the transported relation as an independent
/// double check.
InvarianceReport check_relation_invariance(const DoubleQuiver& dq, const LinearQuiverAction& act,
                                           const PrimeEmbedding& e);

/// Orientation data for a quiver Q' with doubled fold: for v < w all
/// folded arrows run v -> w; loops keep half their count.
struct DoubleStructure {
  struct Entry {
    int from, to;
    long long count;
  };
  std::vector<Entry> q_prime;
};

struct FoldDoubleResult {
  FoldResult fold;
  DoubleStructure structure;
};

/// Fold the double quiver. Requires the invariance check to pass
/// (Error kind NotInvariant, hypothesis category). Asserts the fold is
/// symmetric with even diagonal (guards AsymmetricFold / OddLoop). When
/// base_fold is the fold of the un-doubled quiver under the action this
/// one extends, additionally asserts mult = base + base^t entrywise
/// (guard ContragredientMismatch).
FoldDoubleResult fold_double(const DoubleQuiver& dq, const FiniteGroup& g,
                             const LinearQuiverAction& act, const FoldOptions& opts = {},
                             const SkewQuiver* base_fold = nullptr);

}  // namespace skewq

#pragma once

#include <functional>
#include <optional>

#include "skewq/fp.hpp"
#include "skewq/group.hpp"

namespace skewq {

/// Class function on a subgroup, valued in F_p, indexed by the subgroup's
/// conjugacy classes.
struct ClassFunction {
  SubgroupCtxPtr dom;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> values;  // one per class of dom

  std::uint32_t at_class(int c) const { return values[c]; }
  /// Value at a parent-group element (must lie in dom).
  std::uint32_t eval_parent(int parent_elem) const;
  bool same_values(const ClassFunction& o) const { return values == o.values; }
};

/// Irreducible characters of a subgroup over a split prime field.
/// Invariants checked at construction: #irreducibles = #classes, the
/// degree-sum identity, row orthogonality, trivial character first.
struct CharacterTable {
  SubgroupCtxPtr dom;
  std::uint32_t p = 0;
  std::vector<ClassFunction> irreducibles;  // deterministic order
  std::vector<int> degrees;                 // lifted values at the identity

  int size() const { return static_cast<int>(irreducibles.size()); }
  /// Index of the irreducible with exactly these values, if any.
  std::optional<int> find(const ClassFunction& chi) const;
};

/// Burnside-Dixon: common eigenvectors of the class-sum matrices over F_p,
/// split eigenspace by eigenspace in class order, then normalized to
/// character values. Requires p = 1 mod exponent(H) (guaranteed when the
/// embedding level is a multiple of the parent group's exponent).
/// Error kind SplitFailure flags a non-splitting embedding (internal guard).
CharacterTable compute_character_table(SubgroupCtxPtr ctx, const PrimeEmbedding& e);

/// dim Hom of the modules behind the characters:
/// |H|^-1 sum over classes of |c| chi(c) psi(c^-1), lifted to [0, p).
long long inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Character of the tensor product: class-wise product.
ClassFunction pointwise_product(const ClassFunction& chi, const ClassFunction& psi);

/// Restrict a class function to a smaller subgroup (NotASubgroup otherwise).
ClassFunction restrict_to(const ClassFunction& chi, const SubgroupCtxPtr& sub);

/// (chi . kappa)(g) = chi(kappa g kappa^-1), a class function on the
/// conjugate subgroup target = kappa^-1 dom kappa.
/// Error kind ConjugationMismatch when conjugation does not map target
/// into dom.
ClassFunction conjugate_twist(const ClassFunction& chi, int kappa, const SubgroupCtxPtr& target);

/// Fused twist-then-restrict used by the fold: evaluates
/// g |-> chi(kappa g kappa^-1) on the classes of sub.
ClassFunction twist_restrict(const ClassFunction& chi, int kappa, const SubgroupCtxPtr& sub);

/// Character of a matrix right action of the subgroup: trace at each class
/// representative. matrix_of receives parent-group elements. The
/// composition law T(ab) = T(b) T(a) is checked on a generating set
/// (Error kind NotARepresentation).
ClassFunction action_character(const SubgroupCtxPtr& ctx,
                               const std::function<ModMatrix(int)>& matrix_of);

/// Constant-1 character.
ClassFunction trivial_character(const SubgroupCtxPtr& ctx, std::uint32_t p);

}  // namespace skewq

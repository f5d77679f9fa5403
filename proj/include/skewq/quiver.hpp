#pragma once

#include <string>
#include <vector>

#include "skewq/chartable.hpp"
#include "skewq/cyclo.hpp"
#include "skewq/fp.hpp"
#include "skewq/group.hpp"

namespace skewq {

struct Arrow {
  int id = 0;
  int source = 0;
  int target = 0;
  std::string label;
};

struct Quiver {
  int n_vertices = 0;
  std::vector<std::string> vertex_labels;  // may be empty; indices are canonical
  std::vector<Arrow> arrows;

  std::string vertex_label(int v) const;
  /// Arrow ids from i to j, in id order.
  std::vector<int> arrows_between(int i, int j) const;
};

Quiver opposite_quiver(const Quiver& q);

/// Linear right action of G on the path algebra kQ: a permutation of the
/// vertex idempotents plus, per group element, an invertible matrix on the
/// arrow span (column a = coordinates of a^g). Composition follows the
/// right-action law, so T(gh) = T(h) T(g).
struct LinearQuiverAction {
  const FiniteGroup* group = nullptr;
  long level = 1;  // all matrix entries live in Q(zeta_level)
  std::vector<std::vector<int>> vertex_perm;  // per element
  std::vector<CycloMatrix> arrow_matrix;      // per element

  int vertex_image(int v, int g) const { return vertex_perm[g][v]; }
};

/// Identity action of a group on a quiver.
LinearQuiverAction trivial_action(const FiniteGroup& g, const Quiver& q);

/// Extend generator data to the whole group along a breadth-first
/// factorization. Conflicting products (the input violates a relation of
/// the group) and non-generating input are reported as violations via
/// validate-style errors. generator_elements[k] names the group element of
/// the k-th generator datum.
LinearQuiverAction action_from_generators(const FiniteGroup& g, const Quiver& q, long level,
                                          const std::vector<int>& generator_elements,
                                          const std::vector<std::vector<int>>& vertex_perms,
                                          const std::vector<CycloMatrix>& arrow_matrices);

struct ActionViolation {
  std::string what;  // human-readable, includes witnesses
};

/// Full validation: identity element acts as identity; vertex permutations
/// and arrow matrices follow the right-action composition law (all pairs
/// when |G| <= 48, generator pairs plus a deterministic sample above);
/// every arrow image is supported on the permuted block; every matrix is
/// invertible (witnessed through T(g) T(g^-1) = id). Violations are
/// collected, not fail-fast.
std::vector<ActionViolation> validate_action(const Quiver& q, const LinearQuiverAction& act);

/// The arrow span between two vertices as a module over the intersection
/// of their stabilizers, with matrices over F_p.
struct ArrowBlock {
  int source = 0, target = 0;
  std::vector<int> arrow_ids;          // basis, ascending id
  SubgroupCtxPtr stabilizer_pair;      // G_source intersect G_target
  std::vector<ModMatrix> matrices;     // per local element of the subgroup

  int dim() const { return static_cast<int>(arrow_ids.size()); }
  ModMatrix matrix_of_parent(int parent_elem) const;
};

/// Error kind BlockNotStable if the action moves the block (cannot happen
/// for validated actions).
ArrowBlock arrow_block(const Quiver& q, const LinearQuiverAction& act, const PrimeEmbedding& e,
                       int i, int j);

/// Per-element action data over F_p, the working form for everything
/// downstream of validation.
struct ActionModP {
  std::vector<std::vector<int>> vertex_perm;
  std::vector<ModMatrix> arrow_matrix;
};

ActionModP embed_action(const LinearQuiverAction& act, const PrimeEmbedding& e);

/// Restriction of T(g) to rows x cols given by arrow id lists.
ModMatrix submatrix(const ModMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

}  // namespace skewq

#pragma once

#include <memory>

#include "skewq/preprojective.hpp"
#include "skewq/zoo.hpp"

namespace skewq {

/// On-disk description of a fold problem: a quiver, a group (explicit
/// table, permutation generators on an auxiliary set, or generated by the
/// action itself), the action on generators with cyclotomic-string matrix
/// entries, and options (prime override, double-quiver pairing).
struct InstanceFile {
  std::string name;
  long level = 1;

  Quiver quiver;

  enum class GroupType { kFromAction, kCayleyTable, kPermutationGenerators };
  GroupType group_type = GroupType::kFromAction;
  std::vector<std::vector<int>> cayley;            // kCayleyTable
  int perm_degree = 0;                             // kPermutationGenerators
  std::vector<std::vector<int>> perm_generators;

  // one entry per action generator; `elements` names the group element for
  // kCayleyTable (positional for the other group types)
  std::vector<int> action_elements;
  std::vector<std::vector<int>> vertex_perms;
  std::vector<CycloMatrix> arrow_matrices;

  std::optional<long long> prime;
  std::optional<std::vector<std::pair<int, int>>> pairing;

  bool operator==(const InstanceFile& o) const;
};

InstanceFile parse_instance(const std::string& json_text);
std::string serialize_instance(const InstanceFile& f);

/// A resolved instance: concrete group, full action, optional double
/// structure. Owns the group storage the action points into.
struct ResolvedInstance {
  std::shared_ptr<FiniteGroup> group;
  Quiver quiver;
  LinearQuiverAction action;
  std::optional<DoubleQuiver> dq;
  std::optional<long long> prime;
  std::string name;
};

ResolvedInstance resolve_instance(const InstanceFile& f);

/// The bundled worked example: the binary dihedral group of order 12
/// acting on the one-vertex-plus-three-satellites double quiver, with the
/// faithful monomial-plus-rotation action at level 6.
InstanceFile binary_dihedral_12_instance();

/// Two oriented chains of length n glued at their common sink, swapped by
/// the order-2 group. Folds to a fork.
InstanceFile glued_chains_instance(int n);

/// Seeded random instance: a zoo group acting on coset-orbit vertices with
/// induced monomial arrow orbits (valid by construction).
InstanceFile random_instance(std::uint64_t seed);

}  // namespace skewq

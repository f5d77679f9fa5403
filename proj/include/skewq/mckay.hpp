#pragma once

#include "skewq/oracle.hpp"
#include "skewq/zoo.hpp"

namespace skewq {

/// A finite subgroup of SL2 closed up from cyclotomic generator matrices,
/// with its natural 2-dimensional character.
struct SL2Subgroup {
  Sl2Generators input;
  FiniteGroup closure;
  std::vector<CycloMatrix> element_matrix;  // per group element
  std::vector<int> generator_elements;      // group element of each input generator
};

/// Error kinds: DeterminantNotOne, ClosureCapExceeded.
SL2Subgroup close_sl2(const Sl2Generators& gens, std::size_t closure_cap = 100000);

/// The one-vertex two-loop quiver with the group acting on span(alpha,
/// alpha*) through (the transpose of) its matrices; a valid action that
/// preserves the canonical symplectic form because determinants are 1.
struct Sl2LoopInstance {
  Quiver quiver;
  DoubleQuiver dq;
  LinearQuiverAction action;
};

Sl2LoopInstance sl2_loop_instance(const SL2Subgroup& s);

struct McKayGraph {
  CharacterTable table;
  std::vector<std::vector<long long>> mult;  // <chi_v, chi_nat * chi_w>
  std::vector<int> degrees;
  std::string affine_type;  // "A~n", "D~n", "E~6/7/8"
};

/// McKay graph of the natural representation, classified by degree
/// sequence and certified by the null-root identity
/// (2 I - adjacency) degrees = 0. Error kind UnrecognizedShape (guard).
McKayGraph mckay_graph(const SL2Subgroup& s, const std::optional<long long>& prime_override = {});

/// Folds the loop double quiver and compares its multiplicity matrix with
/// the McKay adjacency under the shared irreducible indexing.
bool crosscheck_mckay_fold(const SL2Subgroup& s,
                           const std::optional<long long>& prime_override = {});

}  // namespace skewq

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewq {

/// Finite group as a validated Cayley table over dense indices 0..n-1,
/// identity at index 0. All actions in this project are right actions
/// written exponentially: x^(gh) = (x^g)^h.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;          // row-major: table[g*order + h] = g*h
  std::vector<int> inverse;        // inverse[g]*g = identity
  std::vector<int> element_order;  // least n >= 1 with g^n = identity
  std::vector<std::string> labels; // optional display names, may be empty

  int mul(int g, int h) const { return table[static_cast<std::size_t>(g) * order + h]; }
  int inv(int g) const { return inverse[g]; }
  int conj(int g, int k) const { return mul(mul(k, g), inv(k)); }  // k g k^-1
  long exponent() const;
  std::string label_of(int g) const;
};

/// from_cayley_table: validates closure, associativity, identity, inverses;
/// relabels so the identity sits at index 0.
/// Error kinds: NotAssociative, NoIdentity, NoInverse (witness in message).
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);

/// Closure of permutation generators on {0..degree-1} under composition.
/// Returns the abstract group and the permutation realizing each element.
/// Error kind ClosureCapExceeded when the closure grows past the cap.
std::pair<FiniteGroup, std::vector<std::vector<int>>> from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators,
    std::size_t closure_cap = 1000000);

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);
/// Error kind DifferentParents when the two subgroups disagree on the parent.
Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2);
bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer);

struct ConjClasses {
  std::vector<int> class_of;       // element -> class index
  std::vector<int> reps;           // minimal element per class; class 0 = identity
  std::vector<int> sizes;
  std::vector<int> inverse_class;  // class of g^-1 for g in class c
};

ConjClasses conjugacy_classes(const FiniteGroup& g);

/// A subgroup packaged with its own group structure: local Cayley table,
/// element translation maps and conjugacy classes. Character-table and
/// class-function code works on these uniformly (the full group is the
/// special case to_parent = id).
struct SubgroupCtx {
  Subgroup sub;
  FiniteGroup local;
  std::vector<int> to_parent;    // local index -> parent element
  std::vector<int> from_parent;  // parent element -> local index, -1 outside
  ConjClasses classes;

  int order() const { return local.order; }
  int num_classes() const { return static_cast<int>(classes.reps.size()); }
  int local_of(int parent_elem) const;  // throws NotASubgroup if outside
};

using SubgroupCtxPtr = std::shared_ptr<const SubgroupCtx>;

SubgroupCtxPtr make_subgroup_ctx(Subgroup sub);
SubgroupCtxPtr full_group_ctx(const FiniteGroup& g);

/// A small deterministic generating sequence: greedily add the least
/// element outside the closure so far.
std::vector<int> generating_set(const FiniteGroup& g);

/// Deterministic PRNG used everywhere a seeded choice is needed
/// (splitmix64; stable across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// uniform in [0, n)
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// How orbit representatives, transporters and pair representatives are
/// picked. Canonical choices make output reproducible; seeded choices
/// exercise the well-definedness of the construction.
struct FrameChoices {
  bool randomized = false;
  std::uint64_t seed = 0;
};

using PointAction = std::function<int(int point, int g)>;

/// Orbit data of a right action of G on {0..n_points-1}:
/// representatives, transporters kappa with rep^(kappa_i) = i, and
/// per-point stabilizers.
struct OrbitFrame {
  int n_points = 0;
  std::vector<std::vector<int>> orbits;   // each sorted; sorted by min element
  std::vector<int> reps;                  // chosen representative per orbit
  std::vector<int> orbit_of;              // point -> orbit index
  std::vector<int> kappa;                 // point -> transporter from its rep
  std::vector<Subgroup> stabilizer;       // per point
};

/// Validates the action (identity + composition law; exhaustive for
/// |G| * n_points <= 40000, sampled above). Error kind NotAnAction with a
/// witness pair. Canonical choices: rep = least point of the orbit,
/// kappa_i = least g with rep^g = i.
OrbitFrame orbit_frame(const FiniteGroup& g, int n_points, const PointAction& action,
                       const FrameChoices& choices = {});

/// For each ordered pair of orbit representatives (by orbit index), one
/// representative pair per orbit of the diagonal action on O_i x O_j.
/// Canonical choice: lexicographically minimal pair.
struct PairOrbitReps {
  int n_orbits = 0;
  // [i_orbit][j_orbit] -> representative pairs, sorted
  std::vector<std::vector<std::vector<std::pair<int, int>>>> reps;
};

PairOrbitReps diagonal_pair_reps(const FiniteGroup& g, const OrbitFrame& frame,
                                 const PointAction& action, const FrameChoices& choices = {});

/// Every subgroup, found by closing generator sets element by element.
/// Meant for the small zoo groups (|G| <= 24) used in tests and the
/// random-instance generator.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace skewq

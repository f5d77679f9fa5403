#pragma once

#include "skewq/preprojective.hpp"
#include "skewq/skew.hpp"

namespace skewq {

/// The arrow bimodule MG = M (x) k[G] over F_p, materialized on the basis
/// {(arrow, group element)} with the skew multiplication:
///   (a (x) g)(1 (x) h) = a (x) gh
///   (1 (x) h)(a (x) g) = a^(h^-1) (x) hg
/// Left/right multiplications are stored as sparse column maps.
struct ExplicitBimodule {
  const Quiver* quiver = nullptr;
  const FiniteGroup* group = nullptr;
  std::uint32_t p = 0;
  int n_arrows = 0;
  int order = 0;
  int dim = 0;  // n_arrows * order

  using SparseCol = std::vector<std::pair<int, std::uint32_t>>;
  std::vector<std::vector<SparseCol>> left_cols;   // [h][column] -> entries
  std::vector<std::vector<SparseCol>> right_cols;  // [h][column] -> entries
  std::vector<std::vector<int>> vertex_perm;       // copied from the action

  int index(int arrow, int g) const { return arrow * order + g; }
  int arrow_of(int idx) const { return idx / order; }
  int elem_of(int idx) const { return idx % order; }

  std::vector<std::uint32_t> apply_left(int h, const std::vector<std::uint32_t>& v) const;
  std::vector<std::uint32_t> apply_right(int h, const std::vector<std::uint32_t>& v) const;
};

/// Builds the bimodule and checks the defining relations
/// (compatibility of left and right multiplication on sample pairs).
ExplicitBimodule build_explicit(const Quiver& q, const FiniteGroup& g, const ActionModP& act,
                                const PrimeEmbedding& e);

/// Coefficients of the central (isotypic) idempotent of an irreducible:
/// pairs (parent element, deg/|H| * chi(h^-1)).
std::vector<std::pair<int, std::uint32_t>> central_projector_coeffs(const CharacterTable& table,
                                                                    int irr,
                                                                    const PrimeField& f);

/// Basis column indices of e_j (MG) e_i for orbit representatives.
std::vector<int> bimodule_block(const ExplicitBimodule& bim, const FoldResult& fold, int orbit_i,
                                int orbit_j);

/// The formula-independent count: restrict to e_j (MG) e_i, project by the
/// central idempotents of rho (right) and sigma (left), take the rank and
/// divide by deg rho * deg sigma. Error kind NonIntegerCount would
/// contradict the semisimple bimodule decomposition (guard).
long long oracle_arrow_count(const ExplicitBimodule& bim, const FoldResult& fold, int orbit_i,
                             int rho, int orbit_j, int sigma);

/// All counts at once, indexed like SkewQuiver::mult.
std::vector<std::vector<long long>> oracle_all_counts(const ExplicitBimodule& bim,
                                                      const FoldResult& fold);

/// The extended skew form on the doubled bimodule:
/// <m (x) g, n (x) h> = <m, n^h> when gh = 1, else 0.
ModMatrix extended_form(const ExplicitBimodule& bim, const DoubleQuiver& dq,
                        const PrimeEmbedding& e, const ActionModP& act);

/// Expands the preprojective relation of the extended form inside
/// MG (x)_{RG} MG term by term and compares it with #G times the base
/// relation under the canonical inclusion.
bool verify_rg(const ExplicitBimodule& bim, const DoubleQuiver& dq, const PrimeEmbedding& e,
               const ActionModP& act);

/// A maximal isotropic splitting of a non-degenerate skew form, organized
/// along dual block pairs. u columns span a maximal isotropic subspace;
/// <u_k, v_l> = delta_kl within each pair of dual blocks.
struct IsotropicPair {
  int block_a = 0, block_b = 0;  // indices into the caller's block list
  ModMatrix u, v;                // ambient columns
};

/// block_basis[k]: ambient basis columns of block k;
/// dual_of[k]: the block paired with k by the form (an involution).
/// Error kind DegenerateForm when a pairing degenerates.
std::vector<IsotropicPair> maximal_isotropic_split(const ModMatrix& form,
                                                   const std::vector<ModMatrix>& block_basis,
                                                   const std::vector<int>& dual_of);

/// Ambient bases of the isotypic blocks E_w e_j (MG) e_i E_v for all
/// ordered pairs of skew vertices (v, w), for use with the extended form.
std::vector<std::vector<ModMatrix>> projected_block_bases(const ExplicitBimodule& bim,
                                                          const FoldResult& fold);

}  // namespace skewq

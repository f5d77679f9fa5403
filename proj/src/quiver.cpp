#include "skewq/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "skewq/error.hpp"

namespace skewq {

std::string Quiver::vertex_label(int v) const {
  if (v >= 0 && v < static_cast<int>(vertex_labels.size()) && !vertex_labels[v].empty())
    return vertex_labels[v];
  return std::to_string(v);
}

std::vector<int> Quiver::arrows_between(int i, int j) const {
  std::vector<int> ids;
  for (const Arrow& a : arrows)
    if (a.source == i && a.target == j) ids.push_back(a.id);
  return ids;
}

Quiver opposite_quiver(const Quiver& q) {
  Quiver r = q;
  for (Arrow& a : r.arrows) std::swap(a.source, a.target);
  return r;
}

LinearQuiverAction trivial_action(const FiniteGroup& g, const Quiver& q) {
  LinearQuiverAction act;
  act.group = &g;
  act.level = 1;
  std::vector<int> id_perm(q.n_vertices);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  act.vertex_perm.assign(g.order, id_perm);
  act.arrow_matrix.assign(g.order, CycloMatrix::identity(static_cast<int>(q.arrows.size())));
  return act;
}

LinearQuiverAction action_from_generators(const FiniteGroup& g, const Quiver& q, long level,
                                          const std::vector<int>& generator_elements,
                                          const std::vector<std::vector<int>>& vertex_perms,
                                          const std::vector<CycloMatrix>& arrow_matrices) {
  const int m = static_cast<int>(q.arrows.size());
  if (generator_elements.size() != vertex_perms.size() ||
      generator_elements.size() != arrow_matrices.size())
    fail_input("NotAnAction", "generator data lists have different lengths");
  for (std::size_t k = 0; k < generator_elements.size(); ++k) {
    if (static_cast<int>(vertex_perms[k].size()) != q.n_vertices)
      fail_input("NotAnAction", "vertex permutation has wrong degree");
    if (arrow_matrices[k].rows() != m || arrow_matrices[k].cols() != m)
      fail_input("NotAnAction", "arrow matrix has wrong shape");
  }

  LinearQuiverAction act;
  act.group = &g;
  act.level = level;
  act.vertex_perm.assign(g.order, {});
  act.arrow_matrix.assign(g.order, CycloMatrix());
  std::vector<bool> known(g.order, false);

  std::vector<int> id_perm(q.n_vertices);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  act.vertex_perm[0] = id_perm;
  act.arrow_matrix[0] = CycloMatrix::identity(m);
  known[0] = true;

  auto define = [&](int elem, const std::vector<int>& perm, const CycloMatrix& mat,
                    const std::string& how) {
    if (!known[elem]) {
      act.vertex_perm[elem] = perm;
      act.arrow_matrix[elem] = mat;
      known[elem] = true;
      return true;
    }
    if (act.vertex_perm[elem] != perm || act.arrow_matrix[elem] != mat)
      fail_input("NotAnAction",
                 "generator data violates a group relation at element " + g.label_of(elem) +
                     " (" + how + ")");
    return false;
  };

  for (std::size_t k = 0; k < generator_elements.size(); ++k)
    define(generator_elements[k], vertex_perms[k], arrow_matrices[k], "generator definition");

  // breadth-first products: x known, s a generator -> x*s
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x = 0; x < g.order; ++x) {
      if (!known[x]) continue;
      for (std::size_t k = 0; k < generator_elements.size(); ++k) {
        const int s = generator_elements[k];
        const int xs = g.mul(x, s);
        // right action: T(x s) = T(s) T(x), perms compose the same way
        std::vector<int> perm(q.n_vertices);
        for (int v = 0; v < q.n_vertices; ++v) perm[v] = vertex_perms[k][act.vertex_perm[x][v]];
        CycloMatrix mat = arrow_matrices[k] * act.arrow_matrix[x];
        if (define(xs, perm, mat,
                   "product " + g.label_of(x) + " * " + g.label_of(s)))
          progress = true;
      }
    }
  }
  for (int x = 0; x < g.order; ++x)
    if (!known[x])
      fail_input("NotAnAction",
                 "generators do not generate the group (element " + g.label_of(x) +
                     " unreachable)");
  return act;
}

std::vector<ActionViolation> validate_action(const Quiver& q, const LinearQuiverAction& act) {
  std::vector<ActionViolation> out;
  const FiniteGroup& g = *act.group;
  const int m = static_cast<int>(q.arrows.size());
  if (static_cast<int>(act.vertex_perm.size()) != g.order ||
      static_cast<int>(act.arrow_matrix.size()) != g.order) {
    out.push_back({"action tables do not cover the group"});
    return out;
  }
  for (int x = 0; x < g.order; ++x) {
    if (static_cast<int>(act.vertex_perm[x].size()) != q.n_vertices ||
        act.arrow_matrix[x].rows() != m || act.arrow_matrix[x].cols() != m) {
      out.push_back({"shape mismatch at element " + g.label_of(x)});
      return out;
    }
  }

  // identity
  for (int v = 0; v < q.n_vertices; ++v)
    if (act.vertex_perm[0][v] != v) {
      out.push_back({"identity moves vertex " + std::to_string(v)});
      break;
    }
  if (act.arrow_matrix[0] != CycloMatrix::identity(m))
    out.push_back({"identity does not act as the identity matrix"});

  // vertex permutations are bijections
  for (int x = 0; x < g.order; ++x) {
    std::vector<bool> seen(q.n_vertices, false);
    for (int v : act.vertex_perm[x]) {
      if (v < 0 || v >= q.n_vertices || seen[v]) {
        out.push_back({"vertex map of " + g.label_of(x) + " is not a permutation"});
        break;
      }
      seen[v] = true;
    }
  }

  // composition law, exhaustive for small groups
  auto check_pair = [&](int a, int b) {
    const int ab = g.mul(a, b);
    for (int v = 0; v < q.n_vertices; ++v) {
      if (act.vertex_perm[ab][v] != act.vertex_perm[b][act.vertex_perm[a][v]]) {
        out.push_back({"vertex composition fails for (" + g.label_of(a) + "," + g.label_of(b) +
                       ") at vertex " + std::to_string(v)});
        return;
      }
    }
    if (act.arrow_matrix[ab] != act.arrow_matrix[b] * act.arrow_matrix[a])
      out.push_back({"arrow composition fails for (" + g.label_of(a) + "," + g.label_of(b) + ")"});
  };
  if (g.order <= 48) {
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) check_pair(a, b);
  } else {
    std::vector<int> gens = generating_set(g);
    for (int a : gens)
      for (int b = 0; b < g.order; ++b) check_pair(b, a);
    Rng rng(0xac710eull);
    for (int t = 0; t < 512; ++t)
      check_pair(static_cast<int>(rng.below(g.order)), static_cast<int>(rng.below(g.order)));
  }

  // block support: image of an arrow i -> j lives on arrows i^g -> j^g
  for (int x = 0; x < g.order && out.size() < 64; ++x) {
    for (const Arrow& a : q.arrows) {
      const int si = act.vertex_perm[x][a.source];
      const int ti = act.vertex_perm[x][a.target];
      for (const Arrow& b : q.arrows) {
        if (act.arrow_matrix[x].at(b.id, a.id).is_zero()) continue;
        if (b.source != si || b.target != ti) {
          out.push_back({"arrow " + a.label + " under " + g.label_of(x) +
                         " leaves its block (hits " + b.label + ")"});
          break;
        }
      }
    }
  }

  // invertibility via the group inverse
  for (int x = 0; x < g.order; ++x) {
    if (act.arrow_matrix[g.inv(x)] * act.arrow_matrix[x] != CycloMatrix::identity(m)) {
      out.push_back({"matrix of " + g.label_of(x) + " is not inverted by " +
                     g.label_of(g.inv(x))});
      break;
    }
  }
  return out;
}

ModMatrix ArrowBlock::matrix_of_parent(int parent_elem) const {
  return matrices[stabilizer_pair->local_of(parent_elem)];
}

ArrowBlock arrow_block(const Quiver& q, const LinearQuiverAction& act, const PrimeEmbedding& e,
                       int i, int j) {
  const FiniteGroup& g = *act.group;
  ArrowBlock blk;
  blk.source = i;
  blk.target = j;
  blk.arrow_ids = q.arrows_between(i, j);
  std::vector<int> stab;
  for (int x = 0; x < g.order; ++x)
    if (act.vertex_perm[x][i] == i && act.vertex_perm[x][j] == j) stab.push_back(x);
  blk.stabilizer_pair = make_subgroup_ctx(Subgroup{&g, std::move(stab)});
  blk.matrices.reserve(blk.stabilizer_pair->order());
  for (int loc = 0; loc < blk.stabilizer_pair->order(); ++loc) {
    const int x = blk.stabilizer_pair->to_parent[loc];
    ModMatrix m(blk.dim(), blk.dim(), e.field.p());
    for (int c = 0; c < blk.dim(); ++c) {
      for (const Arrow& b : q.arrows) {
        const CycloNumber& v = act.arrow_matrix[x].at(b.id, blk.arrow_ids[c]);
        if (v.is_zero()) continue;
        auto row = std::find(blk.arrow_ids.begin(), blk.arrow_ids.end(), b.id);
        if (row == blk.arrow_ids.end())
          fail_guard("BlockNotStable", "arrow block (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") moves under " + g.label_of(x));
        m.at(static_cast<int>(row - blk.arrow_ids.begin()), c) = embed(v, e);
      }
    }
    blk.matrices.push_back(std::move(m));
  }
  return blk;
}

ActionModP embed_action(const LinearQuiverAction& act, const PrimeEmbedding& e) {
  ActionModP r;
  r.vertex_perm = act.vertex_perm;
  r.arrow_matrix.reserve(act.arrow_matrix.size());
  for (const CycloMatrix& m : act.arrow_matrix) r.arrow_matrix.push_back(embed_matrix(m, e));
  return r;
}

ModMatrix submatrix(const ModMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  ModMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.p());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return r;
}

}  // namespace skewq

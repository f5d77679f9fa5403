#include "skewq/chartable.hpp"

#include <algorithm>
#include <map>

#include "skewq/error.hpp"

namespace skewq {

std::uint32_t ClassFunction::eval_parent(int parent_elem) const {
  return values[dom->classes.class_of[dom->local_of(parent_elem)]];
}

std::optional<int> CharacterTable::find(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i].values == chi.values) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

// --- dense polynomials over F_p, little-endian coefficients ---

using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, const PrimeField& f) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  // reduce by mod (monic not required; normalize by leading inverse)
  if (!mod.empty() && r.size() >= mod.size()) {
    const std::uint32_t lead_inv = f.inv(mod.back());
    for (std::size_t i = r.size(); i-- >= mod.size() && i + 1 >= mod.size();) {
      if (r[i] == 0) {
        if (i + 1 == mod.size()) break;
        continue;
      }
      std::uint32_t c = f.mul(r[i], lead_inv);
      for (std::size_t k = 0; k < mod.size(); ++k)
        r[i - mod.size() + 1 + k] = f.sub(r[i - mod.size() + 1 + k], f.mul(c, mod[k]));
      if (i + 1 == mod.size()) break;
    }
  }
  poly_trim(r);
  return r;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, const PrimeField& f) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, mod, f);
    base = poly_mul_mod(base, base, mod, f);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    const std::uint32_t lead_inv = f.inv(b.back());
    Poly r = a;
    for (std::size_t i = r.size(); i-- >= b.size() && i + 1 >= b.size();) {
      if (r[i] != 0) {
        std::uint32_t c = f.mul(r[i], lead_inv);
        for (std::size_t k = 0; k < b.size(); ++k)
          r[i - b.size() + 1 + k] = f.sub(r[i - b.size() + 1 + k], f.mul(c, b[k]));
      }
      if (i + 1 == b.size()) break;
    }
    poly_trim(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint32_t inv = f.inv(a.back());
    for (std::uint32_t& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly poly_div_exact_fp(const Poly& num, const Poly& den, const PrimeField& f) {
  Poly r = num, q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  const std::uint32_t lead_inv = f.inv(den.back());
  for (std::size_t i = r.size(); i-- >= den.size() && i + 1 >= den.size();) {
    std::uint32_t c = f.mul(r[i], lead_inv);
    q[i - den.size() + 1] = c;
    if (c != 0)
      for (std::size_t k = 0; k < den.size(); ++k)
        r[i - den.size() + 1 + k] = f.sub(r[i - den.size() + 1 + k], f.mul(c, den[k]));
    if (i + 1 == den.size()) break;
  }
  return q;
}

// All roots of a squarefree polynomial that splits into linear factors
// over F_p. Equal-degree splitting with a deterministic shift scan.
void poly_roots_rec(const Poly& f, const PrimeField& fld, std::vector<std::uint32_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(fld.mul(fld.neg(f[0]), fld.inv(f[1])));
    return;
  }
  for (std::uint32_t delta = 0;; ++delta) {
    if (delta >= fld.p())
      fail_guard("SplitFailure", "root isolation failed; polynomial does not split");
    Poly shift{delta, 1};
    Poly h = poly_pow_mod(shift, (fld.p() - 1) / 2, f, fld);
    if (h.empty())
      h = {fld.p() - 1};  // (x+delta)^((p-1)/2) = 0 mod f: delta hits a root
    else
      h[0] = fld.sub(h[0], 1);
    poly_trim(h);
    Poly g = poly_gcd(h, f, fld);
    if (!g.empty() && g.size() > 1 && g.size() < f.size()) {
      poly_roots_rec(g, fld, out);
      poly_roots_rec(poly_div_exact_fp(f, g, fld), fld, out);
      return;
    }
  }
}

std::vector<std::uint32_t> poly_roots(Poly f, const PrimeField& fld) {
  poly_trim(f);
  std::vector<std::uint32_t> out;
  if (!f.empty() && f[0] == 0) {
    out.push_back(0);
    f.erase(f.begin());
  }
  poly_roots_rec(f, fld, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal polynomial of the vector v under the matrix B (annihilator of
// the Krylov sequence), via echelonized Krylov vectors with tracked
// combination coefficients.
Poly min_poly_of_vector(const ModMatrix& b, std::vector<std::uint32_t> v, const PrimeField& f) {
  const int s = b.rows();
  std::vector<std::vector<std::uint32_t>> rows;    // reduced Krylov vectors
  std::vector<Poly> combos;                        // row = sum combo[j] B^j v0
  std::vector<int> lead;                           // leading index per row
  std::vector<std::uint32_t> cur = std::move(v);
  Poly combo{1};
  for (int step = 0; step <= s; ++step) {
    std::vector<std::uint32_t> w = cur;
    Poly c = combo;
    for (std::size_t rix = 0; rix < rows.size(); ++rix) {
      if (w[lead[rix]] == 0) continue;
      const std::uint32_t factor = w[lead[rix]];
      for (int k = 0; k < s; ++k) w[k] = f.sub(w[k], f.mul(factor, rows[rix][k]));
      if (c.size() < combos[rix].size()) c.resize(combos[rix].size(), 0);
      for (std::size_t k = 0; k < combos[rix].size(); ++k)
        c[k] = f.sub(c[k], f.mul(factor, combos[rix][k]));
    }
    int l = -1;
    for (int k = 0; k < s; ++k)
      if (w[k] != 0) {
        l = k;
        break;
      }
    if (l < 0) {
      poly_trim(c);
      // make monic
      const std::uint32_t inv = f.inv(c.back());
      for (std::uint32_t& x : c) x = f.mul(x, inv);
      return c;
    }
    const std::uint32_t inv = f.inv(w[l]);
    for (int k = 0; k < s; ++k) w[k] = f.mul(w[k], inv);
    for (std::uint32_t& x : c) x = f.mul(x, inv);
    rows.push_back(w);
    combos.push_back(c);
    lead.push_back(l);
    // next Krylov vector: B * cur, combo shifts by one power
    std::vector<std::uint32_t> nxt(s, 0);
    for (int i = 0; i < s; ++i) {
      std::uint64_t acc = 0;
      for (int k = 0; k < s; ++k)
        acc = (acc + static_cast<std::uint64_t>(b.at(i, k)) * cur[k]) % f.p();
      nxt[i] = static_cast<std::uint32_t>(acc);
    }
    cur = std::move(nxt);
    combo.insert(combo.begin(), 0);
  }
  fail_guard("SplitFailure", "Krylov sequence did not terminate");
}

// Distinct eigenvalues of a diagonalizable matrix over F_p: union of the
// roots of the minimal polynomials of the standard basis vectors.
std::vector<std::uint32_t> all_eigenvalues(const ModMatrix& b, const PrimeField& f) {
  const int s = b.rows();
  std::vector<std::uint32_t> eigs;
  for (int k = 0; k < s; ++k) {
    std::vector<std::uint32_t> e(s, 0);
    e[k] = 1;
    Poly mp = min_poly_of_vector(b, std::move(e), f);
    for (std::uint32_t r : poly_roots(mp, f)) eigs.push_back(r);
  }
  std::sort(eigs.begin(), eigs.end());
  eigs.erase(std::unique(eigs.begin(), eigs.end()), eigs.end());
  return eigs;
}

struct DlogKey {
  int cls;  // 0: zero, 1: in <omega>, 2: other
  long val;
  bool operator<(const DlogKey& o) const {
    return cls != o.cls ? cls < o.cls : val < o.val;
  }
};

DlogKey dlog_key(std::uint32_t x, const PrimeEmbedding& e) {
  if (x == 0) return {0, 0};
  if (auto d = e.dlog(x)) return {1, *d};
  return {2, static_cast<long>(x)};
}

}  // namespace

CharacterTable compute_character_table(SubgroupCtxPtr ctx, const PrimeEmbedding& e) {
  const PrimeField& f = e.field;
  const FiniteGroup& h = ctx->local;
  const ConjClasses& cls = ctx->classes;
  const int r = static_cast<int>(cls.reps.size());
  if ((f.p() - 1) % static_cast<std::uint32_t>(h.exponent()) != 0)
    fail_guard("SplitFailure", "prime does not split the subgroup exponent");

  // class member lists and structure constants a_{ijk}
  std::vector<std::vector<int>> members(r);
  for (int x = 0; x < h.order; ++x) members[cls.class_of[x]].push_back(x);
  std::vector<ModMatrix> class_mat(r);
  for (int i = 0; i < r; ++i) {
    ModMatrix m(r, r, f.p());
    std::vector<long long> count(r, 0);
    // a_{ijk}: products of class i with class j landing in class k
    for (int j = 0; j < r; ++j) {
      std::fill(count.begin(), count.end(), 0);
      for (int x : members[i])
        for (int y : members[j]) ++count[cls.class_of[h.mul(x, y)]];
      for (int k = 0; k < r; ++k) {
        long long a = count[k] / cls.sizes[k];
        m.at(j, k) = f.from_ll(a);
      }
    }
    class_mat[i] = std::move(m);
  }

  // iteratively split common eigenspaces; blocks are column-basis matrices
  std::vector<ModMatrix> blocks{ModMatrix::identity(r, f.p())};
  for (int i = 1; i < r; ++i) {
    bool all_split = true;
    for (const ModMatrix& w : blocks) all_split = all_split && w.cols() == 1;
    if (all_split) break;
    std::vector<ModMatrix> next;
    for (ModMatrix& w : blocks) {
      if (w.cols() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      auto restricted = solve(w, class_mat[i] * w);
      if (!restricted)
        fail_guard("SplitFailure", "class matrix does not preserve a common eigenspace");
      const ModMatrix& a = *restricted;
      int covered = 0;
      for (std::uint32_t lambda : all_eigenvalues(a, f)) {
        ModMatrix shifted = a - ModMatrix::identity(a.rows(), f.p()).scaled(lambda);
        ModMatrix ker = kernel_basis(shifted);
        if (ker.cols() == 0) continue;
        next.push_back(w * ker);
        covered += ker.cols();
      }
      if (covered != w.cols())
        fail_guard("SplitFailure", "eigenspaces do not fill a block (not diagonalizable)");
    }
    blocks = std::move(next);
  }
  for (const ModMatrix& w : blocks)
    if (w.cols() != 1)
      fail_guard("SplitFailure", "class matrices failed to separate characters");

  // normalize each eigenvector to omega-values and recover the character
  CharacterTable table;
  table.dom = ctx;
  table.p = f.p();
  for (const ModMatrix& w : blocks) {
    std::vector<std::uint32_t> omega(r);
    if (w.at(0, 0) == 0)
      fail_guard("SplitFailure", "eigenvector vanishes on the identity class");
    const std::uint32_t norm = f.inv(w.at(0, 0));
    for (int j = 0; j < r; ++j) omega[j] = f.mul(w.at(j, 0), norm);
    // degree from the second orthogonality relation
    std::uint32_t s = 0;
    for (int j = 0; j < r; ++j)
      s = f.add(s, f.mul(f.mul(omega[j], omega[cls.inverse_class[j]]),
                         f.inv(f.from_ll(cls.sizes[j]))));
    const std::uint32_t d2 = f.mul(f.from_ll(h.order), f.inv(s));
    int degree = 0;
    for (int d = 1; static_cast<long long>(d) * d <= h.order; ++d) {
      if (f.from_ll(static_cast<long long>(d) * d) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) fail_guard("SplitFailure", "character degree is not a small integer");
    ClassFunction chi;
    chi.dom = ctx;
    chi.p = f.p();
    chi.values.resize(r);
    for (int j = 0; j < r; ++j)
      chi.values[j] = f.mul(f.from_ll(degree), f.mul(omega[j], f.inv(f.from_ll(cls.sizes[j]))));
    table.irreducibles.push_back(std::move(chi));
    table.degrees.push_back(degree);
  }

  // deterministic order: by degree, then lexicographic on the value vector
  // keyed by discrete log base omega
  std::vector<int> order(table.irreducibles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    for (int j = 0; j < r; ++j) {
      DlogKey ka = dlog_key(table.irreducibles[a].values[j], e);
      DlogKey kb = dlog_key(table.irreducibles[b].values[j], e);
      if (kb < ka || ka < kb) return ka < kb;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.dom = ctx;
  sorted.p = f.p();
  for (int i : order) {
    sorted.irreducibles.push_back(std::move(table.irreducibles[i]));
    sorted.degrees.push_back(table.degrees[i]);
  }

  // construction-time invariants
  if (static_cast<int>(sorted.irreducibles.size()) != r)
    fail_guard("SplitFailure", "irreducible count differs from class count");
  long long degree_sum = 0;
  for (int d : sorted.degrees) degree_sum += static_cast<long long>(d) * d;
  if (degree_sum != h.order)
    fail_guard("SplitFailure", "sum of squared degrees misses the group order");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long ip = inner_product(sorted.irreducibles[i], sorted.irreducibles[j]);
      if (ip != (i == j ? 1 : 0))
        fail_guard("SplitFailure", "row orthogonality fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
    }
  for (std::uint32_t v : sorted.irreducibles[0].values)
    if (v != 1) fail_guard("SplitFailure", "first character is not trivial");
  return sorted;
}

long long inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.dom != psi.dom)
    fail_input("DifferentParents", "inner product needs class functions on one subgroup");
  const PrimeField f(chi.p);
  const ConjClasses& cls = chi.dom->classes;
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j < cls.reps.size(); ++j)
    acc = f.add(acc, f.mul(f.from_ll(cls.sizes[j]),
                           f.mul(chi.values[j], psi.values[cls.inverse_class[j]])));
  return f.mul(acc, f.inv(f.from_ll(chi.dom->order())));
}

ClassFunction pointwise_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.dom != psi.dom)
    fail_input("DifferentParents", "pointwise product needs class functions on one subgroup");
  ClassFunction r = chi;
  const PrimeField f(chi.p);
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] = f.mul(r.values[j], psi.values[j]);
  return r;
}

ClassFunction restrict_to(const ClassFunction& chi, const SubgroupCtxPtr& sub) {
  if (chi.dom->sub.parent != sub->sub.parent)
    fail_input("NotASubgroup", "restriction target lives in a different group");
  for (int e : sub->sub.elements)
    if (chi.dom->from_parent[e] < 0)
      fail_input("NotASubgroup", "restriction target is not contained in the domain");
  ClassFunction r;
  r.dom = sub;
  r.p = chi.p;
  r.values.resize(sub->num_classes());
  for (int c = 0; c < sub->num_classes(); ++c)
    r.values[c] = chi.eval_parent(sub->to_parent[sub->classes.reps[c]]);
  return r;
}

ClassFunction conjugate_twist(const ClassFunction& chi, int kappa, const SubgroupCtxPtr& target) {
  const FiniteGroup& g = *target->sub.parent;
  for (int e : target->sub.elements)
    if (chi.dom->from_parent[g.conj(e, kappa)] < 0)
      fail_input("ConjugationMismatch",
                 "kappa does not conjugate the target into the domain (element " +
                     std::to_string(e) + ")");
  ClassFunction r;
  r.dom = target;
  r.p = chi.p;
  r.values.resize(target->num_classes());
  for (int c = 0; c < target->num_classes(); ++c) {
    int rep = target->to_parent[target->classes.reps[c]];
    r.values[c] = chi.eval_parent(g.conj(rep, kappa));
  }
  return r;
}

ClassFunction twist_restrict(const ClassFunction& chi, int kappa, const SubgroupCtxPtr& sub) {
  const FiniteGroup& g = *sub->sub.parent;
  ClassFunction r;
  r.dom = sub;
  r.p = chi.p;
  r.values.resize(sub->num_classes());
  for (int c = 0; c < sub->num_classes(); ++c) {
    int rep = sub->to_parent[sub->classes.reps[c]];
    r.values[c] = chi.eval_parent(g.conj(rep, kappa));
  }
  return r;
}

ClassFunction action_character(const SubgroupCtxPtr& ctx,
                               const std::function<ModMatrix(int)>& matrix_of) {
  std::vector<int> gens = generating_set(ctx->local);
  for (int a : gens)
    for (int b : gens) {
      int ab = ctx->local.mul(a, b);
      ModMatrix lhs = matrix_of(ctx->to_parent[ab]);
      ModMatrix rhs = matrix_of(ctx->to_parent[b]) * matrix_of(ctx->to_parent[a]);
      if (lhs != rhs)
        fail_input("NotARepresentation", "composition law fails on generator pair (" +
                                             std::to_string(a) + "," + std::to_string(b) + ")");
    }
  ClassFunction r;
  r.dom = ctx;
  r.values.resize(ctx->num_classes());
  std::uint32_t p = 0;
  for (int c = 0; c < ctx->num_classes(); ++c) {
    ModMatrix m = matrix_of(ctx->to_parent[ctx->classes.reps[c]]);
    r.values[c] = m.trace();
    p = m.p();
  }
  r.p = p;
  return r;
}

ClassFunction trivial_character(const SubgroupCtxPtr& ctx, std::uint32_t p) {
  ClassFunction r;
  r.dom = ctx;
  r.p = p;
  r.values.assign(ctx->num_classes(), 1);
  return r;
}

}  // namespace skewq

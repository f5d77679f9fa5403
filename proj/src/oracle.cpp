#include "skewq/oracle.hpp"

#include <algorithm>

#include "skewq/error.hpp"

namespace skewq {

std::vector<std::uint32_t> ExplicitBimodule::apply_left(
    int h, const std::vector<std::uint32_t>& v) const {
  const PrimeField f(p);
  std::vector<std::uint32_t> r(dim, 0);
  for (int c = 0; c < dim; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [row, val] : left_cols[h][c]) r[row] = f.add(r[row], f.mul(val, v[c]));
  }
  return r;
}

std::vector<std::uint32_t> ExplicitBimodule::apply_right(
    int h, const std::vector<std::uint32_t>& v) const {
  const PrimeField f(p);
  std::vector<std::uint32_t> r(dim, 0);
  for (int c = 0; c < dim; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [row, val] : right_cols[h][c]) r[row] = f.add(r[row], f.mul(val, v[c]));
  }
  return r;
}

ExplicitBimodule build_explicit(const Quiver& q, const FiniteGroup& g, const ActionModP& act,
                                const PrimeEmbedding& e) {
  ExplicitBimodule bim;
  bim.quiver = &q;
  bim.group = &g;
  bim.p = e.field.p();
  bim.n_arrows = static_cast<int>(q.arrows.size());
  bim.order = g.order;
  bim.dim = bim.n_arrows * bim.order;
  bim.vertex_perm = act.vertex_perm;
  bim.left_cols.assign(g.order, {});
  bim.right_cols.assign(g.order, {});
  for (int h = 0; h < g.order; ++h) {
    auto& lcols = bim.left_cols[h];
    auto& rcols = bim.right_cols[h];
    lcols.assign(bim.dim, {});
    rcols.assign(bim.dim, {});
    const ModMatrix& t_hinv = act.arrow_matrix[g.inv(h)];
    for (int a = 0; a < bim.n_arrows; ++a) {
      for (int x = 0; x < g.order; ++x) {
        const int col = bim.index(a, x);
        rcols[col].emplace_back(bim.index(a, g.mul(x, h)), 1);
        // (1 (x) h)(a (x) x) = a^(h^-1) (x) h x
        for (int b = 0; b < bim.n_arrows; ++b) {
          const std::uint32_t v = t_hinv.at(b, a);
          if (v != 0) lcols[col].emplace_back(bim.index(b, g.mul(h, x)), v);
        }
      }
    }
  }

  // defining-relation spot checks on generators: left/right commute,
  // and both compose along the group law
  std::vector<int> gens = generating_set(g);
  gens.push_back(0);
  for (int h : gens) {
    for (int k : gens) {
      for (int probe = 0; probe < std::min(bim.dim, 8); ++probe) {
        std::vector<std::uint32_t> unit(bim.dim, 0);
        unit[(probe * 37) % bim.dim] = 1;
        auto lr = bim.apply_left(h, bim.apply_right(k, unit));
        auto rl = bim.apply_right(k, bim.apply_left(h, unit));
        if (lr != rl)
          fail_guard("BimoduleRelation", "left and right multiplications do not commute");
        auto ll = bim.apply_left(h, bim.apply_left(k, unit));
        auto lhk = bim.apply_left(g.mul(h, k), unit);
        if (ll != lhk) fail_guard("BimoduleRelation", "left multiplication breaks the group law");
      }
    }
  }
  return bim;
}

std::vector<std::pair<int, std::uint32_t>> central_projector_coeffs(const CharacterTable& table,
                                                                    int irr,
                                                                    const PrimeField& f) {
  const SubgroupCtx& ctx = *table.dom;
  const std::uint32_t scale =
      f.mul(f.from_ll(table.degrees[irr]), f.inv(f.from_ll(ctx.order())));
  std::vector<std::pair<int, std::uint32_t>> coeffs;
  coeffs.reserve(ctx.order());
  for (int loc = 0; loc < ctx.order(); ++loc) {
    const int inv_cls = ctx.classes.class_of[ctx.local.inv(loc)];
    coeffs.emplace_back(ctx.to_parent[loc],
                        f.mul(scale, table.irreducibles[irr].values[inv_cls]));
  }
  return coeffs;
}

std::vector<int> bimodule_block(const ExplicitBimodule& bim, const FoldResult& fold, int orbit_i,
                                int orbit_j) {
  const FiniteGroup& g = *bim.group;
  const int i = fold.frame.reps[orbit_i];
  const int j = fold.frame.reps[orbit_j];
  std::vector<int> block;
  for (int a = 0; a < bim.n_arrows; ++a) {
    const Arrow& arr = bim.quiver->arrows[a];
    if (arr.target != j) continue;
    for (int x = 0; x < bim.order; ++x)
      if (arr.source == bim.vertex_perm[g.inv(x)][i]) block.push_back(bim.index(a, x));
  }
  return block;
}

namespace {

// central projectors applied right (rho on G_i) then left (sigma on G_j),
// restricted to the block e_j (MG) e_i; returns the matrix in block coords
ModMatrix projected_matrix(const ExplicitBimodule& bim, const FoldResult& fold,
                           const std::vector<int>& block, int orbit_i, int rho, int orbit_j,
                           int sigma) {
  const FiniteGroup& g = *bim.group;
  const PrimeField f(bim.p);
  const int n = static_cast<int>(block.size());
  std::vector<int> pos(bim.dim, -1);
  for (int k = 0; k < n; ++k) pos[block[k]] = k;
  auto right_coeffs = central_projector_coeffs(fold.tables[orbit_i], rho, f);
  auto left_coeffs = central_projector_coeffs(fold.tables[orbit_j], sigma, f);

  // M1 = block * E_rho (right projector), block-local columns
  ModMatrix m1(n, n, bim.p);
  for (int c = 0; c < n; ++c) {
    const int a = bim.arrow_of(block[c]);
    const int x = bim.elem_of(block[c]);
    for (const auto& [h, coeff] : right_coeffs) {
      const int row = pos[bim.index(a, g.mul(x, h))];
      if (row < 0) fail_guard("BlockNotStable", "right stabilizer leaves the block");
      m1.at(row, c) = f.add(m1.at(row, c), coeff);
    }
  }
  ModMatrix image = column_space_basis(m1);

  // M2 = E_sigma * image (left projector)
  ModMatrix m2(n, image.cols(), bim.p);
  for (int c = 0; c < image.cols(); ++c) {
    for (int k = 0; k < n; ++k) {
      const std::uint32_t val = image.at(k, c);
      if (val == 0) continue;
      for (const auto& [h, coeff] : left_coeffs) {
        const std::uint32_t w = f.mul(val, coeff);
        if (w == 0) continue;
        for (const auto& [row_full, tval] : bim.left_cols[h][block[k]]) {
          const int row = pos[row_full];
          if (row < 0) fail_guard("BlockNotStable", "left stabilizer leaves the block");
          m2.at(row, c) = f.add(m2.at(row, c), f.mul(w, tval));
        }
      }
    }
  }
  return m2;
}

}  // namespace

long long oracle_arrow_count(const ExplicitBimodule& bim, const FoldResult& fold, int orbit_i,
                             int rho, int orbit_j, int sigma) {
  const std::vector<int> block = bimodule_block(bim, fold, orbit_i, orbit_j);
  if (block.empty()) return 0;
  ModMatrix m2 = projected_matrix(bim, fold, block, orbit_i, rho, orbit_j, sigma);
  const long long r = rank(m2);
  const long long dd = static_cast<long long>(fold.tables[orbit_i].degrees[rho]) *
                       fold.tables[orbit_j].degrees[sigma];
  if (r % dd != 0)
    fail_guard("NonIntegerCount", "projected rank " + std::to_string(r) +
                                      " is not divisible by the degree product " +
                                      std::to_string(dd));
  return r / dd;
}

std::vector<std::vector<long long>> oracle_all_counts(const ExplicitBimodule& bim,
                                                      const FoldResult& fold) {
  const int n = fold.skew.size();
  std::vector<std::vector<long long>> counts(n, std::vector<long long>(n, 0));
  const int n_orbits = static_cast<int>(fold.frame.orbits.size());
  for (int oi = 0; oi < n_orbits; ++oi) {
    for (int oj = 0; oj < n_orbits; ++oj) {
      const std::vector<int> block = bimodule_block(bim, fold, oi, oj);
      if (block.empty()) continue;
      for (int rho = 0; rho < fold.tables[oi].size(); ++rho)
        for (int sigma = 0; sigma < fold.tables[oj].size(); ++sigma)
          counts[fold.vertex_index(oi, rho)][fold.vertex_index(oj, sigma)] =
              oracle_arrow_count(bim, fold, oi, rho, oj, sigma);
    }
  }
  return counts;
}

ModMatrix extended_form(const ExplicitBimodule& bim, const DoubleQuiver& dq,
                        const PrimeEmbedding& e, const ActionModP& act) {
  const FiniteGroup& g = *bim.group;
  const SymplecticData sd = symplectic_data(dq, e);
  ModMatrix form(bim.dim, bim.dim, bim.p);
  for (int x = 0; x < bim.order; ++x) {
    const int h = g.inv(x);
    const ModMatrix gt = sd.gram * act.arrow_matrix[h];
    for (int s = 0; s < bim.n_arrows; ++s)
      for (int t = 0; t < bim.n_arrows; ++t)
        form.at(bim.index(s, x), bim.index(t, h)) = gt.at(s, t);
  }
  return form;
}

bool verify_rg(const ExplicitBimodule& bim, const DoubleQuiver& dq, const PrimeEmbedding& e,
               const ActionModP& act) {
  const FiniteGroup& g = *bim.group;
  const PrimeField f(bim.p);
  const int m = bim.n_arrows;
  const SymplecticData sd = symplectic_data(dq, e);
  // concrete model of MG (x)_{RG} MG on (x_s (x) 1) (x) (x_t (x) u),
  // s(x_s) = t(x_t); incompatible pairs are zero in the tensor product
  auto compatible = [&](int s, int t) {
    return dq.quiver.arrows[s].source == dq.quiver.arrows[t].target;
  };
  auto idx = [&](int s, int t, int u) { return (s * m + t) * bim.order + u; };
  std::vector<std::uint32_t> lhs(static_cast<std::size_t>(m) * m * bim.order, 0);
  std::vector<std::uint32_t> rhs(lhs.size(), 0);

  for (int s = 0; s < m; ++s) {
    // left dual of x_s as a coordinate vector
    std::vector<std::uint32_t> ld(m, 0);
    ld[dq.partner[s]] = dq.is_dual[s] ? 1 : f.neg(1);
    for (int x = 0; x < bim.order; ++x) {
      // dual term: (x_s^* )^x (x) x^-1; reduce across the tensor:
      // (x_s (x) x) (x) (w (x) x^-1) = (x_s (x) 1) (x) (w^(x^-1) (x) 1)
      std::vector<std::uint32_t> w(m, 0);
      const ModMatrix& tx = act.arrow_matrix[x];
      for (int u = 0; u < m; ++u) {
        if (ld[u] == 0) continue;
        for (int v = 0; v < m; ++v)
          if (tx.at(v, u) != 0) w[v] = f.add(w[v], f.mul(tx.at(v, u), ld[u]));
      }
      std::vector<std::uint32_t> wback(m, 0);
      const ModMatrix& txinv = act.arrow_matrix[g.inv(x)];
      for (int u = 0; u < m; ++u) {
        if (w[u] == 0) continue;
        for (int v = 0; v < m; ++v)
          if (txinv.at(v, u) != 0) wback[v] = f.add(wback[v], f.mul(txinv.at(v, u), w[u]));
      }
      for (int t = 0; t < m; ++t) {
        if (wback[t] == 0 || !compatible(s, t)) continue;
        auto& slot = lhs[idx(s, t, 0)];
        slot = f.add(slot, wback[t]);
      }
    }
  }
  const std::uint32_t order_mod = f.from_ll(g.order);
  for (const auto& term : sd.relation) {
    if (!compatible(term.first, term.second)) continue;
    auto& slot = rhs[idx(term.first, term.second, 0)];
    const std::uint32_t c = term.coeff >= 0 ? term.coeff : f.neg(-term.coeff);
    slot = f.add(slot, f.mul(order_mod, c));
  }
  return lhs == rhs;
}

std::vector<std::vector<ModMatrix>> projected_block_bases(const ExplicitBimodule& bim,
                                                          const FoldResult& fold) {
  const int n = fold.skew.size();
  std::vector<std::vector<ModMatrix>> bases(
      n, std::vector<ModMatrix>(n, ModMatrix(bim.dim, 0, bim.p)));
  const int n_orbits = static_cast<int>(fold.frame.orbits.size());
  for (int oi = 0; oi < n_orbits; ++oi) {
    for (int oj = 0; oj < n_orbits; ++oj) {
      const std::vector<int> block = bimodule_block(bim, fold, oi, oj);
      if (block.empty()) continue;
      for (int rho = 0; rho < fold.tables[oi].size(); ++rho) {
        for (int sigma = 0; sigma < fold.tables[oj].size(); ++sigma) {
          ModMatrix m2 = projected_matrix(bim, fold, block, oi, rho, oj, sigma);
          ModMatrix local = column_space_basis(m2);
          ModMatrix ambient(bim.dim, local.cols(), bim.p);
          for (int c = 0; c < local.cols(); ++c)
            for (std::size_t k = 0; k < block.size(); ++k)
              ambient.at(block[k], c) = local.at(static_cast<int>(k), c);
          bases[fold.vertex_index(oi, rho)][fold.vertex_index(oj, sigma)] = std::move(ambient);
        }
      }
    }
  }
  return bases;
}

std::vector<IsotropicPair> maximal_isotropic_split(const ModMatrix& form,
                                                   const std::vector<ModMatrix>& block_basis,
                                                   const std::vector<int>& dual_of) {
  const PrimeField f(form.field());
  std::vector<IsotropicPair> out;
  auto pair_value = [&](const ModMatrix& a, int ca, const ModMatrix& b, int cb) {
    // a_col^t Form b_col
    std::uint32_t acc = 0;
    for (int i = 0; i < form.rows(); ++i) {
      if (a.at(i, ca) == 0) continue;
      std::uint32_t row = 0;
      for (int j = 0; j < form.cols(); ++j)
        if (b.at(j, cb) != 0) row = f.add(row, f.mul(form.at(i, j), b.at(j, cb)));
      acc = f.add(acc, f.mul(a.at(i, ca), row));
    }
    return acc;
  };
  for (std::size_t k = 0; k < block_basis.size(); ++k) {
    const int kd = dual_of[k];
    if (kd < static_cast<int>(k)) continue;
    const ModMatrix& cb = block_basis[k];
    if (cb.cols() == 0 && block_basis[kd].cols() == 0) continue;
    if (kd != static_cast<int>(k)) {
      const ModMatrix& db = block_basis[kd];
      if (cb.cols() != db.cols())
        fail_guard("DegenerateForm", "dual blocks have different dimensions");
      if (cb.cols() == 0) continue;
      ModMatrix pairing(cb.cols(), db.cols(), form.p());
      for (int a = 0; a < cb.cols(); ++a)
        for (int b = 0; b < db.cols(); ++b) pairing.at(a, b) = pair_value(cb, a, db, b);
      if (rank(pairing) < pairing.rows())
        fail_guard("DegenerateForm", "pairing between dual blocks degenerates");
      IsotropicPair pr;
      pr.block_a = static_cast<int>(k);
      pr.block_b = kd;
      pr.u = cb;
      pr.v = db * inverse(pairing);
      out.push_back(std::move(pr));
      continue;
    }
    // self-dual block: symplectic Gram-Schmidt inside
    const int s = cb.cols();
    if (s % 2 != 0) fail_guard("DegenerateForm", "odd-dimensional symplectic block");
    ModMatrix fb(s, s, form.p());
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) fb.at(a, b) = pair_value(cb, a, cb, b);
    std::vector<std::vector<std::uint32_t>> work;
    for (int c = 0; c < s; ++c) {
      std::vector<std::uint32_t> col(s, 0);
      col[c] = 1;
      work.push_back(std::move(col));
    }
    auto form_val = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
      std::uint32_t acc = 0;
      for (int i = 0; i < s; ++i) {
        if (x[i] == 0) continue;
        std::uint32_t row = 0;
        for (int j = 0; j < s; ++j)
          if (y[j] != 0) row = f.add(row, f.mul(fb.at(i, j), y[j]));
        acc = f.add(acc, f.mul(x[i], row));
      }
      return acc;
    };
    std::vector<std::vector<std::uint32_t>> us, vs;
    while (!work.empty()) {
      std::vector<std::uint32_t> u = work.front();
      work.erase(work.begin());
      int mate = -1;
      std::uint32_t c = 0;
      for (std::size_t l = 0; l < work.size(); ++l) {
        c = form_val(u, work[l]);
        if (c != 0) {
          mate = static_cast<int>(l);
          break;
        }
      }
      if (mate < 0) fail_guard("DegenerateForm", "symplectic reduction stalled");
      std::vector<std::uint32_t> v = work[mate];
      work.erase(work.begin() + mate);
      const std::uint32_t cinv = f.inv(c);
      for (std::uint32_t& x : v) x = f.mul(x, cinv);
      for (auto& x : work) {
        // x' = x - <x,v> u + <x,u> v
        const std::uint32_t xv = form_val(x, v);
        const std::uint32_t xu = form_val(x, u);
        for (int i = 0; i < s; ++i)
          x[i] = f.add(f.sub(x[i], f.mul(xv, u[i])), f.mul(xu, v[i]));
      }
      us.push_back(std::move(u));
      vs.push_back(std::move(v));
    }
    IsotropicPair pr;
    pr.block_a = static_cast<int>(k);
    pr.block_b = kd;
    pr.u = ModMatrix(form.rows(), static_cast<int>(us.size()), form.p());
    pr.v = ModMatrix(form.rows(), static_cast<int>(vs.size()), form.p());
    for (std::size_t c = 0; c < us.size(); ++c) {
      for (int i = 0; i < form.rows(); ++i) {
        std::uint32_t ua = 0, va = 0;
        for (int b = 0; b < s; ++b) {
          ua = f.add(ua, f.mul(cb.at(i, b), us[c][b]));
          va = f.add(va, f.mul(cb.at(i, b), vs[c][b]));
        }
        pr.u.at(i, static_cast<int>(c)) = ua;
        pr.v.at(i, static_cast<int>(c)) = va;
      }
    }
    out.push_back(std::move(pr));
  }
  return out;
}

}  // namespace skewq

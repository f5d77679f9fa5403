#include "skewq/skew.hpp"

#include <numeric>

#include "skewq/error.hpp"

namespace skewq {

long long SkewQuiver::total_arrows() const {
  long long t = 0;
  for (const auto& row : mult)
    for (long long v : row) t += v;
  return t;
}

int FoldResult::vertex_offset(int orbit) const {
  int off = 0;
  for (int oi = 0; oi < orbit; ++oi) off += tables[oi].size();
  return off;
}

int FoldResult::vertex_index(int orbit, int irr) const { return vertex_offset(orbit) + irr; }

long long default_safety_bound(const Quiver& q, const FiniteGroup& g) {
  const long long arrows = std::max<long long>(1, static_cast<long long>(q.arrows.size()));
  return std::max<long long>(2 * arrows * g.order * g.order, g.order + 1);
}

FoldResult build_skew_quiver(const Quiver& q, const FiniteGroup& g,
                             const LinearQuiverAction& act, const FoldOptions& opts) {
  std::vector<ActionViolation> violations = validate_action(q, act);
  if (!violations.empty()) {
    std::string msg = "action is invalid:";
    for (std::size_t i = 0; i < violations.size() && i < 4; ++i)
      msg += "\n  " + violations[i].what;
    if (violations.size() > 4)
      msg += "\n  (+" + std::to_string(violations.size() - 4) + " more)";
    fail_input("NotAnAction", msg);
  }

  FoldResult r;
  r.quiver = &q;
  r.group = &g;
  r.action = &act;

  const long level = std::lcm(g.exponent(), act.level);
  const long long bound = default_safety_bound(q, g);
  r.emb = opts.prime_override
              ? embedding_for_prime(static_cast<std::uint32_t>(*opts.prime_override), level, bound)
              : choose_prime(level, bound);

  const PointAction vertex_action = [&act](int v, int h) { return act.vertex_perm[h][v]; };
  r.frame = orbit_frame(g, q.n_vertices, vertex_action, opts.choices);
  r.pair_reps = diagonal_pair_reps(g, r.frame, vertex_action, opts.choices);

  const int n_orbits = static_cast<int>(r.frame.orbits.size());
  r.stab_ctx.reserve(n_orbits);
  r.tables.reserve(n_orbits);
  for (int oi = 0; oi < n_orbits; ++oi) {
    SubgroupCtxPtr ctx = make_subgroup_ctx(r.frame.stabilizer[r.frame.reps[oi]]);
    r.tables.push_back(compute_character_table(ctx, r.emb));
    r.stab_ctx.push_back(std::move(ctx));
  }
  r.act_p = embed_action(act, r.emb);

  SkewQuiver& s = r.skew;
  for (int oi = 0; oi < n_orbits; ++oi) {
    for (int k = 0; k < r.tables[oi].size(); ++k) {
      SkewVertex v;
      v.orbit = oi;
      v.orbit_rep = r.frame.reps[oi];
      v.irr = k;
      v.degree = r.tables[oi].degrees[k];
      v.label = q.vertex_label(v.orbit_rep) + "#" + std::to_string(k);
      s.vertices.push_back(std::move(v));
    }
  }
  const int n = s.size();
  s.mult.assign(n, std::vector<long long>(n, 0));
  s.provenance.assign(n, std::vector<std::vector<SkewContribution>>(n));

  for (int oi = 0; oi < n_orbits; ++oi) {
    const int off_i = r.vertex_offset(oi);
    for (int oj = 0; oj < n_orbits; ++oj) {
      const int off_j = r.vertex_offset(oj);
      for (const auto& [ip, jp] : r.pair_reps.reps[oi][oj]) {
        const std::vector<int> block_arrows = q.arrows_between(ip, jp);
        if (block_arrows.empty()) continue;
        SubgroupCtxPtr hctx = make_subgroup_ctx(
            subgroup_intersection(r.frame.stabilizer[ip], r.frame.stabilizer[jp]));
        ClassFunction chi_m = action_character(hctx, [&](int parent_elem) {
          return submatrix(r.act_p.arrow_matrix[parent_elem], block_arrows, block_arrows);
        });
        const int kappa_i = r.frame.kappa[ip];
        const int kappa_j = r.frame.kappa[jp];
        std::vector<ClassFunction> rho_h, sigma_h;
        for (const ClassFunction& chi : r.tables[oi].irreducibles)
          rho_h.push_back(twist_restrict(chi, kappa_i, hctx));
        for (const ClassFunction& chi : r.tables[oj].irreducibles)
          sigma_h.push_back(twist_restrict(chi, kappa_j, hctx));
        for (int sg = 0; sg < r.tables[oj].size(); ++sg) {
          ClassFunction rhs = pointwise_product(sigma_h[sg], chi_m);
          for (int rh = 0; rh < r.tables[oi].size(); ++rh) {
            long long c = inner_product(rho_h[rh], rhs);
            if (c == 0) continue;
            if (c > r.emb.safety_bound)
              fail_guard("InternalBoundExceeded",
                         "arrow count " + std::to_string(c) + " reached the safety bound");
            s.mult[off_i + rh][off_j + sg] += c;
            s.provenance[off_i + rh][off_j + sg].push_back(SkewContribution{{ip, jp}, c});
          }
        }
      }
    }
  }
  return r;
}

bool isomorphic_as_labeled(const SkewQuiver& s1, const SkewQuiver& s2,
                           const std::vector<int>& matching) {
  if (s1.size() != s2.size() || static_cast<int>(matching.size()) != s1.size()) return false;
  std::vector<bool> hit(s2.size(), false);
  for (int m : matching) {
    if (m < 0 || m >= s2.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (int v = 0; v < s1.size(); ++v)
    for (int w = 0; w < s1.size(); ++w)
      if (s1.mult[v][w] != s2.mult[matching[v]][matching[w]]) return false;
  return true;
}

std::optional<std::vector<int>> match_by_twist(const FoldResult& a, const FoldResult& b) {
  if (a.skew.size() != b.skew.size()) return std::nullopt;
  const FiniteGroup& g = *a.group;
  std::vector<int> matching(a.skew.size(), -1);
  for (std::size_t oi = 0; oi < a.frame.orbits.size(); ++oi) {
    const int rep_a = a.frame.reps[oi];
    // orbits are choice-independent, so orbit oi is the same point set in b
    const int u = g.inv(b.frame.kappa[rep_a]);  // rep_a ^ u = rep_b
    for (int k = 0; k < a.tables[oi].size(); ++k) {
      ClassFunction twisted =
          conjugate_twist(a.tables[oi].irreducibles[k], u, b.stab_ctx[oi]);
      std::optional<int> found = b.tables[oi].find(twisted);
      if (!found) return std::nullopt;
      matching[a.vertex_index(static_cast<int>(oi), k)] =
          b.vertex_index(static_cast<int>(oi), *found);
    }
  }
  return matching;
}

}  // namespace skewq

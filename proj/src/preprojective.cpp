#include "skewq/preprojective.hpp"

#include <numeric>

#include "skewq/error.hpp"

namespace skewq {

DoubleQuiver double_quiver(const Quiver& q) {
  DoubleQuiver dq;
  dq.quiver = q;
  const int m = static_cast<int>(q.arrows.size());
  for (int k = 0; k < m; ++k) {
    Arrow dual;
    dual.id = m + k;
    dual.source = q.arrows[k].target;
    dual.target = q.arrows[k].source;
    dual.label = q.arrows[k].label + "*";
    dq.quiver.arrows.push_back(std::move(dual));
  }
  dq.partner.resize(2 * m);
  dq.is_dual.assign(2 * m, false);
  for (int k = 0; k < m; ++k) {
    dq.partner[k] = m + k;
    dq.partner[m + k] = k;
    dq.is_dual[m + k] = true;
  }
  return dq;
}

DoubleQuiver declared_double(const Quiver& q, const std::vector<std::pair<int, int>>& pairing) {
  const int m = static_cast<int>(q.arrows.size());
  DoubleQuiver dq;
  dq.quiver = q;
  dq.partner.assign(m, -1);
  dq.is_dual.assign(m, false);
  for (const auto& [plain, star] : pairing) {
    if (plain < 0 || plain >= m || star < 0 || star >= m || plain == star)
      fail_input("BadPairing", "pair (" + std::to_string(plain) + "," + std::to_string(star) +
                                   ") is out of range or degenerate");
    if (dq.partner[plain] >= 0 || dq.partner[star] >= 0)
      fail_input("BadPairing", "arrow appears in more than one pair");
    if (q.arrows[plain].source != q.arrows[star].target ||
        q.arrows[plain].target != q.arrows[star].source)
      fail_input("BadPairing", "pair (" + q.arrows[plain].label + "," + q.arrows[star].label +
                                   ") does not reverse orientation");
    dq.partner[plain] = star;
    dq.partner[star] = plain;
    dq.is_dual[star] = true;
  }
  for (int k = 0; k < m; ++k)
    if (dq.partner[k] < 0)
      fail_input("BadPairing", "arrow " + q.arrows[k].label + " is unpaired");
  return dq;
}

SymplecticData symplectic_data(const DoubleQuiver& dq, const PrimeEmbedding& e) {
  const int n = dq.n_arrows();
  SymplecticData sd;
  sd.gram = ModMatrix(n, n, e.field.p());
  for (int a = 0; a < n; ++a) {
    if (dq.is_dual[a]) continue;
    const int s = dq.partner[a];
    sd.gram.at(a, s) = 1;                  // <a, a*> = a*(a) = 1
    sd.gram.at(s, a) = e.field.neg(1);     // <a*, a> = -1
  }
  // r = sum_x x (x) leftdual(x); leftdual(a) = -a*, leftdual(a*) = a
  for (int x = 0; x < n; ++x) {
    SymplecticData::RelationTerm t;
    t.first = x;
    t.second = dq.partner[x];
    t.coeff = dq.is_dual[x] ? 1 : -1;
    t.vertex = dq.quiver.arrows[x].target;
    sd.relation.push_back(t);
  }
  return sd;
}

ModMatrix relation_matrix(const DoubleQuiver& dq, const SymplecticData& sd, std::uint32_t p) {
  const PrimeField f(p);
  ModMatrix r(dq.n_arrows(), dq.n_arrows(), p);
  for (const auto& t : sd.relation)
    r.at(t.first, t.second) =
        f.add(r.at(t.first, t.second), t.coeff >= 0 ? t.coeff : f.neg(-t.coeff));
  return r;
}

ModMatrix relation_matrix_from_basis(const DoubleQuiver& dq, const SymplecticData& sd,
                                     const ModMatrix& basis_change) {
  // left dual basis: columns y*_t with <y*_t, y_s> = delta_ts
  const ModMatrix gy = sd.gram * basis_change;
  const ModMatrix dual = inverse(gy).transpose();
  const PrimeField f(basis_change.field());
  ModMatrix r(dq.n_arrows(), dq.n_arrows(), basis_change.p());
  for (int t = 0; t < basis_change.cols(); ++t)
    for (int u = 0; u < dq.n_arrows(); ++u) {
      if (basis_change.at(u, t) == 0) continue;
      for (int v = 0; v < dq.n_arrows(); ++v)
        r.at(u, v) = f.add(r.at(u, v), f.mul(basis_change.at(u, t), dual.at(v, t)));
    }
  return r;
}

LinearQuiverAction extend_action_contragredient(const Quiver& q, const LinearQuiverAction& act,
                                                const DoubleQuiver& dq) {
  const FiniteGroup& g = *act.group;
  const int m = static_cast<int>(q.arrows.size());
  if (dq.n_arrows() != 2 * m)
    fail_input("BadPairing", "double quiver does not match the base quiver");
  LinearQuiverAction ext;
  ext.group = act.group;
  ext.level = act.level;
  ext.vertex_perm = act.vertex_perm;
  ext.arrow_matrix.reserve(g.order);
  for (int x = 0; x < g.order; ++x) {
    const CycloMatrix& t = act.arrow_matrix[x];
    const CycloMatrix& tinv = act.arrow_matrix[g.inv(x)];
    CycloMatrix big(2 * m, 2 * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        big.at(b, a) = t.at(b, a);
        // (a*)^g = sum_b T(g^-1)[a][b] b*
        big.at(dq.partner[b], dq.partner[a]) = tinv.at(a, b);
      }
    ext.arrow_matrix.push_back(std::move(big));
  }
  return ext;
}

InvarianceReport check_relation_invariance(const DoubleQuiver& dq, const LinearQuiverAction& act,
                                           const PrimeEmbedding& e) {
  const SymplecticData sd = symplectic_data(dq, e);
  const ModMatrix rel = relation_matrix(dq, sd, e.field.p());
  InvarianceReport rep;
  for (int gen : generating_set(*act.group)) {
    const ModMatrix t = embed_matrix(act.arrow_matrix[gen], e);
    if (t.transpose() * sd.gram * t != sd.gram) {
      rep.invariant = false;
      rep.witness_element = gen;
      rep.detail = "bilinear form moves under " + act.group->label_of(gen);
      return rep;
    }
    // independent check: transport the relation tensor directly
    if (t * rel * t.transpose() != rel) {
      rep.invariant = false;
      rep.witness_element = gen;
      rep.detail = "preprojective relation moves under " + act.group->label_of(gen);
      return rep;
    }
  }
  return rep;
}

FoldDoubleResult fold_double(const DoubleQuiver& dq, const FiniteGroup& g,
                             const LinearQuiverAction& act, const FoldOptions& opts,
                             const SkewQuiver* base_fold) {
  {
    const long level = std::lcm(g.exponent(), act.level);
    const long long bound = default_safety_bound(dq.quiver, g);
    PrimeEmbedding e =
        opts.prime_override
            ? embedding_for_prime(static_cast<std::uint32_t>(*opts.prime_override), level, bound)
            : choose_prime(level, bound);
    InvarianceReport rep = check_relation_invariance(dq, act, e);
    if (!rep.invariant)
      fail_hypothesis("NotInvariant", rep.detail + " (element " +
                                          g.label_of(rep.witness_element) + ")");
  }

  FoldDoubleResult out{build_skew_quiver(dq.quiver, g, act, opts), {}};
  const SkewQuiver& s = out.fold.skew;
  for (int v = 0; v < s.size(); ++v) {
    for (int w = 0; w < s.size(); ++w) {
      if (s.mult[v][w] != s.mult[w][v])
        fail_guard("AsymmetricFold", "fold of a double quiver is not symmetric at (" +
                                         s.vertices[v].label + "," + s.vertices[w].label + ")");
    }
    if (s.mult[v][v] % 2 != 0)
      fail_guard("OddLoop", "odd loop count at " + s.vertices[v].label);
  }
  if (base_fold != nullptr) {
    if (base_fold->size() != s.size())
      fail_guard("ContragredientMismatch", "base fold has a different vertex set");
    for (int v = 0; v < s.size(); ++v)
      for (int w = 0; w < s.size(); ++w)
        if (s.mult[v][w] != base_fold->mult[v][w] + base_fold->mult[w][v])
          fail_guard("ContragredientMismatch",
                     "doubled fold differs from base + base^t at (" + s.vertices[v].label + "," +
                         s.vertices[w].label + ")");
  }
  for (int v = 0; v < s.size(); ++v) {
    if (s.mult[v][v] > 0)
      out.structure.q_prime.push_back({v, v, s.mult[v][v] / 2});
    for (int w = v + 1; w < s.size(); ++w)
      if (s.mult[v][w] > 0) out.structure.q_prime.push_back({v, w, s.mult[v][w]});
  }
  return out;
}

}  // namespace skewq

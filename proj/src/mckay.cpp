#include "skewq/mckay.hpp"

#include <algorithm>
#include <numeric>

#include "skewq/error.hpp"

namespace skewq {

SL2Subgroup close_sl2(const Sl2Generators& gens, std::size_t closure_cap) {
  SL2Subgroup s;
  s.input = gens;
  for (const CycloMatrix& m : gens.generators) {
    if (m.rows() != 2 || m.cols() != 2)
      fail_input("DeterminantNotOne", "generators must be 2x2 matrices");
    CycloNumber det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (det != CycloNumber(1))
      fail_input("DeterminantNotOne",
                 "generator determinant is " + det.to_string() + ", not 1");
  }
  std::vector<CycloMatrix> elems{CycloMatrix::identity(2)};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const CycloMatrix& gen : gens.generators) {
      CycloMatrix prod = elems[head] * gen;
      bool known = false;
      for (const CycloMatrix& e : elems)
        if (e == prod) {
          known = true;
          break;
        }
      if (!known) {
        elems.push_back(std::move(prod));
        if (elems.size() > closure_cap)
          fail_input("ClosureCapExceeded", "SL2 closure exceeded cap");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  auto find = [&](const CycloMatrix& m) {
    for (int i = 0; i < n; ++i)
      if (elems[i] == m) return i;
    fail_guard("ClosureCapExceeded", "product escaped the closure");
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = find(elems[a] * elems[b]);
  s.closure = from_cayley_table(table);  // identity is already index 0
  for (const CycloMatrix& gen : gens.generators) s.generator_elements.push_back(find(gen));
  s.element_matrix = std::move(elems);
  return s;
}

Sl2LoopInstance sl2_loop_instance(const SL2Subgroup& s) {
  Sl2LoopInstance inst;
  inst.quiver.n_vertices = 1;
  inst.quiver.vertex_labels = {"0"};
  inst.quiver.arrows = {{0, 0, 0, "alpha"}, {1, 0, 0, "alpha*"}};
  inst.dq = declared_double(inst.quiver, {{0, 1}});
  inst.action.group = &s.closure;
  inst.action.level = s.input.level;
  inst.action.vertex_perm.assign(s.closure.order, {0});
  inst.action.arrow_matrix.reserve(s.closure.order);
  // right action: T(g) = matrix(g)^t, so T(gh) = T(h) T(g)
  for (const CycloMatrix& m : s.element_matrix)
    inst.action.arrow_matrix.push_back(m.transpose());
  return inst;
}

namespace {

std::string classify_affine(const std::vector<std::vector<long long>>& mult,
                            const std::vector<int>& degrees) {
  const int n = static_cast<int>(mult.size());
  // null-root certificate: adjacency * degrees = 2 * degrees
  for (int v = 0; v < n; ++v) {
    long long acc = 0;
    for (int w = 0; w < n; ++w) acc += mult[v][w] * degrees[w];
    if (acc != 2 * degrees[v])
      fail_guard("UnrecognizedShape", "null-root identity fails at vertex " + std::to_string(v));
  }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (mult[v][w] != mult[w][v])
        fail_guard("UnrecognizedShape", "McKay matrix is not symmetric");

  if (n == 1) {
    if (mult[0][0] == 2) return "A~0 (double loop)";
    fail_guard("UnrecognizedShape", "single vertex without a double loop");
  }
  if (n == 2 && mult[0][1] == 2 && mult[0][0] == 0 && mult[1][1] == 0) return "A~1";

  // simple graph from here on
  std::vector<int> vdeg(n, 0);
  for (int v = 0; v < n; ++v) {
    if (mult[v][v] != 0) fail_guard("UnrecognizedShape", "unexpected loop");
    for (int w = 0; w < n; ++w) {
      if (v != w && mult[v][w] > 1)
        fail_guard("UnrecognizedShape", "unexpected multi-edge");
      vdeg[v] += static_cast<int>(mult[v][w]);
    }
  }
  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (mult[v][w] > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    fail_guard("UnrecognizedShape", "McKay graph is disconnected");

  std::vector<int> sorted = vdeg;
  std::sort(sorted.begin(), sorted.end());
  auto counts = [&](int k) {
    return static_cast<int>(std::count(sorted.begin(), sorted.end(), k));
  };
  if (counts(2) == n) return "A~" + std::to_string(n - 1);
  if (n == 5 && counts(1) == 4 && counts(4) == 1) return "D~4";
  if (counts(1) == 4 && counts(3) == 2 && counts(2) == n - 6)
    return "D~" + std::to_string(n - 1);
  if (n == 7 && counts(1) == 3 && counts(2) == 3 && counts(3) == 1) return "E~6";
  if (n == 8 && counts(1) == 3 && counts(2) == 4 && counts(3) == 1) return "E~7";
  if (n == 9 && counts(1) == 3 && counts(2) == 5 && counts(3) == 1) return "E~8";
  fail_guard("UnrecognizedShape", "degree sequence matches no affine ADE diagram");
}

}  // namespace

McKayGraph mckay_graph(const SL2Subgroup& s, const std::optional<long long>& prime_override) {
  const FiniteGroup& g = s.closure;
  const long level = std::lcm(g.exponent(), s.input.level);
  // same bound as folding the loop double quiver, so the prime (and thus
  // the character-table order) agrees with the fold pipeline
  Quiver loops;
  loops.n_vertices = 1;
  loops.arrows = {{0, 0, 0, "alpha"}, {1, 0, 0, "alpha*"}};
  const long long bound = default_safety_bound(loops, g);
  const PrimeEmbedding e =
      prime_override
          ? embedding_for_prime(static_cast<std::uint32_t>(*prime_override), level, bound)
          : choose_prime(level, bound);

  McKayGraph mk;
  SubgroupCtxPtr ctx = full_group_ctx(g);
  mk.table = compute_character_table(ctx, e);
  ClassFunction nat;
  nat.dom = ctx;
  nat.p = e.field.p();
  nat.values.resize(ctx->num_classes());
  for (int c = 0; c < ctx->num_classes(); ++c) {
    const CycloMatrix& m = s.element_matrix[ctx->to_parent[ctx->classes.reps[c]]];
    nat.values[c] = embed(m.at(0, 0) + m.at(1, 1), e);
  }
  const int n = mk.table.size();
  mk.degrees = mk.table.degrees;
  mk.mult.assign(n, std::vector<long long>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      ClassFunction rhs = pointwise_product(nat, mk.table.irreducibles[w]);
      mk.mult[v][w] = inner_product(mk.table.irreducibles[v], rhs);
    }
  }
  mk.affine_type = classify_affine(mk.mult, mk.degrees);
  return mk;
}

bool crosscheck_mckay_fold(const SL2Subgroup& s,
                           const std::optional<long long>& prime_override) {
  McKayGraph mk = mckay_graph(s, prime_override);
  Sl2LoopInstance inst = sl2_loop_instance(s);
  FoldOptions opts;
  opts.prime_override = prime_override;
  FoldDoubleResult fd = fold_double(inst.dq, s.closure, inst.action, opts);
  const SkewQuiver& sk = fd.fold.skew;
  if (sk.size() != static_cast<int>(mk.mult.size())) return false;
  // one vertex orbit whose stabilizer is the whole group; both sides use
  // the same deterministic character order
  for (int v = 0; v < sk.size(); ++v)
    for (int w = 0; w < sk.size(); ++w)
      if (sk.mult[v][w] != mk.mult[v][w]) return false;
  return true;
}

}  // namespace skewq

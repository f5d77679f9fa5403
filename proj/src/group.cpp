#include "skewq/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "skewq/error.hpp"

namespace skewq {

long FiniteGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < order; ++g) e = std::lcm(e, static_cast<long>(element_order[g]));
  return e;
}

std::string FiniteGroup::label_of(int g) const {
  if (g >= 0 && g < static_cast<int>(labels.size()) && !labels[g].empty()) return labels[g];
  return "g" + std::to_string(g);
}

namespace {

std::vector<int> compute_element_orders(const FiniteGroup& g) {
  std::vector<int> ord(g.order);
  for (int x = 0; x < g.order; ++x) {
    int cur = x, n = 1;
    while (cur != 0) {
      cur = g.mul(cur, x);
      ++n;
    }
    ord[x] = n;
  }
  return ord;
}

}  // namespace

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail_input("NoIdentity", "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail_input("NotAssociative", "table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail_input("NotAssociative", "entry out of range at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
  }

  // identity: a two-sided unit
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) id = e;
  }
  if (id < 0) fail_input("NoIdentity", "no two-sided identity element");

  // associativity: exhaustive for small orders, deterministic sample above
  auto check_triple = [&](int a, int b, int c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      fail_input("NotAssociative", "witness triple (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    Rng rng(0x5eedu);
    for (int t = 0; t < 200000; ++t)
      check_triple(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)),
                   static_cast<int>(rng.below(n)));
  }

  // inverses
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == id && table[y][x] == id) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) fail_input("NoInverse", "element " + std::to_string(x) + " has no inverse");
  }

  // relabel so the identity is index 0 (swap id <-> 0)
  std::vector<int> relab(n);
  std::iota(relab.begin(), relab.end(), 0);
  std::swap(relab[0], relab[id]);
  FiniteGroup g;
  g.order = n;
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table[static_cast<std::size_t>(relab[a]) * n + relab[b]] = relab[table[a][b]];
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) g.inverse[relab[a]] = relab[inv[a]];
  g.element_order = compute_element_orders(g);
  return g;
}

std::pair<FiniteGroup, std::vector<std::vector<int>>> from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators, std::size_t closure_cap) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      fail_input("NotAnAction", "generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        fail_input("NotAnAction", "generator is not a bijection");
      seen[v] = true;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  // right-action composition: element-of(g then h) = h o g as functions
  auto compose = [degree](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(degree);
    for (int x = 0; x < degree; ++x) r[x] = h[g[x]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      std::vector<int> prod = compose(elems[head], gen);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > closure_cap)
          fail_input("ClosureCapExceeded",
                     "closure exceeded cap " + std::to_string(closure_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.order = n;
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse[a] = b;
        break;
      }
  }
  g.element_order = compute_element_orders(g);
  return {std::move(g), std::move(elems)};
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{&g, std::move(elements)};
  if (h.elements.empty() || h.elements[0] != 0)
    fail_input("NotASubgroup", "missing identity");
  for (int a : h.elements) {
    if (!h.contains(g.inv(a))) fail_input("NotASubgroup", "not closed under inverse");
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) fail_input("NotASubgroup", "not closed under product");
  }
  if (g.order % h.order() != 0) fail_input("NotASubgroup", "size does not divide group order");
  return h;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> elems{0};
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : generators) {
      int y = g.mul(x, s);
      if (elems.insert(y).second) queue.push_back(y);
    }
  }
  return Subgroup{&g, std::vector<int>(elems.begin(), elems.end())};
}

Subgroup subgroup_intersection(const Subgroup& h1, const Subgroup& h2) {
  if (h1.parent != h2.parent)
    fail_input("DifferentParents", "subgroups live in different groups");
  std::vector<int> common;
  std::set_intersection(h1.elements.begin(), h1.elements.end(), h2.elements.begin(),
                        h2.elements.end(), std::back_inserter(common));
  return Subgroup{h1.parent, std::move(common)};
}

bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer) {
  if (inner.parent != outer.parent) return false;
  return std::includes(outer.elements.begin(), outer.elements.end(), inner.elements.begin(),
                       inner.elements.end());
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  ConjClasses c;
  c.class_of.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (c.class_of[x] >= 0) continue;
    const int cls = static_cast<int>(c.reps.size());
    int size = 0;
    for (int k = 0; k < g.order; ++k) {
      int y = g.conj(x, k);
      if (c.class_of[y] < 0) {
        c.class_of[y] = cls;
        ++size;
      }
    }
    c.reps.push_back(x);
    c.sizes.push_back(size);
  }
  c.inverse_class.resize(c.reps.size());
  for (std::size_t k = 0; k < c.reps.size(); ++k)
    c.inverse_class[k] = c.class_of[g.inv(c.reps[k])];
  return c;
}

int SubgroupCtx::local_of(int parent_elem) const {
  if (parent_elem < 0 || parent_elem >= static_cast<int>(from_parent.size()) ||
      from_parent[parent_elem] < 0)
    fail_input("NotASubgroup",
               "element " + std::to_string(parent_elem) + " is outside the subgroup");
  return from_parent[parent_elem];
}

SubgroupCtxPtr make_subgroup_ctx(Subgroup sub) {
  auto ctx = std::make_shared<SubgroupCtx>();
  const FiniteGroup& g = *sub.parent;
  ctx->to_parent = sub.elements;
  ctx->from_parent.assign(g.order, -1);
  for (std::size_t i = 0; i < sub.elements.size(); ++i)
    ctx->from_parent[sub.elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sub.elements.size());
  ctx->local.order = m;
  ctx->local.table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int prod = g.mul(sub.elements[a], sub.elements[b]);
      int loc = ctx->from_parent[prod];
      if (loc < 0) fail_input("NotASubgroup", "set is not closed under product");
      ctx->local.table[static_cast<std::size_t>(a) * m + b] = loc;
    }
  ctx->local.inverse.resize(m);
  for (int a = 0; a < m; ++a) ctx->local.inverse[a] = ctx->from_parent[g.inv(sub.elements[a])];
  ctx->local.element_order.resize(m);
  for (int a = 0; a < m; ++a) ctx->local.element_order[a] = g.element_order[sub.elements[a]];
  ctx->classes = conjugacy_classes(ctx->local);
  ctx->sub = std::move(sub);
  return ctx;
}

SubgroupCtxPtr full_group_ctx(const FiniteGroup& g) {
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup_ctx(Subgroup{&g, std::move(all)});
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup c = subgroup_closure(g, {});
  while (c.order() < g.order) {
    int add = -1;
    for (int x = 0; x < g.order; ++x) {
      if (!c.contains(x)) {
        add = x;
        break;
      }
    }
    gens.push_back(add);
    c = subgroup_closure(g, gens);
  }
  return gens;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

OrbitFrame orbit_frame(const FiniteGroup& g, int n_points, const PointAction& action,
                       const FrameChoices& choices) {
  // validate: identity and the composition law x^(gh) = (x^g)^h
  for (int x = 0; x < n_points; ++x) {
    int y = action(x, 0);
    if (y != x)
      fail_input("NotAnAction", "identity moves point " + std::to_string(x));
  }
  auto check_pair = [&](int x, int a, int b) {
    if (action(x, g.mul(a, b)) != action(action(x, a), b))
      fail_input("NotAnAction", "composition fails at point " + std::to_string(x) +
                                    ", pair (" + std::to_string(a) + "," + std::to_string(b) +
                                    ")");
  };
  const long long work =
      static_cast<long long>(n_points) * g.order * g.order;
  if (work <= 40000 * 40ll) {
    for (int x = 0; x < n_points; ++x)
      for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) check_pair(x, a, b);
  } else {
    std::vector<int> gens = generating_set(g);
    for (int x = 0; x < n_points; ++x)
      for (int a : gens)
        for (int b : gens) check_pair(x, a, b);
    Rng rng(0xacce55u);
    for (int t = 0; t < 20000; ++t)
      check_pair(static_cast<int>(rng.below(n_points)), static_cast<int>(rng.below(g.order)),
                 static_cast<int>(rng.below(g.order)));
  }

  OrbitFrame f;
  f.n_points = n_points;
  f.orbit_of.assign(n_points, -1);
  for (int x = 0; x < n_points; ++x) {
    if (f.orbit_of[x] >= 0) continue;
    const int oi = static_cast<int>(f.orbits.size());
    std::vector<int> orbit;
    for (int h = 0; h < g.order; ++h) {
      int y = action(x, h);
      if (f.orbit_of[y] < 0) {
        f.orbit_of[y] = oi;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    f.orbits.push_back(std::move(orbit));
  }

  Rng rng(choices.seed);
  f.reps.resize(f.orbits.size());
  for (std::size_t oi = 0; oi < f.orbits.size(); ++oi) {
    f.reps[oi] = choices.randomized
                     ? f.orbits[oi][rng.below(f.orbits[oi].size())]
                     : f.orbits[oi][0];
  }
  f.kappa.assign(n_points, -1);
  for (int x = 0; x < n_points; ++x) {
    const int rep = f.reps[f.orbit_of[x]];
    if (!choices.randomized) {
      for (int h = 0; h < g.order; ++h) {
        if (action(rep, h) == x) {
          f.kappa[x] = h;
          break;
        }
      }
    } else {
      std::vector<int> transporters;
      for (int h = 0; h < g.order; ++h)
        if (action(rep, h) == x) transporters.push_back(h);
      f.kappa[x] = transporters[rng.below(transporters.size())];
    }
    // a representative must still carry itself by a stabilizer element;
    // keep kappa_rep = identity in the canonical frame
    if (!choices.randomized && x == rep && f.kappa[x] != 0)
      fail_guard("TransporterConvention", "identity does not fix representative");
  }
  f.stabilizer.reserve(n_points);
  for (int x = 0; x < n_points; ++x) {
    std::vector<int> st;
    for (int h = 0; h < g.order; ++h)
      if (action(x, h) == x) st.push_back(h);
    f.stabilizer.push_back(Subgroup{&g, std::move(st)});
  }
  return f;
}

PairOrbitReps diagonal_pair_reps(const FiniteGroup& g, const OrbitFrame& frame,
                                 const PointAction& action, const FrameChoices& choices) {
  PairOrbitReps p;
  p.n_orbits = static_cast<int>(frame.orbits.size());
  p.reps.assign(p.n_orbits, std::vector<std::vector<std::pair<int, int>>>(p.n_orbits));
  Rng rng(choices.seed ^ 0xd1a60ull);
  for (int oi = 0; oi < p.n_orbits; ++oi) {
    for (int oj = 0; oj < p.n_orbits; ++oj) {
      std::map<std::pair<int, int>, int> seen;  // pair -> diagonal-orbit id
      std::vector<std::vector<std::pair<int, int>>> classes;
      for (int a : frame.orbits[oi]) {
        for (int b : frame.orbits[oj]) {
          if (seen.count({a, b})) continue;
          const int cid = static_cast<int>(classes.size());
          std::vector<std::pair<int, int>> members;
          for (int h = 0; h < g.order; ++h) {
            std::pair<int, int> im{action(a, h), action(b, h)};
            if (seen.emplace(im, cid).second) members.push_back(im);
          }
          std::sort(members.begin(), members.end());
          classes.push_back(std::move(members));
        }
      }
      std::vector<std::pair<int, int>> reps;
      reps.reserve(classes.size());
      for (const auto& cls : classes)
        reps.push_back(choices.randomized ? cls[rng.below(cls.size())] : cls[0]);
      std::sort(reps.begin(), reps.end());
      p.reps[oi][oj] = std::move(reps);
    }
  }
  return p;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  found.insert(subgroup_closure(g, {}).elements);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (const auto& elems : snapshot) {
      for (int x = 1; x < g.order; ++x) {
        if (std::binary_search(elems.begin(), elems.end(), x)) continue;
        std::vector<int> gens = elems;
        gens.push_back(x);
        Subgroup bigger = subgroup_closure(g, gens);
        if (found.insert(bigger.elements).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(Subgroup{&g, elems});
  return out;
}

}  // namespace skewq

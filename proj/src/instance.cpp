#include "skewq/instance.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "skewq/error.hpp"

namespace skewq {

using nlohmann::json;

namespace {

bool quiver_equal(const Quiver& a, const Quiver& b) {
  if (a.n_vertices != b.n_vertices || a.vertex_labels != b.vertex_labels ||
      a.arrows.size() != b.arrows.size())
    return false;
  for (std::size_t k = 0; k < a.arrows.size(); ++k) {
    const Arrow &x = a.arrows[k], &y = b.arrows[k];
    if (x.id != y.id || x.source != y.source || x.target != y.target || x.label != y.label)
      return false;
  }
  return true;
}

}  // namespace

bool InstanceFile::operator==(const InstanceFile& o) const {
  return name == o.name && level == o.level && quiver_equal(quiver, o.quiver) &&
         group_type == o.group_type && cayley == o.cayley && perm_degree == o.perm_degree &&
         perm_generators == o.perm_generators && action_elements == o.action_elements &&
         vertex_perms == o.vertex_perms && arrow_matrices == o.arrow_matrices &&
         prime == o.prime && pairing == o.pairing;
}

InstanceFile parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
  try {
    InstanceFile f;
    f.name = j.value("name", "unnamed");
    f.level = j.at("level").get<long>();
    const json& q = j.at("quiver");
    f.quiver.vertex_labels = q.at("vertices").get<std::vector<std::string>>();
    f.quiver.n_vertices = static_cast<int>(f.quiver.vertex_labels.size());
    int id = 0;
    for (const json& a : q.at("arrows")) {
      Arrow arr;
      arr.id = id++;
      arr.label = a.at("label").get<std::string>();
      arr.source = a.at("from").get<int>();
      arr.target = a.at("to").get<int>();
      if (arr.source < 0 || arr.source >= f.quiver.n_vertices || arr.target < 0 ||
          arr.target >= f.quiver.n_vertices)
        fail_input("ParseError", "arrow " + arr.label + " has endpoints out of range");
      f.quiver.arrows.push_back(std::move(arr));
    }
    const std::string gt = j.at("group").at("type").get<std::string>();
    if (gt == "from_action") {
      f.group_type = InstanceFile::GroupType::kFromAction;
    } else if (gt == "cayley_table") {
      f.group_type = InstanceFile::GroupType::kCayleyTable;
      f.cayley = j.at("group").at("table").get<std::vector<std::vector<int>>>();
    } else if (gt == "permutation_generators") {
      f.group_type = InstanceFile::GroupType::kPermutationGenerators;
      f.perm_degree = j.at("group").at("degree").get<int>();
      f.perm_generators = j.at("group").at("generators").get<std::vector<std::vector<int>>>();
    } else {
      fail_input("ParseError", "unknown group type \"" + gt + "\"");
    }
    const int m = static_cast<int>(f.quiver.arrows.size());
    for (const json& gen : j.at("action")) {
      if (gen.contains("element")) f.action_elements.push_back(gen.at("element").get<int>());
      f.vertex_perms.push_back(gen.at("vertex_perm").get<std::vector<int>>());
      auto rows = gen.at("arrow_matrix").get<std::vector<std::vector<std::string>>>();
      if (static_cast<int>(rows.size()) != m)
        fail_input("ParseError", "arrow matrix must have one row per arrow");
      CycloMatrix mat(m, m);
      for (int r = 0; r < m; ++r) {
        if (static_cast<int>(rows[r].size()) != m)
          fail_input("ParseError", "arrow matrix must be square");
        for (int c = 0; c < m; ++c) mat.at(r, c) = CycloNumber::parse(rows[r][c], f.level);
      }
      f.arrow_matrices.push_back(std::move(mat));
    }
    if (!f.action_elements.empty() && f.action_elements.size() != f.vertex_perms.size())
      fail_input("ParseError", "either all or no action generators may name elements");
    if (j.contains("options")) {
      const json& o = j.at("options");
      if (o.contains("prime") && !o.at("prime").is_null())
        f.prime = o.at("prime").get<long long>();
      if (o.contains("pairing") && !o.at("pairing").is_null()) {
        std::vector<std::pair<int, int>> pairing;
        for (const json& p : o.at("pairing")) pairing.emplace_back(p.at(0), p.at(1));
        f.pairing = std::move(pairing);
      }
    }
    return f;
  } catch (const json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
}

std::string serialize_instance(const InstanceFile& f) {
  json j;
  j["name"] = f.name;
  j["level"] = f.level;
  j["quiver"]["vertices"] = f.quiver.vertex_labels;
  j["quiver"]["arrows"] = json::array();
  for (const Arrow& a : f.quiver.arrows)
    j["quiver"]["arrows"].push_back({{"label", a.label}, {"from", a.source}, {"to", a.target}});
  switch (f.group_type) {
    case InstanceFile::GroupType::kFromAction:
      j["group"] = {{"type", "from_action"}};
      break;
    case InstanceFile::GroupType::kCayleyTable:
      j["group"] = {{"type", "cayley_table"}, {"table", f.cayley}};
      break;
    case InstanceFile::GroupType::kPermutationGenerators:
      j["group"] = {{"type", "permutation_generators"},
                    {"degree", f.perm_degree},
                    {"generators", f.perm_generators}};
      break;
  }
  j["action"] = json::array();
  for (std::size_t k = 0; k < f.vertex_perms.size(); ++k) {
    json gen;
    if (!f.action_elements.empty()) gen["element"] = f.action_elements[k];
    gen["vertex_perm"] = f.vertex_perms[k];
    std::vector<std::vector<std::string>> rows;
    const CycloMatrix& m = f.arrow_matrices[k];
    for (int r = 0; r < m.rows(); ++r) {
      std::vector<std::string> row;
      for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
      rows.push_back(std::move(row));
    }
    gen["arrow_matrix"] = rows;
    j["action"].push_back(std::move(gen));
  }
  json opts = json::object();
  if (f.prime) opts["prime"] = *f.prime;
  if (f.pairing) {
    json pl = json::array();
    for (const auto& [a, b] : *f.pairing) pl.push_back({a, b});
    opts["pairing"] = pl;
  }
  if (!opts.empty()) j["options"] = opts;
  return j.dump(2) + "\n";
}

namespace {

// closure of (vertex permutation, arrow matrix) pairs under composition;
// the group an action generates when no abstract group is declared.
// All entries are lifted to one common cyclotomic level so the serialized
// form is a canonical dedup key.
ResolvedInstance resolve_from_action(const InstanceFile& f) {
  const int nv = f.quiver.n_vertices;
  const int m = static_cast<int>(f.quiver.arrows.size());
  long common = f.level;
  for (const CycloMatrix& mat : f.arrow_matrices)
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c) common = std::lcm(common, mat.at(r, c).level());
  auto lift = [common](CycloMatrix mat) {
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c) mat.at(r, c) = mat.at(r, c).lifted(common);
    return mat;
  };
  using Pair = std::pair<std::vector<int>, CycloMatrix>;
  auto key_of = [](const Pair& p) {
    std::string key;
    for (int v : p.first) key += std::to_string(v) + ",";
    key += "|";
    for (int r = 0; r < p.second.rows(); ++r)
      for (int c = 0; c < p.second.cols(); ++c) key += p.second.at(r, c).to_string() + ";";
    return key;
  };
  std::vector<int> idperm(nv);
  std::iota(idperm.begin(), idperm.end(), 0);
  std::vector<Pair> elems{{idperm, lift(CycloMatrix::identity(m))}};
  std::map<std::string, int> index{{key_of(elems[0]), 0}};
  auto compose = [nv](const Pair& x, const Pair& y) {
    // element x*y acts by x then y
    Pair r;
    r.first.resize(nv);
    for (int v = 0; v < nv; ++v) r.first[v] = y.first[x.first[v]];
    r.second = y.second * x.second;
    return r;
  };
  std::vector<Pair> gens;
  for (std::size_t k = 0; k < f.vertex_perms.size(); ++k)
    gens.push_back({f.vertex_perms[k], lift(f.arrow_matrices[k])});
  constexpr std::size_t kCap = 10000;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Pair& gen : gens) {
      Pair prod = compose(elems[head], gen);
      if (index.emplace(key_of(prod), static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > kCap)
          fail_input("ClosureCapExceeded",
                     "action closure exceeded cap (is the generated group finite?)");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(key_of(compose(elems[a], elems[b])));
      if (it == index.end()) fail_guard("ClosureCapExceeded", "closure is not closed");
      table[a][b] = it->second;
    }
  ResolvedInstance r;
  r.group = std::make_shared<FiniteGroup>(from_cayley_table(table));
  r.quiver = f.quiver;
  r.action.group = r.group.get();
  r.action.level = f.level;
  for (Pair& e : elems) {
    r.action.vertex_perm.push_back(std::move(e.first));
    r.action.arrow_matrix.push_back(std::move(e.second));
  }
  return r;
}

}  // namespace

ResolvedInstance resolve_instance(const InstanceFile& f) {
  ResolvedInstance r;
  switch (f.group_type) {
    case InstanceFile::GroupType::kFromAction:
      r = resolve_from_action(f);
      break;
    case InstanceFile::GroupType::kCayleyTable: {
      if (f.action_elements.size() != f.vertex_perms.size())
        fail_input("ParseError", "cayley_table groups need an element per action generator");
      r.group = std::make_shared<FiniteGroup>(from_cayley_table(f.cayley));
      r.quiver = f.quiver;
      r.action = action_from_generators(*r.group, f.quiver, f.level, f.action_elements,
                                        f.vertex_perms, f.arrow_matrices);
      break;
    }
    case InstanceFile::GroupType::kPermutationGenerators: {
      auto [g, elem_perms] = from_permutation_generators(f.perm_degree, f.perm_generators);
      r.group = std::make_shared<FiniteGroup>(std::move(g));
      r.quiver = f.quiver;
      std::vector<int> gen_elems;
      for (const auto& gen : f.perm_generators) {
        auto it = std::find(elem_perms.begin(), elem_perms.end(), gen);
        gen_elems.push_back(static_cast<int>(it - elem_perms.begin()));
      }
      r.action = action_from_generators(*r.group, f.quiver, f.level, gen_elems, f.vertex_perms,
                                        f.arrow_matrices);
      break;
    }
  }
  if (f.pairing) r.dq = declared_double(r.quiver, *f.pairing);
  r.prime = f.prime;
  r.name = f.name;
  return r;
}

InstanceFile binary_dihedral_12_instance() {
  InstanceFile f;
  f.name = "binary-dihedral-12";
  f.level = 6;
  f.quiver.n_vertices = 4;
  f.quiver.vertex_labels = {"0", "1", "2", "3"};
  auto add = [&](const std::string& label, int s, int t) {
    f.quiver.arrows.push_back({static_cast<int>(f.quiver.arrows.size()), s, t, label});
  };
  add("alpha", 0, 0);
  add("alpha*", 0, 0);
  add("beta", 1, 0);
  add("beta*", 0, 1);
  add("gamma", 2, 0);
  add("gamma*", 0, 2);
  add("delta", 3, 0);
  add("delta*", 0, 3);
  f.group_type = InstanceFile::GroupType::kFromAction;

  const CycloNumber zeta = CycloNumber::root_of_unity(6, 1);
  const CycloNumber zeta_inv = CycloNumber::root_of_unity(6, 5);
  const CycloNumber one(1), minus_one(-1);

  CycloMatrix ta(8, 8);
  ta.at(0, 0) = zeta_inv;  // alpha -> zeta^-1 alpha
  ta.at(1, 1) = zeta;      // alpha* -> zeta alpha*
  ta.at(4, 2) = one;       // beta -> gamma
  ta.at(5, 3) = one;       // beta* -> gamma*
  ta.at(6, 4) = one;       // gamma -> delta
  ta.at(7, 5) = one;       // gamma* -> delta*
  ta.at(2, 6) = one;       // delta -> beta
  ta.at(3, 7) = one;       // delta* -> beta*
  f.vertex_perms.push_back({0, 2, 3, 1});
  f.arrow_matrices.push_back(ta);

  CycloMatrix tb(8, 8);
  tb.at(1, 0) = one;        // alpha -> alpha*
  tb.at(0, 1) = minus_one;  // alpha* -> -alpha
  tb.at(2, 2) = minus_one;  // beta -> -beta
  tb.at(3, 3) = minus_one;
  tb.at(6, 4) = minus_one;  // gamma -> -delta
  tb.at(7, 5) = minus_one;
  tb.at(4, 6) = minus_one;  // delta -> -gamma
  tb.at(5, 7) = minus_one;
  f.vertex_perms.push_back({0, 1, 3, 2});
  f.arrow_matrices.push_back(tb);

  f.pairing = std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  return f;
}

InstanceFile glued_chains_instance(int n) {
  if (n < 2) fail_input("ParseError", "glued chains need n >= 2");
  InstanceFile f;
  f.name = "glued-chains-" + std::to_string(n);
  f.level = 1;
  const int sink = 2 * n - 2;
  f.quiver.n_vertices = 2 * n - 1;
  for (int k = 1; k < n; ++k) f.quiver.vertex_labels.push_back(std::to_string(k));
  for (int k = 1; k < n; ++k) f.quiver.vertex_labels.push_back(std::to_string(k) + "'");
  f.quiver.vertex_labels.push_back(std::to_string(n));
  auto add = [&](const std::string& label, int s, int t) {
    f.quiver.arrows.push_back({static_cast<int>(f.quiver.arrows.size()), s, t, label});
  };
  for (int k = 0; k + 1 < n; ++k)
    add("a" + std::to_string(k + 1), k, k + 2 < n ? k + 1 : sink);
  for (int k = 0; k + 1 < n; ++k)
    add("b" + std::to_string(k + 1), n - 1 + k, k + 2 < n ? n + k : sink);

  f.group_type = InstanceFile::GroupType::kPermutationGenerators;
  f.perm_degree = f.quiver.n_vertices;
  std::vector<int> swap_perm(f.perm_degree);
  for (int v = 0; v < f.perm_degree; ++v) swap_perm[v] = v;
  for (int k = 0; k + 1 < n; ++k) std::swap(swap_perm[k], swap_perm[n - 1 + k]);
  f.perm_generators = {swap_perm};

  const int m = static_cast<int>(f.quiver.arrows.size());
  CycloMatrix t(m, m);
  for (int k = 0; k + 1 < n; ++k) {
    t.at(n - 1 + k, k) = CycloNumber(1);
    t.at(k, n - 1 + k) = CycloNumber(1);
  }
  f.vertex_perms.push_back(swap_perm);
  f.arrow_matrices.push_back(t);
  return f;
}

namespace {

struct CosetSpace {
  std::vector<int> rep_of_point;   // canonical (minimal) coset representative
  std::vector<int> point_of_elem;  // group element -> point
};

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h) {
  CosetSpace cs;
  cs.point_of_elem.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (cs.point_of_elem[x] >= 0) continue;
    int rep = g.order;
    std::vector<int> members;
    for (int s : h.elements) members.push_back(g.mul(s, x));
    for (int mmb : members) rep = std::min(rep, mmb);
    const int pt = static_cast<int>(cs.rep_of_point.size());
    cs.rep_of_point.push_back(rep);
    for (int mmb : members) cs.point_of_elem[mmb] = pt;
  }
  return cs;
}

}  // namespace

InstanceFile random_instance(std::uint64_t seed) {
  Rng rng(seed * 2 + 1);

  // fixed zoo, all of order <= 24
  std::vector<FiniteGroup> zoo;
  for (int n : {2, 3, 4, 6}) zoo.push_back(cyclic_group(n));
  zoo.push_back(dihedral_group(3));
  zoo.push_back(dihedral_group(4));
  zoo.push_back(symmetric_group(3));
  zoo.push_back(symmetric_group(4));
  zoo.push_back(quaternion_group());
  zoo.push_back(binary_dihedral_group(3));
  FiniteGroup g = std::move(zoo[rng.below(zoo.size())]);

  const long n0 = g.exponent();
  const PrimeEmbedding scratch = choose_prime(n0, g.order + 7);
  const std::vector<Subgroup> subs = all_subgroups(g);

  // vertex orbits: coset spaces of random subgroups, <= 5 points total
  const int target_vertices = 1 + static_cast<int>(rng.below(5));
  std::vector<CosetSpace> spaces;
  std::vector<int> orbit_offset;
  int n_vertices = 0;
  while (n_vertices < target_vertices) {
    std::vector<int> fitting;
    for (std::size_t si = 0; si < subs.size(); ++si)
      if (g.order / subs[si].order() <= target_vertices - n_vertices)
        fitting.push_back(static_cast<int>(si));
    if (fitting.empty()) break;
    const Subgroup& h = subs[fitting[rng.below(fitting.size())]];
    orbit_offset.push_back(n_vertices);
    spaces.push_back(coset_space(g, h));
    n_vertices += static_cast<int>(spaces.back().rep_of_point.size());
  }

  auto vertex_image = [&](int v, int x) {
    int oi = 0;
    while (oi + 1 < static_cast<int>(orbit_offset.size()) && orbit_offset[oi + 1] <= v) ++oi;
    const CosetSpace& cs = spaces[oi];
    const int local = v - orbit_offset[oi];
    return orbit_offset[oi] + cs.point_of_elem[g.mul(cs.rep_of_point[local], x)];
  };

  InstanceFile f;
  f.name = "random-" + std::to_string(seed);
  f.level = n0;
  f.quiver.n_vertices = n_vertices;
  for (int v = 0; v < n_vertices; ++v) f.quiver.vertex_labels.push_back("v" + std::to_string(v));

  // arrow orbits: induced monomial actions from a scalar character of the
  // stabilizer of a random vertex pair
  struct ArrowOrbit {
    std::vector<std::pair<int, int>> pairs;      // in discovery order
    std::vector<int> transporter;                // min g with base^g = pair
    SubgroupCtxPtr stab;
    std::vector<CycloNumber> phi;                // per local stabilizer element
  };
  std::vector<ArrowOrbit> orbits;
  int arrow_budget = 1 + static_cast<int>(rng.below(6));
  for (int attempt = 0; attempt < 40 && arrow_budget > 0; ++attempt) {
    const int v = static_cast<int>(rng.below(n_vertices));
    const int w = static_cast<int>(rng.below(n_vertices));
    std::vector<int> stab_elems;
    for (int x = 0; x < g.order; ++x)
      if (vertex_image(v, x) == v && vertex_image(w, x) == w) stab_elems.push_back(x);
    const int orbit_size = g.order / static_cast<int>(stab_elems.size());
    if (orbit_size > arrow_budget) continue;
    ArrowOrbit orb;
    orb.stab = make_subgroup_ctx(Subgroup{&g, stab_elems});
    // one representative pair per point of the orbit, minimal transporter
    std::vector<std::pair<int, int>> seen;
    for (int x = 0; x < g.order; ++x) {
      std::pair<int, int> im{vertex_image(v, x), vertex_image(w, x)};
      if (std::find(seen.begin(), seen.end(), im) == seen.end()) {
        seen.push_back(im);
        orb.pairs.push_back(im);
        orb.transporter.push_back(x);
      }
    }
    // random scalar character of the stabilizer
    CharacterTable st = compute_character_table(orb.stab, scratch);
    std::vector<int> linear;
    for (int k = 0; k < st.size(); ++k)
      if (st.degrees[k] == 1) linear.push_back(k);
    const int pick = linear[rng.below(linear.size())];
    for (int loc = 0; loc < orb.stab->order(); ++loc) {
      const std::uint32_t val =
          st.irreducibles[pick].values[orb.stab->classes.class_of[loc]];
      auto d = scratch.dlog(val);
      if (!d) fail_guard("SplitFailure", "scalar character value is not a root of unity");
      orb.phi.push_back(CycloNumber::root_of_unity(n0, *d));
    }
    arrow_budget -= orbit_size;
    orbits.push_back(std::move(orb));
  }

  int arrow_id = 0;
  std::vector<std::vector<int>> arrow_index;  // per orbit, per pair
  for (std::size_t ok = 0; ok < orbits.size(); ++ok) {
    arrow_index.emplace_back();
    for (std::size_t q = 0; q < orbits[ok].pairs.size(); ++q) {
      arrow_index.back().push_back(arrow_id);
      f.quiver.arrows.push_back({arrow_id, orbits[ok].pairs[q].first,
                                 orbits[ok].pairs[q].second,
                                 "a" + std::to_string(ok) + "_" + std::to_string(q)});
      ++arrow_id;
    }
  }

  f.group_type = InstanceFile::GroupType::kCayleyTable;
  f.cayley.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) f.cayley[a][b] = g.mul(a, b);

  const std::vector<int> gens = generating_set(g);
  for (int s : gens) {
    f.action_elements.push_back(s);
    std::vector<int> vp(n_vertices);
    for (int v = 0; v < n_vertices; ++v) vp[v] = vertex_image(v, s);
    f.vertex_perms.push_back(vp);
    CycloMatrix t(arrow_id, arrow_id);
    for (std::size_t ok = 0; ok < orbits.size(); ++ok) {
      const ArrowOrbit& orb = orbits[ok];
      for (std::size_t q = 0; q < orb.pairs.size(); ++q) {
        const std::pair<int, int> image{vertex_image(orb.pairs[q].first, s),
                                        vertex_image(orb.pairs[q].second, s)};
        const auto it = std::find(orb.pairs.begin(), orb.pairs.end(), image);
        const std::size_t qp = static_cast<std::size_t>(it - orb.pairs.begin());
        // t_q * s = sigma * t_q', sigma in the stabilizer
        const int sigma = g.mul(g.mul(orb.transporter[q], s), g.inv(orb.transporter[qp]));
        t.at(arrow_index[ok][qp], arrow_index[ok][q]) = orb.phi[orb.stab->local_of(sigma)];
      }
    }
    f.arrow_matrices.push_back(std::move(t));
  }
  return f;
}

}  // namespace skewq

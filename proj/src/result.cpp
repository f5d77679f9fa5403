#include "skewq/result.hpp"

#include "json.hpp"
#include "skewq/error.hpp"

namespace skewq {

using nlohmann::json;

bool ResultFile::operator==(const ResultFile& o) const {
  return instance_name == o.instance_name && prime == o.prime && level == o.level &&
         omega == o.omega && vertices == o.vertices && mult == o.mult &&
         provenance == o.provenance && q_prime == o.q_prime && mckay == o.mckay &&
         timings_ms == o.timings_ms;
}

ResultFile make_result(const FoldResult& fold, const std::string& instance_name) {
  ResultFile r;
  r.instance_name = instance_name;
  r.prime = fold.emb.field.p();
  r.level = fold.emb.level;
  r.omega = fold.emb.omega;
  for (const SkewVertex& v : fold.skew.vertices) {
    ResultFile::Vertex rv;
    rv.orbit_rep = fold.quiver->vertex_label(v.orbit_rep);
    rv.irr = v.irr;
    rv.degree = v.degree;
    rv.label = v.label;
    for (std::uint32_t x : fold.tables[v.orbit].irreducibles[v.irr].values)
      rv.character.push_back(x);
    r.vertices.push_back(std::move(rv));
  }
  r.mult = fold.skew.mult;
  for (int v = 0; v < fold.skew.size(); ++v) {
    for (int w = 0; w < fold.skew.size(); ++w) {
      if (fold.skew.provenance[v][w].empty()) continue;
      ResultFile::Provenance pr;
      pr.from = v;
      pr.to = w;
      for (const SkewContribution& c : fold.skew.provenance[v][w])
        pr.contributions.push_back({fold.quiver->vertex_label(c.pair.first),
                                    fold.quiver->vertex_label(c.pair.second), c.count});
      r.provenance.push_back(std::move(pr));
    }
  }
  return r;
}

std::string serialize_result(const ResultFile& r) {
  json j;
  j["format"] = "skewq-result/1";
  j["instance"] = r.instance_name;
  j["prime"] = r.prime;
  j["level"] = r.level;
  j["omega"] = r.omega;
  j["vertices"] = json::array();
  for (const auto& v : r.vertices)
    j["vertices"].push_back({{"orbit_rep", v.orbit_rep},
                             {"irr", v.irr},
                             {"degree", v.degree},
                             {"label", v.label},
                             {"character", v.character}});
  j["multiplicity"] = r.mult;
  j["provenance"] = json::array();
  for (const auto& p : r.provenance) {
    json contribs = json::array();
    for (const auto& c : p.contributions)
      contribs.push_back({{"pair", {c.pair_from, c.pair_to}}, {"count", c.count}});
    j["provenance"].push_back({{"from", p.from}, {"to", p.to}, {"contributions", contribs}});
  }
  if (r.q_prime) {
    json arrows = json::array();
    for (const auto& a : *r.q_prime)
      arrows.push_back({{"from", a.from}, {"to", a.to}, {"count", a.count}});
    j["double"]["q_prime"] = arrows;
  }
  if (r.mckay)
    j["mckay"] = {{"affine_type", r.mckay->affine_type},
                  {"degrees", r.mckay->degrees},
                  {"crosscheck", r.mckay->crosscheck}};
  if (r.timings_ms) {
    json t = json::object();
    for (const auto& [k, v] : *r.timings_ms) t[k] = v;
    j["diagnostics"]["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

ResultFile parse_result(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
  try {
    ResultFile r;
    r.instance_name = j.at("instance").get<std::string>();
    r.prime = j.at("prime").get<long long>();
    r.level = j.at("level").get<long>();
    r.omega = j.at("omega").get<long long>();
    for (const json& v : j.at("vertices")) {
      ResultFile::Vertex rv;
      rv.orbit_rep = v.at("orbit_rep").get<std::string>();
      rv.irr = v.at("irr").get<int>();
      rv.degree = v.at("degree").get<int>();
      rv.label = v.at("label").get<std::string>();
      rv.character = v.at("character").get<std::vector<long long>>();
      r.vertices.push_back(std::move(rv));
    }
    r.mult = j.at("multiplicity").get<std::vector<std::vector<long long>>>();
    for (const json& p : j.at("provenance")) {
      ResultFile::Provenance pr;
      pr.from = p.at("from").get<int>();
      pr.to = p.at("to").get<int>();
      for (const json& c : p.at("contributions"))
        pr.contributions.push_back({c.at("pair").at(0).get<std::string>(),
                                    c.at("pair").at(1).get<std::string>(),
                                    c.at("count").get<long long>()});
      r.provenance.push_back(std::move(pr));
    }
    if (j.contains("double")) {
      std::vector<ResultFile::QPrimeArrow> arrows;
      for (const json& a : j.at("double").at("q_prime"))
        arrows.push_back(
            {a.at("from").get<int>(), a.at("to").get<int>(), a.at("count").get<long long>()});
      r.q_prime = std::move(arrows);
    }
    if (j.contains("mckay")) {
      ResultFile::McKaySection mk;
      mk.affine_type = j.at("mckay").at("affine_type").get<std::string>();
      mk.degrees = j.at("mckay").at("degrees").get<std::vector<int>>();
      mk.crosscheck = j.at("mckay").at("crosscheck").get<bool>();
      r.mckay = std::move(mk);
    }
    if (j.contains("diagnostics") && j.at("diagnostics").contains("timings_ms")) {
      std::vector<std::pair<std::string, long long>> t;
      for (const auto& [k, v] : j.at("diagnostics").at("timings_ms").items())
        t.emplace_back(k, v.get<long long>());
      r.timings_ms = std::move(t);
    }
    return r;
  } catch (const json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
}

std::string export_dot(const ResultFile& r) {
  std::string out = "digraph skew {\n";
  for (std::size_t v = 0; v < r.vertices.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + r.vertices[v].label + " (deg " +
           std::to_string(r.vertices[v].degree) + ")\"];\n";
  for (std::size_t v = 0; v < r.mult.size(); ++v)
    for (std::size_t w = 0; w < r.mult[v].size(); ++w)
      for (long long k = 0; k < r.mult[v][w]; ++k)
        out += "  n" + std::to_string(v) + " -> n" + std::to_string(w) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace skewq

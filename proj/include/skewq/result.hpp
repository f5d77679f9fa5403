#pragma once

#include "skewq/mckay.hpp"
#include "skewq/skew.hpp"

namespace skewq {

/// Serializable fold output: the skew quiver with a legend (vertex labels,
/// character degrees and values), the multiplicity matrix, per-pair
/// provenance, the prime used, and optional double-structure / McKay
/// sections.
struct ResultFile {
  std::string instance_name;
  long long prime = 0;
  long level = 1;
  long long omega = 1;

  struct Vertex {
    std::string orbit_rep;
    int irr = 0;
    int degree = 1;
    std::string label;
    std::vector<long long> character;  // F_p values on the stabilizer's classes
    bool operator==(const Vertex& o) const = default;
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<long long>> mult;

  struct Contribution {
    std::string pair_from, pair_to;  // base-quiver vertex labels
    long long count = 0;
    bool operator==(const Contribution& o) const = default;
  };
  struct Provenance {
    int from = 0, to = 0;
    std::vector<Contribution> contributions;
    bool operator==(const Provenance& o) const = default;
  };
  std::vector<Provenance> provenance;  // only vertex pairs with contributions

  struct QPrimeArrow {
    int from = 0, to = 0;
    long long count = 0;
    bool operator==(const QPrimeArrow& o) const = default;
  };
  std::optional<std::vector<QPrimeArrow>> q_prime;

  struct McKaySection {
    std::string affine_type;
    std::vector<int> degrees;
    bool crosscheck = false;
    bool operator==(const McKaySection& o) const = default;
  };
  std::optional<McKaySection> mckay;

  std::optional<std::vector<std::pair<std::string, long long>>> timings_ms;

  bool operator==(const ResultFile& o) const;
};

ResultFile make_result(const FoldResult& fold, const std::string& instance_name);

std::string serialize_result(const ResultFile& r);
ResultFile parse_result(const std::string& json_text);

/// Deterministic DOT rendering: one node per skew vertex in vertex order,
/// one edge line per arrow-count unit, parallel edges repeated.
std::string export_dot(const ResultFile& r);

}  // namespace skewq

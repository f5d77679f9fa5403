#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "skewq/cli.hpp"
#include "skewq/error.hpp"
#include "skewq/result.hpp"

using namespace skewq;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/skewq_test_" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("instance files round-trip") {
  for (InstanceFile file :
       {binary_dihedral_12_instance(), glued_chains_instance(3), glued_chains_instance(5),
        random_instance(7), random_instance(8)}) {
    const std::string text = serialize_instance(file);
    InstanceFile back = parse_instance(text);
    CHECK(back == file);
    CHECK(serialize_instance(back) == text);
  }
  CHECK_THROWS_AS(parse_instance("{ not json"), Error);
  CHECK_THROWS_AS(parse_instance("{\"level\": 1}"), Error);
}

TEST_CASE("result files round-trip and are byte-identical across reruns") {
  const auto& fx = test::bd12();
  ResultFile r = make_result(fx.fold, "binary-dihedral-12");
  const std::string text = serialize_result(r);
  ResultFile back = parse_result(text);
  CHECK(back == r);
  CHECK(serialize_result(back) == text);

  // full determinism, including the prime choice
  ResolvedInstance again = resolve_instance(binary_dihedral_12_instance());
  FoldResult fold2 = build_skew_quiver(again.quiver, *again.group, again.action);
  CHECK(serialize_result(make_result(fold2, "binary-dihedral-12")) == text);
}

TEST_CASE("dot export") {
  {
    ResultFile empty;
    CHECK(export_dot(empty) == "digraph skew {\n}\n");
  }
  {
    const auto& fx = test::bd12();
    ResultFile r = make_result(fx.fold, "binary-dihedral-12");
    const std::string dot = export_dot(r);
    std::size_t nodes = 0, edges = 0;
    std::istringstream lines(dot);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find("label=") != std::string::npos) ++nodes;
      if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 10);
    CHECK(edges == 26);
  }
  {
    // cyclic order 3: the double cycle has 3 nodes and 6 directed edges
    std::string out;
    REQUIRE(cli({"mckay", "--zoo", "cyclic-3", "--emit", "dot"}, &out) == 0);
    std::size_t nodes = 0, edges = 0;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find("label=") != std::string::npos) ++nodes;
      if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 3);
    CHECK(edges == 6);
  }
}

TEST_CASE("cli: fold, verify, exit codes") {
  const std::string inst =
      write_temp("bd12.json", serialize_instance(binary_dihedral_12_instance()));

  std::string out;
  REQUIRE(cli({"fold", inst}, &out) == 0);
  ResultFile r = parse_result(out);
  CHECK(r.vertices.size() == 10);
  CHECK(r.timings_ms == std::nullopt);  // byte-identical by default

  std::string out2;
  REQUIRE(cli({"fold", inst}, &out2) == 0);
  CHECK(out2 == out);

  // verify agrees everywhere
  std::string vout;
  CHECK(cli({"verify", inst}, &vout) == 0);
  CHECK(vout.find("all 100 entries agree") != std::string::npos);

  // fold-double runs the invariance check and emits the orientation
  std::string dout;
  REQUIRE(cli({"fold-double", inst}, &dout) == 0);
  ResultFile dr = parse_result(dout);
  REQUIRE(dr.q_prime.has_value());
  long long total = 0;
  for (const auto& a : *dr.q_prime) total += a.count;
  CHECK(total == 13);

  // --check-choices reruns with random frames
  std::string err;
  CHECK(cli({"fold", inst, "--check-choices", "3"}, &out, &err) == 0);
  CHECK(err.find("3 randomized rerolls agree") != std::string::npos);

  // missing files and malformed instances are input errors
  CHECK(cli({"fold", "/nonexistent/path.json"}) == 1);
  const std::string garbage = write_temp("garbage.json", "{\"level\": 6}");
  CHECK(cli({"fold", garbage}) == 1);

  // a valid action whose relation is unstable exits with the hypothesis code
  InstanceFile broken = binary_dihedral_12_instance();
  const Rational half(BigInt(1), BigInt(2));
  broken.arrow_matrices[0].at(4, 2) = CycloNumber(half, 1);
  broken.arrow_matrices[0].at(6, 4) = CycloNumber(2);
  broken.arrow_matrices[1].at(6, 4) = CycloNumber(-2);
  broken.arrow_matrices[1].at(4, 6) = -CycloNumber(half, 1);
  const std::string broken_path = write_temp("broken.json", serialize_instance(broken));
  CHECK(cli({"fold-double", broken_path}, &out, &err) == 2);
  CHECK(err.find("NotInvariant") != std::string::npos);

  // prime overrides are validated; 2377 = 1 mod 12 is prime and above the
  // safety bound, and differs from the default choice
  CHECK(cli({"fold", inst, "--prime", "101"}) == 1);
  std::string pout;
  CHECK(cli({"fold", inst, "--prime", "2377"}, &pout) == 0);
  CHECK(parse_result(pout).prime == 2377);
  CHECK(parse_result(out2).prime != 2377);
}

TEST_CASE("cli: gen produces verifiable instances") {
  // verify can also generate its instance directly from a seed
  CHECK(cli({"verify", "--seed", "5"}) == 0);
  std::string text;
  REQUIRE(cli({"gen", "--seed", "42"}, &text) == 0);
  const std::string path = write_temp("gen42.json", text);
  std::string vout;
  CHECK(cli({"verify", path}, &vout) == 0);
  // deterministic generation
  std::string text2;
  REQUIRE(cli({"gen", "--seed", "42"}, &text2) == 0);
  CHECK(text2 == text);
}

TEST_CASE("cli: extend-fold emits the doubled fold") {
  const std::string inst = write_temp("chains.json", serialize_instance(glued_chains_instance(3)));
  std::string out;
  REQUIRE(cli({"extend-fold", inst}, &out) == 0);
  ResultFile r = parse_result(out);
  CHECK(r.vertices.size() == 4);
  REQUIRE(r.q_prime.has_value());
  long long total = 0;
  for (const auto& a : *r.q_prime) total += a.count;
  CHECK(total == 3);  // the fork, one orientation each
}

TEST_CASE("cli: mckay rejects unknown zoo entries") {
  CHECK(cli({"mckay", "--zoo", "icosahedral"}) == 1);
  std::string out, err;
  CHECK(cli({"mckay", "--zoo", "binary-dihedral-12"}, &out, &err) == 0);
  ResultFile r = parse_result(out);
  REQUIRE(r.mckay.has_value());
  CHECK(r.mckay->affine_type == "D~5");
  CHECK(r.mckay->crosscheck);
}

TEST_CASE("bundled data files parse and match the builtin instances") {
#ifdef SKEWQ_DATA_DIR
  auto read = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string dir = SKEWQ_DATA_DIR;
  CHECK(parse_instance(read(dir + "/binary_dihedral_12.json")) ==
        binary_dihedral_12_instance());
  CHECK(parse_instance(read(dir + "/glued_chains_n3.json")) == glued_chains_instance(3));
  CHECK(parse_instance(read(dir + "/random_seed_42.json")) == random_instance(42));
  // the bundled random instance passes end-to-end verification
  std::string vout;
  CHECK(cli({"verify", dir + "/random_seed_42.json"}, &vout) == 0);
  CHECK(cli({"fold", dir + "/glued_chains_n3.json"}, &vout) == 0);
  CHECK(parse_result(vout).vertices.size() == 4);
#endif
}

TEST_CASE("cli: mckay accepts custom generator files") {
  // an order-3 cyclic subgroup given explicitly
  const std::string gens = R"({
    "name": "custom-cyclic-3",
    "level": 3,
    "generators": [ [["z", "0"], ["0", "z^2"]] ]
  })";
  const std::string path = write_temp("sl2gens.json", gens);
  std::string out;
  REQUIRE(cli({"mckay", path}, &out) == 0);
  ResultFile r = parse_result(out);
  REQUIRE(r.mckay.has_value());
  CHECK(r.mckay->affine_type == "A~2");
  CHECK(r.vertices.size() == 3);
  // determinant validation applies to files too
  const std::string bad = write_temp("sl2bad.json", R"({
    "name": "bad", "level": 1,
    "generators": [ [["2", "0"], ["0", "1"]] ]
  })");
  CHECK(cli({"mckay", bad}) == 1);
}

#include "skewq/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewq/error.hpp"
#include "skewq/instance.hpp"
#include "skewq/oracle.hpp"
#include "skewq/result.hpp"
#include "skewq/selftest.hpp"

namespace skewq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_input("FileError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail_input("FileError", "cannot write " + out_path);
  f << text;
}

struct CommonOpts {
  std::string instance_path;
  std::string out_path;
  std::string emit = "structured";
  std::optional<long long> prime;
  std::optional<std::uint64_t> seed;
  int check_choices = 0;
  bool timings = false;
};

ResolvedInstance load_instance(const CommonOpts& o) {
  InstanceFile file;
  if (!o.instance_path.empty())
    file = parse_instance(read_file(o.instance_path));
  else if (o.seed)
    file = random_instance(*o.seed);
  else
    fail_input("FileError", "no instance file given and no --seed to generate one");
  ResolvedInstance inst = resolve_instance(file);
  if (o.prime) inst.prime = o.prime;  // command line overrides the file
  return inst;
}

void emit_result(ResultFile result, const CommonOpts& o, std::ostream& out,
                 long long elapsed_ms) {
  if (o.timings) result.timings_ms = {{std::make_pair(std::string("total"), elapsed_ms)}};
  write_output(o.emit == "dot" ? export_dot(result) : serialize_result(result), o.out_path, out);
}

void run_choice_invariance(const ResolvedInstance& inst, const FoldResult& canonical, int k,
                           std::uint64_t base_seed, std::ostream& err) {
  for (int run = 0; run < k; ++run) {
    FoldOptions opts;
    opts.prime_override = inst.prime;
    opts.choices = FrameChoices{true, base_seed + 1000003ull * (run + 1)};
    FoldResult redo = build_skew_quiver(inst.quiver, *inst.group, inst.action, opts);
    auto matching = match_by_twist(canonical, redo);
    if (!matching || !isomorphic_as_labeled(canonical.skew, redo.skew, *matching))
      fail_guard("ChoiceVariance",
                 "fold depends on representative choices (reroll " + std::to_string(run) + ")");
  }
  err << "choice-invariance: " << k << " randomized rerolls agree\n";
}

int cmd_fold(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  ResolvedInstance inst = load_instance(o);
  FoldOptions opts;
  opts.prime_override = inst.prime;
  FoldResult fold = build_skew_quiver(inst.quiver, *inst.group, inst.action, opts);
  if (o.check_choices > 0)
    run_choice_invariance(inst, fold, o.check_choices, o.seed.value_or(1), err);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  emit_result(make_result(fold, inst.name), o, out, elapsed);
  return 0;
}

int cmd_fold_double(const CommonOpts& o, std::ostream& out, std::ostream& err, bool extend) {
  const auto start = std::chrono::steady_clock::now();
  ResolvedInstance inst = load_instance(o);
  FoldOptions opts;
  opts.prime_override = inst.prime;

  const Quiver* fold_quiver = &inst.quiver;
  const LinearQuiverAction* fold_action = &inst.action;
  DoubleQuiver dq;
  LinearQuiverAction extended;
  std::optional<FoldResult> base;
  if (extend) {
    dq = double_quiver(inst.quiver);
    extended = extend_action_contragredient(inst.quiver, inst.action, dq);
    base = build_skew_quiver(inst.quiver, *inst.group, inst.action, opts);
    fold_quiver = &dq.quiver;
    fold_action = &extended;
  } else {
    if (!inst.dq)
      fail_input("BadPairing", "fold-double needs a pairing declaration in the instance");
    dq = *inst.dq;
  }
  FoldDoubleResult fd =
      fold_double(dq, *inst.group, *fold_action, opts, base ? &base->skew : nullptr);
  if (o.check_choices > 0)
    run_choice_invariance(ResolvedInstance{inst.group, *fold_quiver, *fold_action, {},
                                           inst.prime, inst.name},
                          fd.fold, o.check_choices, o.seed.value_or(1), err);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  ResultFile result = make_result(fd.fold, inst.name);
  std::vector<ResultFile::QPrimeArrow> qp;
  for (const auto& a : fd.structure.q_prime) qp.push_back({a.from, a.to, a.count});
  result.q_prime = std::move(qp);
  if (extend && !o.out_path.empty()) {
    write_output(serialize_result(make_result(*base, inst.name + "-base")),
                 o.out_path + ".base.json", out);
    err << "base fold written to " << o.out_path << ".base.json"
        << " (doubled fold equals base + transpose; checked)\n";
  }
  emit_result(std::move(result), o, out, elapsed);
  return 0;
}

Sl2Generators parse_sl2_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
  try {
    Sl2Generators s;
    s.name = j.value("name", "sl2");
    s.level = j.at("level").get<long>();
    for (const auto& gen : j.at("generators")) {
      CycloMatrix m(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          m.at(r, c) = CycloNumber::parse(gen.at(r).at(c).get<std::string>(), s.level);
      s.generators.push_back(std::move(m));
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    fail_input("ParseError", ex.what());
  }
}

Sl2Generators zoo_entry(const std::string& name) {
  for (Sl2Generators& e : sl2_zoo())
    if (e.name == name) return std::move(e);
  std::string names;
  for (const Sl2Generators& e : sl2_zoo()) names += " " + e.name;
  fail_input("BadZooEntry", "unknown zoo entry \"" + name + "\"; available:" + names);
}

int cmd_mckay(const CommonOpts& o, const std::string& zoo_name, std::ostream& out,
              std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Sl2Generators gens;
  if (!zoo_name.empty())
    gens = zoo_entry(zoo_name);
  else if (!o.instance_path.empty())
    gens = parse_sl2_file(read_file(o.instance_path));
  else
    fail_input("FileError", "mckay needs a generator file or --zoo entry");
  SL2Subgroup s = close_sl2(gens);
  McKayGraph mk = mckay_graph(s, o.prime);
  const bool cross = crosscheck_mckay_fold(s, o.prime);
  if (!cross)
    fail_guard("UnrecognizedShape", "loop fold disagrees with the McKay adjacency");
  err << gens.name << ": order " << s.closure.order << ", " << mk.affine_type
      << ", crosscheck ok\n";

  // report through the fold pipeline so the output carries the quiver
  Sl2LoopInstance inst = sl2_loop_instance(s);
  FoldOptions opts;
  opts.prime_override = o.prime;
  FoldDoubleResult fd = fold_double(inst.dq, s.closure, inst.action, opts);
  ResultFile result = make_result(fd.fold, gens.name);
  std::vector<ResultFile::QPrimeArrow> qp;
  for (const auto& a : fd.structure.q_prime) qp.push_back({a.from, a.to, a.count});
  result.q_prime = std::move(qp);
  result.mckay = ResultFile::McKaySection{mk.affine_type, mk.degrees, cross};
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  emit_result(std::move(result), o, out, elapsed);
  return 0;
}

int cmd_verify(const CommonOpts& o, std::ostream& out) {
  ResolvedInstance inst = load_instance(o);
  FoldOptions opts;
  opts.prime_override = inst.prime;
  FoldResult fold = build_skew_quiver(inst.quiver, *inst.group, inst.action, opts);
  ExplicitBimodule bim = build_explicit(inst.quiver, *inst.group, fold.act_p, fold.emb);
  const auto counts = oracle_all_counts(bim, fold);
  int mismatches = 0;
  for (int v = 0; v < fold.skew.size(); ++v)
    for (int w = 0; w < fold.skew.size(); ++w)
      if (counts[v][w] != fold.skew.mult[v][w]) {
        ++mismatches;
        out << "MISMATCH " << fold.skew.vertices[v].label << " -> "
            << fold.skew.vertices[w].label << ": formula " << fold.skew.mult[v][w]
            << ", oracle " << counts[v][w] << "\n";
      }
  const int n = fold.skew.size();
  if (mismatches == 0) {
    out << "verify " << inst.name << ": all " << n * n << " entries agree (prime "
        << fold.emb.field.p() << ")\n";
    return 0;
  }
  out << "verify " << inst.name << ": " << mismatches << " of " << n * n
      << " entries disagree\n";
  fail_guard("OracleMismatch", "formula and rank counts disagree on " + inst.name);
}

int cmd_gen(std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  write_output(serialize_instance(random_instance(seed)), out_path, out);
  return 0;
}

int cmd_selftest(std::ostream& out) {
  SelftestReport rep = run_selftest();
  for (const auto& [name, ok] : rep.checks)
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
  if (!rep.ok()) fail_guard("SelftestFailure", "bundled example suite failed");
  out << "selftest: " << rep.checks.size() << " checks passed\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"skewq: fold a quiver with a finite group action into the quiver of the skew "
               "group algebra"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_instance) {
    if (with_instance)
      cmd->add_option("instance", o.instance_path, "instance file (JSON)");
    cmd->add_option("-o,--output", o.out_path, "write output here instead of stdout");
    cmd->add_option("--emit", o.emit, "output format: structured | dot")
        ->check(CLI::IsMember({"structured", "dot"}));
    cmd->add_option("--prime", o.prime, "override the working prime (validated)");
    cmd->add_option("--seed", o.seed, "seed for the generated instance / rerolls");
    cmd->add_flag("--timings", o.timings, "include wall-clock timings in the result");
  };

  CommonOpts fold_o, folddb_o, extend_o, mckay_o, verify_o;
  std::string zoo_name;
  std::uint64_t gen_seed = 0;
  std::string gen_out;

  CLI::App* fold = app.add_subcommand("fold", "fold an instance");
  add_common(fold, fold_o, true);
  fold->add_option("--check-choices", fold_o.check_choices,
                   "rerun with randomized representative choices and compare");

  CLI::App* folddb = app.add_subcommand(
      "fold-double", "fold a declared double quiver (checks the relation is stable)");
  add_common(folddb, folddb_o, true);
  folddb->add_option("--check-choices", folddb_o.check_choices,
                     "rerun with randomized representative choices and compare");

  CLI::App* extend = app.add_subcommand(
      "extend-fold", "extend the action to the double quiver contragrediently, then fold");
  add_common(extend, extend_o, true);

  CLI::App* mckay = app.add_subcommand("mckay", "McKay graph and affine type of an SL2 subgroup");
  add_common(mckay, mckay_o, true);
  mckay->add_option("--zoo", zoo_name, "bundled subgroup, e.g. cyclic-5, binary-dihedral-12");

  CLI::App* verify = app.add_subcommand(
      "verify", "fold and independently recount every multiplicity by explicit ranks");
  add_common(verify, verify_o, true);

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("-o,--output", gen_out, "write the instance here");

  CLI::App* selftest = app.add_subcommand("selftest", "run the bundled example suite");
  (void)selftest;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << ex.what() << "\n";
    return 1;
  }

  try {
    if (fold->parsed()) return cmd_fold(fold_o, out, err);
    if (folddb->parsed()) return cmd_fold_double(folddb_o, out, err, false);
    if (extend->parsed()) return cmd_fold_double(extend_o, out, err, true);
    if (mckay->parsed()) return cmd_mckay(mckay_o, zoo_name, out, err);
    if (verify->parsed()) return cmd_verify(verify_o, out);
    if (gen->parsed()) return cmd_gen(gen_seed, gen_out, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    switch (ex.category()) {
      case ErrorCategory::kInput:
        return 1;
      case ErrorCategory::kHypothesis:
        return 2;
      case ErrorCategory::kGuard:
        return 3;
    }
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace skewq

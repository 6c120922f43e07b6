#include "congestlb/cli.hpp"
#include "congestlb/distance.hpp"
#include "congestlb/errors.hpp"
#include "congestlb/gadgets.hpp"
#include "congestlb/graph_io.hpp"
#include "congestlb/programs.hpp"
#include "congestlb/reduction.hpp"
#include "congestlb/spanner.hpp"
#include "congestlb/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace congestlb {

using nlohmann::json;

namespace {

struct Options {
  std::string construction = "diameter-exact";
  unsigned k = 4;
  unsigned P = 1;
  std::string eps;
  bool shaved = false;
  std::string alpha = "1";
  std::string beta = "3";
  unsigned x = 1;
  bool weighted = false;
  unsigned clique_pad = 0;
  std::string sa, sb;
  std::uint64_t seed = 1;
  double density = -1;  // negative: 1/sqrt(length)
  std::string in;
  std::string out;
  // verify / sweep
  std::size_t trials = 0;
  bool exhaustive = false;
  bool structural = true;
  std::vector<std::string> sweep_constructions;
  std::vector<unsigned> sweep_k;
  std::vector<unsigned> sweep_P;
  std::string csv;
  // simulate / reduce
  std::string algo;
  std::size_t b = 0;
  std::size_t max_rounds = 1'000'000;
  NodeId source = 0;
  std::string ledger_csv;
  std::string c_disj = "1";
};

std::string out_dir() {
  const char* d = std::getenv("CONGESTLB_OUT_DIR");
  return d ? d : ".";
}

std::string default_path(const Options& o, const std::string& name) {
  if (!o.out.empty()) return o.out;
  return (std::filesystem::path(out_dir()) / name).string();
}

InstanceConfig config_from(const Options& o) {
  InstanceConfig s;
  s.construction = parse_construction(o.construction);
  s.params.k = o.k;
  s.params.P = o.P;
  s.params.shaved = o.shaved;
  if (!o.eps.empty()) {
    Rational eps = parse_rational(o.eps);
    s.params.eps = eps;
    switch (s.construction) {
      case Construction::DiameterApprox: s.params.P = gadgets::min_stretch_P(gadgets::StretchProblem::DiameterApprox, eps); break;
      case Construction::RadiusApprox: s.params.P = gadgets::min_stretch_P(gadgets::StretchProblem::RadiusApprox, eps); break;
      case Construction::Eccentricity: s.params.P = gadgets::min_stretch_P(gadgets::StretchProblem::EccApprox, eps); break;
      default: throw PreconditionError("--eps only applies to the approximation constructions");
    }
  }
  s.spanner.alpha = parse_rational(o.alpha);
  s.spanner.beta = parse_rational(o.beta);
  s.spanner.x = o.x;
  s.spanner.weighted = o.weighted;
  if (o.clique_pad) s.spanner.clique_pad = o.clique_pad;
  return s;
}

double density_for(const Options& o, std::size_t len) { return o.density >= 0 ? o.density : 1.0 / std::sqrt(double(len)); }

// input strings from flags, or seeded random ones
std::pair<Bits, Bits> inputs_from(const Options& o, const InstanceConfig& s, json& report) {
  std::size_t len = input_length(s);
  if (o.sa.empty() != o.sb.empty()) throw PreconditionError("give both --sa and --sb, or neither");
  if (!o.sa.empty()) return {parse_bits(o.sa), parse_bits(o.sb)};
  std::mt19937_64 rng(o.seed);
  double d = density_for(o, len);
  Bits sa = random_bits(len, d, rng), sb = random_bits(len, d, rng);
  report["random_input"] = {{"seed", o.seed}, {"density", d}};
  return {sa, sb};
}

Instance instance_from(const Options& o, json& report) {
  if (!o.in.empty()) return load_instance(document_from_json(read_json_file(o.in)));
  InstanceConfig s = config_from(o);
  auto [sa, sb] = inputs_from(o, s, report);
  return build_instance(s, sa, sb);
}

json instance_summary(const Instance& inst) {
  json j;
  j["construction"] = construction_name(inst.meta.construction);
  j["params"] = instance_params(inst);
  j["n"] = inst.graph.n();
  j["edges"] = inst.graph.edge_count();
  j["cut_size"] = inst.cut.size();
  j["intersecting"] = inst.intersecting();
  if (!inst.warnings.empty()) j["warnings"] = inst.warnings;
  return j;
}

void emit(const Options& o, std::ostream& out, const json& report, const std::string& file) {
  std::string text = report.dump(2) + "\n";
  if (!file.empty()) write_text_file(file, text);
  if (file.empty() || o.out.empty()) out << text;
}

int cmd_build(const Options& o, std::ostream& out) {
  json report;
  Instance inst = instance_from(o, report);
  std::string path = default_path(o, std::string(construction_name(inst.meta.construction)) + ".json");
  write_text_file(path, to_json(instance_document(inst)).dump(1) + "\n");
  report.update(instance_summary(inst));
  report["written"] = path;
  out << report.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  json report;
  report["command"] = "verify";
  bool ok = true;
  const bool sweep = o.in.empty() && o.sa.empty() && (o.trials > 0 || o.exhaustive);
  if (!sweep) {
    Instance inst = instance_from(o, report);
    auto checks = verify_instance(inst, {o.structural, true});
    ok = all_pass(checks);
    report.update(instance_summary(inst));
    report["checks"] = checks_json(checks);
  } else {
    InstanceConfig s = config_from(o);
    std::size_t len = input_length(s);
    auto cases = input_cases(len, o.exhaustive, o.trials, o.seed, density_for(o, len));
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // check -> (passed, total)
    json failures = json::array();
    std::size_t inst_ok = 0;
    for (const auto& c : cases) {
      Instance inst = build_instance(s, c.sa, c.sb);
      auto checks = verify_instance(inst, {o.structural, true});
      bool pass = all_pass(checks);
      inst_ok += pass;
      for (const auto& ch : checks) {
        auto& t = tally[ch.name];
        t.first += ch.pass;
        ++t.second;
      }
      if (!pass && failures.size() < 20)
        failures.push_back({{"kind", c.kind}, {"sa", bits_to_string(c.sa)}, {"sb", bits_to_string(c.sb)}, {"checks", checks_json(checks)}});
    }
    ok = inst_ok == cases.size();
    report["construction"] = o.construction;
    Instance probe = build_instance(s, cases.front().sa, cases.front().sb);
    report["params"] = instance_params(probe);
    report["params"].erase("sa");
    report["params"].erase("sb");
    report["seed"] = o.seed;
    report["exhaustive"] = o.exhaustive;
    report["instances"] = cases.size();
    report["instances_passed"] = inst_ok;
    json tj = json::object();
    for (const auto& [name, t] : tally) tj[name] = {{"passed", t.first}, {"total", t.second}};
    report["checks"] = tj;
    report["failures"] = failures;
  }
  report["pass"] = ok;
  emit(o, out, report, o.out);
  return ok ? 0 : 1;
}

std::unique_ptr<NodeProgram> program_named(const std::string& algo, const Options& o, const Instance& inst) {
  if (algo.empty() || algo == "reference") return reference_program(inst);
  if (algo == "bfs-layers") return bfs_layers(o.source);
  if (algo == "flood-max") return flood_max();
  if (algo == "apsp-diameter") return apsp_diameter();
  if (algo == "spanner-check") {
    if (!inst.meta.spanner) throw PreconditionError("spanner-check needs a spanner instance");
    return spanner_check(inst.meta.spanner->alpha, inst.meta.spanner->beta);
  }
  throw PreconditionError("unknown --algo '" + algo + "'");
}

int cmd_simulate(const Options& o, std::ostream& out) {
  json report;
  report["command"] = "simulate";
  Instance inst = instance_from(o, report);
  auto prog = program_named(o.algo, o, inst);
  RunConfig cfg = reference_config(inst);
  if (o.b) cfg.b = o.b;
  cfg.max_rounds = o.max_rounds;
  cfg.seed = o.seed;
  RunOutcome res = run(inst.graph, *prog, cfg);
  report.update(instance_summary(inst));
  report["algo"] = prog->name();
  report["outcome"] = outcome_json(inst.graph, res, &inst.cut);
  if (!o.ledger_csv.empty()) write_text_file(o.ledger_csv, res.ledger.to_csv(inst.graph));
  emit(o, out, report, o.out);
  return res.terminated ? 0 : 1;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  json report;
  Instance inst = instance_from(o, report);
  auto prog = program_named(o.algo, o, inst);
  RunConfig cfg = reference_config(inst);
  if (o.b) cfg.b = o.b;
  cfg.max_rounds = o.max_rounds;
  cfg.seed = o.seed;
  Transcript t = simulate_two_party(inst, *prog, cfg, reference_decision(inst.meta));
  report.update(reduction_report(inst, t, parse_rational(o.c_disj)));
  report["algo"] = prog->name();
  report["decision"] = reference_decision(inst.meta).description;
  report["sa"] = bits_to_string(inst.input.sa);
  report["sb"] = bits_to_string(inst.input.sb);
  bool ok = report["answer"] == report["ground_truth"];
  report["pass"] = ok;
  emit(o, out, report, o.out);
  return ok ? 0 : 1;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<std::string> names = o.sweep_constructions;
  if (names.empty())
    for (auto c : all_constructions()) names.emplace_back(construction_name(c));
  std::vector<unsigned> ks = o.sweep_k.empty() ? std::vector<unsigned>{4, 8} : o.sweep_k;
  std::vector<unsigned> Ps = o.sweep_P.empty() ? std::vector<unsigned>{1, 2} : o.sweep_P;
  std::size_t trials = o.trials ? o.trials : 20;
  std::ostringstream csv;
  csv << "construction,k,P,shaved,case,sa,sb,intersecting,metric,observed,predicted,pass\n";
  json groups = json::array();
  bool ok = true;
  for (const auto& name : names) {
    Options oc = o;
    oc.construction = name;
    Construction c = parse_construction(name);
    const bool uses_P = c == Construction::DiameterApprox || c == Construction::RadiusApprox || c == Construction::Eccentricity;
    for (unsigned k : ks) {
      if (c == Construction::RadiusConstDegree && k < 16) continue;
      for (unsigned P : uses_P ? Ps : std::vector<unsigned>{1}) {
        oc.k = k;
        oc.P = P;
        InstanceConfig s = config_from(oc);
        std::size_t len = input_length(s);
        auto cases = input_cases(len, false, trials, o.seed, density_for(oc, len));
        std::size_t passed = 0;
        for (const auto& cs : cases) {
          Instance inst = build_instance(s, cs.sa, cs.sb);
          auto checks = verify_instance(inst, {false, true});
          bool pass = all_pass(checks);
          passed += pass;
          Metric m = headline_metric(inst);
          csv << name << ',' << k << ',' << P << ',' << (s.params.shaved ? 1 : 0) << ',' << cs.kind << ','
              << bits_to_string(cs.sa) << ',' << bits_to_string(cs.sb) << ',' << (inst.intersecting() ? 1 : 0) << ','
              << m.name << ',' << m.observed << ',' << m.predicted << ',' << (pass ? 1 : 0) << '\n';
        }
        ok = ok && passed == cases.size();
        groups.push_back({{"construction", name}, {"k", k}, {"P", P}, {"instances", cases.size()}, {"passed", passed},
                          {"pass_rate", cases.empty() ? 1.0 : double(passed) / double(cases.size())}});
      }
    }
  }
  std::string csv_path = o.csv.empty() ? (std::filesystem::path(out_dir()) / "sweep.csv").string() : o.csv;
  write_text_file(csv_path, csv.str());
  json report{{"command", "sweep"}, {"seed", o.seed}, {"groups", groups}, {"csv", csv_path}, {"pass", ok}};
  emit(o, out, report, o.out);
  return ok ? 0 : 1;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  GraphDocument doc;
  if (!o.in.empty()) {
    doc = document_from_json(read_json_file(o.in));
  } else {
    json scratch;
    doc = instance_document(instance_from(o, scratch));
  }
  std::string dot = to_dot(doc);
  if (o.out.empty())
    out << dot;
  else
    write_text_file(o.out, dot);
  return 0;
}

void add_instance_flags(CLI::App* sub, Options& o) {
  sub->add_option("--construction", o.construction,
                  "diameter-exact | diameter-approx | radius-exact | radius-approx | eccentricity | "
                  "radius-const-degree | spanner");
  sub->add_option("--k", o.k, "number of indices, a power of two >= 4");
  sub->add_option("--P", o.P, "stretch length");
  sub->add_option("--eps", o.eps, "approximation slack; derives the smallest sufficient P");
  sub->add_flag("--shaved", o.shaved, "hub-splitting variant of the radius constructions");
  sub->add_option("--alpha", o.alpha, "spanner multiplicative stretch (rational)");
  sub->add_option("--beta", o.beta, "spanner additive stretch (rational)");
  sub->add_option("--x", o.x, "spanner input path length / weight");
  sub->add_flag("--weighted", o.weighted, "weighted spanner instance");
  sub->add_option("--clique-pad", o.clique_pad, "attach a clique of this size");
  sub->add_option("--sa", o.sa, "Alice's string: 0/1 text, 0x hex, or @file");
  sub->add_option("--sb", o.sb, "Bob's string");
  sub->add_option("--seed", o.seed, "seed for random inputs");
  sub->add_option("--density", o.density, "probability of a 1 bit in random inputs");
  sub->add_option("--in", o.in, "load a graph JSON document instead of building");
  sub->add_option("--out", o.out, "output file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower-bound graph constructions, oracle checks and CONGEST reductions"};
  app.require_subcommand(1);
  Options o;
  auto* build = app.add_subcommand("build", "build an instance and write its graph JSON");
  auto* verify = app.add_subcommand("verify", "check every claimed property of a construction");
  auto* simulate = app.add_subcommand("simulate", "run a CONGEST program on an instance");
  auto* reduce = app.add_subcommand("reduce", "two-party simulation and disjointness decision");
  auto* sweep = app.add_subcommand("sweep", "pass rates over a (construction, k, P) grid");
  auto* dot = app.add_subcommand("export-dot", "write an instance as Graphviz DOT");
  for (auto* s : {build, verify, simulate, reduce, dot}) add_instance_flags(s, o);
  verify->add_option("--trials", o.trials, "random input pairs");
  verify->add_option("--exhaustive", o.exhaustive, "every input pair (small k)")->default_str("false");
  verify->add_option("--structural", o.structural, "input-independent distance checks")->default_str("true");
  for (auto* s : {simulate, reduce}) {
    s->add_option("--algo", o.algo, "bfs-layers | flood-max | apsp-diameter | spanner-check | reference");
    s->add_option("--b", o.b, "message size in bits (default 2*ceil(log2 n)+2)");
    s->add_option("--max-rounds", o.max_rounds, "round limit");
  }
  simulate->add_option("--source", o.source, "bfs-layers source id");
  simulate->add_option("--ledger-csv", o.ledger_csv, "write the traffic ledger here");
  reduce->add_option("--c-disj", o.c_disj, "constant of the disjointness bound (rational)");
  sweep->add_option("--constructions", o.sweep_constructions, "constructions to include (default all)");
  sweep->add_option("--k", o.sweep_k, "k values");
  sweep->add_option("--P", o.sweep_P, "P values");
  sweep->add_option("--trials", o.trials, "random input pairs per grid point");
  sweep->add_option("--seed", o.seed, "seed");
  sweep->add_option("--density", o.density, "probability of a 1 bit");
  sweep->add_option("--alpha", o.alpha, "spanner alpha");
  sweep->add_option("--beta", o.beta, "spanner beta");
  sweep->add_option("--csv", o.csv, "CSV output path");
  sweep->add_option("--out", o.out, "report output path");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json errj{{"error", {{"type", "usage"}, {"message", e.what()}}}};
    out << errj.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }
  try {
    if (*build) return cmd_build(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*simulate) return cmd_simulate(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*dot) return cmd_export_dot(o, out);
  } catch (const std::exception& e) {
    std::string type = "error";
    if (dynamic_cast<const PreconditionError*>(&e)) type = "precondition";
    if (dynamic_cast<const DisconnectedGraphError*>(&e)) type = "disconnected";
    if (dynamic_cast<const ProtocolViolation*>(&e)) type = "protocol-violation";
    json errj{{"error", {{"type", type}, {"message", e.what()}}}};
    if (!o.out.empty()) {
      try {
        write_text_file(o.out, errj.dump(2) + "\n");
      } catch (...) {
      }
    }
    out << errj.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace congestlb

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/checks.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generator.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/stci.hpp"

using namespace edgeideal;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kNotUnmixed = 3, kNotTwoDim = 4, kTimeout = 5, kInvariant = 6, kTooLarge = 7 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotUnmixed:
    case ErrorKind::NotCohenMacaulay:
    case ErrorKind::NotAPoset:
    case ErrorKind::NotTransitivelyClosed: return kNotUnmixed;
    case ErrorKind::NotTwoDimensional: return kNotTwoDim;
    case ErrorKind::Timeout: return kTimeout;
    case ErrorKind::InvariantViolation: return kInvariant;
    case ErrorKind::TooLarge: return kTooLarge;
    default: return kParse;
  }
}

struct Config {
  std::string input;
  std::string field_text = "q";
  std::string gb_field_text = "p:32003";
  bool oracle = false;
  bool verify = false;
  double gb_timeout = kDefaultGroebnerBudget;
  int max_oracle_vars = kMaxBettiVariables;
  std::uint64_t seed = SweepOptions{}.seed;
  std::string json_path;
  std::string embedding_path;
  bool quiet = false;
  bool pretty = false;
  std::string suite = "all";
  bool inject_mutation = false;
  int gamma_count = 500;
  int duality_count = 100;
};

std::string read_text(const std::string& source) {
  if (source.empty()) fail(ErrorKind::Parse, "missing input");
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(source);
  if (!in) fail(ErrorKind::Parse, "cannot read '" + source + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

MatchedBipartiteGraph require_matched(const BipartiteGraph& g) {
  auto mg = find_perfect_matching(g);
  if (!mg) fail(ErrorKind::NotUnmixed, "graph has no perfect matching");
  return *mg;
}

std::string pretty_flat(const Json& j) {
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    out << key << std::string(width - key.size() + 2, ' ') << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

void emit(const Config& cfg, const Json& j, const std::string& pretty_text = {}) {
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path);
    if (!out) fail(ErrorKind::Parse, "cannot write '" + cfg.json_path + "'");
    out << j.dump(2) << '\n';
  }
  if (cfg.quiet) return;
  if (cfg.pretty) {
    std::cout << (pretty_text.empty() ? pretty_flat(j) : pretty_text);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int cmd_classify(const Config& cfg) {
  emit(cfg, classify_json(parse_graph(read_text(cfg.input))));
  return kOk;
}

int cmd_invariants(const Config& cfg) {
  const BipartiteGraph g = parse_graph(read_text(cfg.input));
  const InvariantsReport rep = invariants_report(g);
  std::optional<OracleInvariants> oracle;
  std::optional<Field> field;
  if (cfg.oracle) {
    field = parse_field(cfg.field_text);
    oracle = oracle_invariants(edge_ideal(g), *field, cfg.max_oracle_vars);
  }
  emit(cfg, invariants_json(g, rep, oracle, field));
  if (oracle && rep.regularity && (oracle->regularity != *rep.regularity || oracle->depth != *rep.depth)) return kInvariant;
  return kOk;
}

int cmd_primes(const Config& cfg) {
  const MatchedBipartiteGraph mg = require_matched(parse_graph(read_text(cfg.input)));
  emit(cfg, primes_json(mg, associated_primes(mg)));
  return kOk;
}

int cmd_stci(const Config& cfg) {
  const MatchedBipartiteGraph mg = require_matched(parse_graph(read_text(cfg.input)));
  std::optional<PlaneEmbedding> embedding;
  if (!cfg.embedding_path.empty()) embedding = parse_embedding(parse_json(read_text(cfg.embedding_path)), mg);
  const GeneratorSet gs = arank_generators(mg, embedding);
  Json j = generators_json(mg, gs);
  int code = kOk;
  std::string verify_line;
  if (cfg.verify) {
    const auto rep = verify_arank_generators(mg, gs, {parse_field(cfg.gb_field_text), cfg.gb_timeout});
    j["verification"] = verification_json(mg, rep);
    if (rep.timed_out()) {
      code = kTimeout;
    } else if (!rep.verified()) {
      code = kCheckFailed;
    }
    verify_line = std::string("verification: ") + (rep.verified() ? "verified" : rep.timed_out() ? "timeout" : "failed") +
                  " (" + std::to_string(rep.edges.size()) + " memberships over " + to_string(rep.field) + ")\n";
  }
  std::ostringstream text;
  text << "generators: " << gs.total_count() << " (xi = " << gs.xi << ")\n";
  for (std::size_t t = 0; t < gs.g_list.size(); ++t) text << "  g" << t + 1 << " = " << format_terms(mg, gs.g_list[t]) << '\n';
  for (std::size_t k = 0; k < gs.h_list.size(); ++k) text << "  h" << k + 1 << " = " << format_terms(mg, gs.h_list[k]) << '\n';
  text << "gamma:";
  for (int v : gs.linearization.gamma) text << ' ' << v;
  text << "\nrho:  ";
  for (int v : gs.linearization.rho) text << ' ' << v;
  text << '\n' << render_gamma(gs.gamma) << verify_line;
  emit(cfg, j, text.str());
  return code;
}

int cmd_oracle(const Config& cfg) {
  const BipartiteGraph g = parse_graph(read_text(cfg.input));
  const Field field = parse_field(cfg.field_text);
  const auto mg = find_perfect_matching(g);
  // interleaved variables for matched graphs so labels line up with x_i y_i
  const SquareFreeMonomialIdeal ideal = mg ? edge_ideal(*mg) : edge_ideal(g);
  const BettiTable table = betti_table(ideal, field, cfg.max_oracle_vars);
  Json j{{"schema", kSchemaVersion}, {"command", "oracle"}};
  j["ideal"] = to_string(ideal);
  j["betti"] = betti_json(ideal, table);
  j["depth"] = ideal.variable_count() - table.projective_dimension();
  const bool terai = terai_check(ideal, field, cfg.max_oracle_vars);
  j["terai"] = terai;
  bool ok = terai;
  if (mg && classify(*mg) == Classification::CohenMacaulay) {
    const bool shape = dual_shape_check(*mg, field, cfg.max_oracle_vars);
    j["dual_shape"] = shape;
    ok = ok && shape;
  }
  std::ostringstream text;
  text << "ideal " << to_string(ideal) << " over " << to_string(field) << "\n";
  text << "reg " << table.regularity() << "  projdim " << table.projective_dimension() << "  depth "
       << ideal.variable_count() - table.projective_dimension() << "  terai " << (terai ? "ok" : "FAIL") << '\n';
  text << "graded Betti numbers (l, j): value\n";
  for (const auto& [key, value] : table.graded()) text << "  (" << key.first << ", " << key.second << "): " << value << '\n';
  emit(cfg, j, text.str());
  return ok ? kOk : kCheckFailed;
}

DirectedGraph poset_from_json(const Json& spec, const std::string& size_key) {
  const int t = spec.at(size_key).get<int>();
  DirectedGraph d(t);
  if (spec.contains("arcs")) {
    for (const auto& a : spec.at("arcs")) {
      const int i = a.at(0).get<int>() - 1;
      const int j = a.at(1).get<int>() - 1;
      if (i < 0 || j < 0 || i >= t || j >= t || i == j) fail(ErrorKind::Parse, "arc endpoints must be distinct vertices 1.." + std::to_string(t));
      d.add_arc(i, j);
    }
  }
  return transitive_closure(d);
}

int cmd_gen(const Config& cfg) {
  const Json spec = parse_json(read_text(cfg.input));
  Json out;
  try {
    const std::string mode = spec.at("mode").get<std::string>();
    auto graph_json = [](const MatchedBipartiteGraph& mg) { return Json::parse(serialize_graph(mg.to_graph())); };
    if (mode == "expand") {
      const DirectedGraph dhat = poset_from_json(spec, "t");
      out = graph_json(expand_poset(dhat, spec.at("zeta").get<std::vector<int>>()));
    } else if (mode == "sharp") {
      const DirectedGraph dhat = poset_from_json(spec, "t");
      VertexSet b = 0;
      for (int v : spec.value("antichain", std::vector<int>{})) b |= bit(v - 1);
      out = graph_json(expand_poset(dhat, sharp_depth_weights(dhat, b, spec.at("c").get<int>())));
    } else if (mode == "random_poset") {
      const DirectedGraph d = random_poset(spec.at("n").get<int>(), spec.value("density", 0.3), spec.value("seed", cfg.seed));
      out = graph_json(MatchedBipartiteGraph::from_digraph(d));
    } else if (mode == "random_2d") {
      const auto pe = random_2d_poset(spec.at("n").get<int>(), spec.value("seed", cfg.seed));
      out = graph_json(MatchedBipartiteGraph::from_digraph(pe.poset));
      out["embedding"] = embedding_json(pe.embedding);
    } else if (mode == "random_unmixed") {
      out = graph_json(random_unmixed(spec.at("c").get<int>(), spec.value("seed", cfg.seed), spec.value("density", 0.4)));
    } else if (mode == "enumerate") {
      out = Json::array();
      for (const auto& mg : enumerate_unmixed(spec.at("c").get<int>())) out.push_back(graph_json(mg));
    } else {
      fail(ErrorKind::Parse, "unknown mode '" + mode + "'");
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
  if (!cfg.json_path.empty()) {
    std::ofstream file(cfg.json_path);
    file << out.dump(2) << '\n';
  }
  if (!cfg.quiet) std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_check(const Config& cfg) {
  const Field field = parse_field(cfg.field_text);
  SweepOptions sweep;
  sweep.seed = cfg.seed;
  const auto instances = sweep_instances(sweep);
  const GroebnerOptions gb{parse_field(cfg.gb_field_text), cfg.gb_timeout};
  const auto& s = cfg.suite;
  const bool all = s == "all";
  std::vector<CheckResult> results;
  if (all || s == "formulas") results.push_back(check_formulas_vs_oracle(instances, field, cfg.max_oracle_vars));
  if (all || s == "r") results.push_back(check_r_equals_regularity(instances));
  if (all || s == "depth") results.push_back(check_depth_bound(instances));
  if (all || s == "sharp") {
    results.push_back(check_sharp_depth({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}}, field, cfg.max_oracle_vars));
  }
  if (all || s == "primes") results.push_back(check_primes_vs_covers(instances));
  if (all || s == "gamma") results.push_back(check_gamma_properties(cfg.gamma_count, 10, cfg.seed, cfg.inject_mutation));
  if (all || s == "duality") results.push_back(check_duality(cfg.duality_count, 8, cfg.seed, field));
  if (all || s == "shape") results.push_back(check_dual_shape(instances, field, cfg.max_oracle_vars));
  if (all || s == "generators") results.push_back(check_generators(instances, cfg.verify ? 3 : 0, gb));
  if (all || s == "isolated") results.push_back(check_isolated_edges(instances));
  if (results.empty()) fail(ErrorKind::Parse, "unknown suite '" + s + "'");

  Json j{{"schema", kSchemaVersion}, {"command", "check"}, {"seed", cfg.seed}, {"field", to_string(field)}};
  Json list = Json::array();
  bool ok = true;
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed();
    list.push_back({{"name", r.name},
                    {"passed", r.passed()},
                    {"cases", r.cases},
                    {"skipped", r.skipped},
                    {"failures", r.failure_count},
                    {"examples", r.failures}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases << " skipped=" << r.skipped
         << " failures=" << r.failure_count << '\n';
    for (const auto& f : r.failures) text << "     " << f << '\n';
  }
  j["suites"] = std::move(list);
  j["passed"] = ok;
  emit(cfg, j, text.str());
  return ok ? kOk : kCheckFailed;
}

void apply_thread_cap() {
  if (const char* env = std::getenv("EDGEIDEAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Edge ideals of unmixed bipartite graphs: invariants, oracles and radical generators"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cfg.input, "graph JSON file, inline JSON, or - for stdin")->required();
    sub->add_option("--json", cfg.json_path, "also write the JSON report to this path");
    sub->add_flag("--quiet", cfg.quiet, "no output on stdout");
    sub->add_flag("--pretty", cfg.pretty, "human-readable tables instead of JSON");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field_text, "homology field: q or p:<prime>")->capture_default_str();
    sub->add_option("--max-oracle-vars", cfg.max_oracle_vars, "variable cap for Hochster computations")
        ->check(CLI::Range(1, kMaxBettiVariables))
        ->capture_default_str();
  };
  auto add_groebner = [&](CLI::App* sub, const std::string& field_flag) {
    sub->add_flag("--verify", cfg.verify, "verify radical equality with Groebner bases");
    sub->add_option(field_flag, cfg.gb_field_text, "Groebner field: q or p:<prime>")->capture_default_str();
    sub->add_option("--gb-timeout", cfg.gb_timeout, "seconds per Groebner computation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "perfect matching, d_G and its acyclic reduction");
  add_common(classify_cmd, true);

  auto* inv = app.add_subcommand("invariants", "regularity, depth, projdim and r(I)");
  add_common(inv, true);
  add_field(inv);
  inv->add_flag("--oracle", cfg.oracle, "add Hochster oracle columns");

  auto* primes = app.add_subcommand("primes", "associated primes from antichains");
  add_common(primes, true);

  auto* stci = app.add_subcommand("stci", "projdim many generators of I up to radical");
  add_common(stci, true);
  add_groebner(stci, "--field");
  stci->add_option("--embedding", cfg.embedding_path, "plane embedding of the breve poset (JSON file)");

  auto* oracle = app.add_subcommand("oracle", "Hochster Betti table, Terai and dual shape checks");
  add_common(oracle, true);
  add_field(oracle);

  auto* gen = app.add_subcommand("gen", "generate instances from a JSON spec");
  gen->add_option("input", cfg.input, "spec JSON (file or inline)")->required();
  gen->add_option("--json", cfg.json_path, "also write the output to this path");
  gen->add_flag("--quiet", cfg.quiet, "no output on stdout");
  gen->add_option("--seed", cfg.seed, "default seed when the spec has none");

  auto* check = app.add_subcommand("check", "cross-oracle property suites");
  add_common(check, false);
  add_field(check);
  add_groebner(check, "--gb-field");
  check->add_option("--suite", cfg.suite, "all|formulas|r|depth|sharp|primes|gamma|duality|shape|generators|isolated")
      ->capture_default_str();
  check->add_option("--seed", cfg.seed, "seed for random instances")->capture_default_str();
  check->add_option("--gamma-count", cfg.gamma_count, "random 2-dimensional posets")->capture_default_str();
  check->add_option("--duality-count", cfg.duality_count, "random square-free ideals")->capture_default_str();
  check->add_flag("--inject-mutation", cfg.inject_mutation, "drop one Gamma edge per poset (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0, usage errors share the parse exit code
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (inv->parsed()) return cmd_invariants(cfg);
    if (primes->parsed()) return cmd_primes(cfg);
    if (stci->parsed()) return cmd_stci(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (gen->parsed()) return cmd_gen(cfg);
    if (check->parsed()) return cmd_check(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kOk;
}

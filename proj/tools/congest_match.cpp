// congest_match: generate graphs, run the distributed matching pipeline,
// verify it against the exhaustive oracle, benchmark and export traces.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congest/error.hpp"
#include "congest/framework.hpp"
#include "congest/io.hpp"
#include "congest/oracle.hpp"

namespace {

using namespace congest;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct GraphSpec {
  std::string kind = "path";
  int n = 4;
  double p = 0.3;
  int k = 1;
  std::uint64_t seed = 1;
};

Graph generate(const GraphSpec& s) {
  if (s.kind == "path") return path_graph(s.n);
  if (s.kind == "cycle") return cycle_graph(s.n);
  if (s.kind == "random") return random_graph(s.n, s.p, s.seed);
  if (s.kind == "blossom-chain") return blossom_chain(s.k);
  throw PreconditionError("unknown graph kind '" + s.kind + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
}

// run/bench/trace are meant for large inputs, so the oracle cap is off
// unless the environment sets one.
OracleLimits run_limits() { return OracleLimits::from_env(OracleLimits::unlimited().max_vertices); }

struct Input {
  std::string graph;
  std::string matching;
};

std::optional<Matching> initial_matching(const Graph& g, const Input& in) {
  if (in.matching.empty()) return std::nullopt;
  return parse_matching(g, std::filesystem::path(in.matching));
}

int cmd_generate(const GraphSpec& spec, const std::string& out, const std::string& matching_out) {
  const Graph g = generate(spec);
  if (out.empty() || out == "-") {
    emit_graph(g, std::cout);
  } else {
    emit_graph(g, std::filesystem::path(out));
  }
  if (!matching_out.empty()) {
    if (spec.kind != "blossom-chain") {
      throw PreconditionError("--matching-out is only defined for blossom-chain");
    }
    emit_matching(blossom_chain_matching(spec.k), std::filesystem::path(matching_out));
  }
  return kExitOk;
}

int cmd_run(const Input& in, const std::string& trace_path, const std::string& json_path,
            const std::string& matching_out) {
  const Graph g = parse_graph(std::filesystem::path(in.graph));
  RunOptions opt;
  opt.limits = run_limits();
  opt.initial = initial_matching(g, in);
  opt.collect_trace = !trace_path.empty();
  const RunResult r = run_to_maximum(g, opt);
  const std::string json = r.stats.to_json();
  if (json_path.empty()) {
    std::cout << json;
  } else {
    write_text(json_path, json);
  }
  if (!trace_path.empty()) write_text(trace_path, r.trace.to_csv());
  if (!matching_out.empty()) emit_matching(r.matching, std::filesystem::path(matching_out));
  return kExitOk;
}

int cmd_verify(const Input& in, const std::string& assembly_path) {
  const Graph g = parse_graph(std::filesystem::path(in.graph));
  RunOptions opt;
  opt.limits = OracleLimits::from_env();
  opt.initial = initial_matching(g, in);
  std::ostringstream assemblies;
  opt.observer = [&](const IterationDetail& d) {
    assemblies << "c iteration " << d.stats->i << " f " << d.region->f << " g " << d.region->g
               << '\n'
               << d.extpath->assembly.to_text();
  };
  const int mu = brute_max_matching(g, opt.limits).size;
  const RunResult r = run_to_maximum(g, opt);
  if (!assembly_path.empty()) write_text(assembly_path, assemblies.str());
  const bool valid = validate_matching(g, r.matching).empty();
  const bool ok = valid && r.matching.size() == mu;
  std::cout << (ok ? "ok" : "MISMATCH") << " n=" << g.num_vertices() << " m=" << g.num_edges()
            << " mu=" << mu << " found=" << r.matching.size()
            << " rounds=" << r.stats.rounds_total << '\n';
  return ok ? kExitOk : kExitMismatch;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError("bad size '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) throw PreconditionError("--sizes is empty");
  return sizes;
}

int cmd_bench(GraphSpec spec, const std::string& sizes_text, const std::string& csv_path) {
  std::ostringstream csv;
  csv << "kind,n,m,mu,mu_hat,rounds_total,iterations_found\n";
  for (int size : parse_sizes(sizes_text)) {
    // For blossom chains the size is the number of gadgets.
    spec.n = size;
    spec.k = size;
    const Graph g = generate(spec);
    RunOptions opt;
    opt.limits = run_limits();
    if (spec.kind == "blossom-chain") opt.initial = blossom_chain_matching(spec.k);
    const RunResult r = run_to_maximum(g, opt);
    int found = 0;
    for (const auto& it : r.stats.iterations) found += it.found ? 1 : 0;
    csv << spec.kind << ',' << r.stats.n << ',' << r.stats.m << ',' << r.stats.mu << ','
        << r.stats.mu_hat << ',' << r.stats.rounds_total << ',' << found << '\n';
  }
  if (csv_path.empty() || csv_path == "-") {
    std::cout << csv.str();
  } else {
    write_text(csv_path, csv.str());
  }
  return kExitOk;
}

int cmd_trace(const Input& in, const std::string& out_path, const std::string& knowledge_path) {
  const Graph g = parse_graph(std::filesystem::path(in.graph));
  RunOptions opt;
  opt.limits = run_limits();
  opt.initial = initial_matching(g, in);
  opt.collect_trace = true;
  std::string knowledge = "[";
  opt.observer = [&](const IterationDetail& d) {
    if (knowledge.size() > 1) knowledge += ",";
    knowledge += knowledge_json(d.precompute->knowledge);
  };
  const RunResult r = run_to_maximum(g, opt);
  if (out_path.empty() || out_path == "-") {
    std::cout << r.trace.to_csv();
  } else {
    write_text(out_path, r.trace.to_csv());
  }
  if (!knowledge_path.empty()) write_text(knowledge_path, knowledge + "]\n");
  return kExitOk;
}

void add_spec_options(CLI::App* cmd, GraphSpec& spec) {
  cmd->add_option("--kind", spec.kind, "path, cycle, random or blossom-chain")
      ->check(CLI::IsMember({"path", "cycle", "random", "blossom-chain"}));
  cmd->add_option("--p", spec.p, "edge probability for random graphs")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", spec.seed, "seed for random graphs");
}

void add_input_options(CLI::App* cmd, Input& in) {
  cmd->add_option("-i,--input", in.graph, "edge-list graph file")->required();
  cmd->add_option("--matching", in.matching, "initial matching file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed maximum matching by shortest augmenting paths"};
  app.require_subcommand(1);

  GraphSpec gen_spec;
  std::string gen_out;
  std::string gen_matching;
  auto* gen = app.add_subcommand("generate", "write a generated graph");
  add_spec_options(gen, gen_spec);
  gen->add_option("-n,--n", gen_spec.n, "vertex count (path, cycle, random)");
  gen->add_option("-k,--k", gen_spec.k, "gadget count (blossom-chain)");
  gen->add_option("-o,--output", gen_out, "output file, '-' for stdout");
  gen->add_option("--matching-out", gen_matching, "also write the designated blossom-chain matching");

  Input run_in;
  std::string run_trace;
  std::string run_json;
  std::string run_matching;
  auto* run = app.add_subcommand("run", "compute a maximum matching and report statistics");
  add_input_options(run, run_in);
  run->add_option("--trace", run_trace, "write the message trace as CSV");
  run->add_option("--json", run_json, "write run statistics as JSON (default stdout)");
  run->add_option("--matching-out", run_matching, "write the final matching");

  Input verify_in;
  std::string verify_assembly;
  auto* verify = app.add_subcommand("verify", "compare the result with the exhaustive oracle");
  add_input_options(verify, verify_in);
  verify->add_option("--assembly", verify_assembly, "write each iteration's path records");

  GraphSpec bench_spec;
  std::string bench_sizes;
  std::string bench_csv;
  auto* bench = app.add_subcommand("bench", "run a size sweep and record total rounds");
  add_spec_options(bench, bench_spec);
  bench->add_option("--sizes", bench_sizes, "comma-separated sizes")->required();
  bench->add_option("--csv", bench_csv, "output CSV, '-' for stdout");

  Input trace_in;
  std::string trace_out;
  std::string trace_knowledge;
  auto* trace = app.add_subcommand("trace", "export the full message trace");
  add_input_options(trace, trace_in);
  trace->add_option("-o,--output", trace_out, "output CSV, '-' for stdout");
  trace->add_option("--knowledge", trace_knowledge, "write per-iteration vertex knowledge as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_spec, gen_out, gen_matching);
    if (*run) return cmd_run(run_in, run_trace, run_json, run_matching);
    if (*verify) return cmd_verify(verify_in, verify_assembly);
    if (*bench) return cmd_bench(bench_spec, bench_sizes, bench_csv);
    if (*trace) return cmd_trace(trace_in, trace_out, trace_knowledge);
  } catch (const std::exception& e) {
    std::cerr << "congest_match: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "equicolor/edge_list.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/json_io.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"

namespace equicolor::cli {

namespace fs = std::filesystem;

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EQUICOLOR_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("EQUICOLOR_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

struct ColorFlags {
  std::string in;
  std::string out;
  std::string trace_out;
  std::string stats_out;
  int r = 0;
  std::string mode = "one-planar";
  std::optional<std::uint64_t> seed;
  bool strict = false;
  bool random_neighbor = false;
  SearchBudget budget;
  int depth_cap = 32;

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.r = r;
    cfg.mode = parse_mode(mode);
    cfg.seed = resolve_seed(seed);
    cfg.strict_validation = strict;
    cfg.random_neighbor = random_neighbor;
    cfg.budget = budget;
    cfg.hs_depth_cap = depth_cap;
    return cfg;
  }
};

void add_solver_flags(CLI::App* cmd, ColorFlags& f) {
  cmd->add_option("--r", f.r, "number of color classes")->required();
  cmd->add_option("--mode", f.mode, "one-planar or hs")
      ->check(CLI::IsMember({"one-planar", "hs"}));
  cmd->add_option("--seed", f.seed, "seed (overrides EQUICOLOR_SEED)");
  cmd->add_flag("--strict", f.strict, "check the edge bound and degeneracy up front");
  cmd->add_flag("--random-neighbor", f.random_neighbor,
                "choose the re-added edge's partner from the seed");
  cmd->add_option("--max-attempts", f.budget.max_pattern_attempts, "pattern attempts per family");
  cmd->add_option("--max-depth", f.budget.max_fallback_depth, "fallback search depth");
  cmd->add_option("--max-nodes", f.budget.max_fallback_nodes, "fallback search node budget");
  cmd->add_option("--depth-cap", f.depth_cap, "hs-mode depth escalation cap");
}

int do_color(const ColorFlags& f, std::ostream& out) {
  SolverConfig cfg = f.config();
  Graph g = read_edge_list_file(f.in);
  SolveResult res = equitable_color(g, cfg);
  write_text(f.out, coloring_to_json(res.coloring).dump(2) + "\n", out);
  if (!f.trace_out.empty()) write_text(f.trace_out, trace_to_json(res.trace).dump(2) + "\n", out);
  if (!f.stats_out.empty()) {
    Json st = stats_to_json(res.stats);
    st = Json{{"schema", kSchemaVersion}, {"stats", st}};
    write_text(f.stats_out, st.dump(2) + "\n", out);
  }
  return kOk;
}

int do_verify(const std::string& in, const std::string& coloring_path, std::ostream& out) {
  Graph g = read_edge_list_file(in);
  Coloring c = coloring_from_json(read_json_file(coloring_path));
  if (c.num_vertices() != g.num_vertices())
    throw InvalidInput("coloring covers " + std::to_string(c.num_vertices()) +
                       " vertices, graph has " + std::to_string(g.num_vertices()));
  if (!c.is_total()) throw InvalidInput("coloring leaves a vertex uncolored");
  const bool proper = verify_proper(g, c);
  const bool equitable = verify_equitable(c);
  Json j{{"schema", kSchemaVersion}, {"proper", proper}, {"equitable", equitable}};
  out << j.dump() << "\n";
  return proper && equitable ? kOk : kInvalidInput;
}

int do_oracle(const std::string& in, int k, bool require, const std::string& path,
              std::ostream& out) {
  Graph g = read_edge_list_file(in);
  auto found = brute_force_equitable(g, k);
  Json j{{"schema", kSchemaVersion}, {"k", k}, {"feasible", found.has_value()}};
  if (found) j["coloring"] = coloring_to_json(*found);
  write_text(path, j.dump(2) + "\n", out);
  return !found && require ? kInfeasible : kOk;
}

int do_gen(const std::string& family, const std::vector<int>& params,
           const std::optional<std::uint64_t>& seed, const std::string& path, std::ostream& out) {
  GenSpec spec{family, params, resolve_seed(seed)};
  write_text(path, format_edge_list(generate(spec)), out);
  return kOk;
}

int do_trace_verify(const std::string& in, const std::string& trace_path,
                    const std::string& coloring_path, std::ostream& out) {
  Graph g = read_edge_list_file(in);
  RunTrace trace = trace_from_json(read_json_file(trace_path));
  Coloring c = replay_trace(g, trace);
  bool matches = true;
  if (!coloring_path.empty())
    matches = coloring_from_json(read_json_file(coloring_path)) == c;
  Json j{{"schema", kSchemaVersion}, {"replayed", true}, {"events", trace.events.size()}};
  if (!coloring_path.empty()) j["coloring_matches"] = matches;
  out << j.dump() << "\n";
  return matches ? kOk : kInvalidInput;
}

struct BenchRow {
  std::string file;
  int n = 0;
  int m = 0;
  std::string status = "ok";
  std::string message;
  double seconds = 0;
  SolverStats stats;
};

BenchRow bench_one(const fs::path& file, const SolverConfig& cfg) {
  BenchRow row;
  row.file = file.filename().string();
  auto start = std::chrono::steady_clock::now();
  try {
    Graph g = read_edge_list_file(file.string());
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.stats = equitable_color(g, cfg).stats;
  } catch (const InvalidInput& e) {
    row.status = "InvalidInput";
    row.message = e.what();
  } catch (const ImprovementNotFound& e) {
    row.status = "ImprovementNotFound";
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = "error";
    row.message = e.what();
  }
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

int do_bench(const std::string& corpus, const ColorFlags& f, int jobs, const std::string& json_out,
             std::ostream& out) {
  SolverConfig cfg = f.config();
  cfg.validate();
  if (!fs::is_directory(corpus)) throw Error("not a directory: " + corpus);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = bench_one(files[i], cfg);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json report{{"schema", kSchemaVersion}, {"rows", Json::array()}};
  std::ostringstream table;
  table << std::left << std::setw(28) << "file" << std::right << std::setw(7) << "n"
        << std::setw(8) << "m" << std::setw(10) << "seconds" << std::setw(7) << "fixes"
        << std::setw(8) << "rounds" << std::setw(9) << "pattern" << std::setw(9) << "fallback"
        << "  status\n";
  for (const BenchRow& row : rows) {
    Json r{{"file", row.file},
           {"n", row.n},
           {"m", row.m},
           {"status", row.status},
           {"seconds", row.seconds},
           {"fix_phases", row.stats.fix_phases},
           {"improvement_rounds", row.stats.improvement_rounds},
           {"pattern_rounds", row.stats.pattern_rounds},
           {"fallback_rounds", row.stats.fallback_rounds}};
    if (!row.message.empty()) r["message"] = row.message;
    report["rows"].push_back(std::move(r));
    table << std::left << std::setw(28) << row.file << std::right << std::setw(7) << row.n
          << std::setw(8) << row.m << std::setw(10) << std::fixed << std::setprecision(3)
          << row.seconds << std::setw(7) << row.stats.fix_phases << std::setw(8)
          << row.stats.improvement_rounds << std::setw(9) << row.stats.pattern_rounds
          << std::setw(9) << row.stats.fallback_rounds << "  " << row.status << "\n";
  }
  out << table.str();
  if (!json_out.empty()) write_text(json_out, report.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable coloring of sparse graphs", "equicolor"};
  app.require_subcommand(1);

  ColorFlags color;
  auto* color_cmd = app.add_subcommand("color", "compute an equitable coloring");
  color_cmd->add_option("--in", color.in, "edge-list file")->required();
  color_cmd->add_option("--out", color.out, "coloring JSON (default stdout)");
  color_cmd->add_option("--trace", color.trace_out, "write the run trace JSON here");
  color_cmd->add_option("--stats", color.stats_out, "write solver statistics JSON here");
  add_solver_flags(color_cmd, color);

  std::string verify_in, verify_coloring;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
  verify_cmd->add_option("--in", verify_in, "edge-list file")->required();
  verify_cmd->add_option("--coloring", verify_coloring, "coloring JSON")->required();

  std::string oracle_in, oracle_out;
  int oracle_k = 0;
  bool require_feasible = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact equitable colorability for small graphs");
  oracle_cmd->add_option("--in", oracle_in, "edge-list file")->required();
  oracle_cmd->add_option("--k", oracle_k, "number of classes")->required();
  oracle_cmd->add_option("--out", oracle_out, "result JSON (default stdout)");
  oracle_cmd->add_flag("--require-feasible", require_feasible, "exit 4 when infeasible");

  std::string family, gen_out;
  std::vector<int> params;
  std::optional<std::uint64_t> gen_seed;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->add_option("family", family,
                      "q3_diag | rhombi_diag | grid_diag | complete | complete_bipartite | "
                      "random_subgraph")
      ->required();
  gen_cmd->add_option("params", params, "integer parameters of the family");
  gen_cmd->add_option("--seed", gen_seed, "seed (overrides EQUICOLOR_SEED)");
  gen_cmd->add_option("--out", gen_out, "edge-list file (default stdout)");

  std::string trace_in, trace_path, trace_coloring;
  auto* trace_cmd = app.add_subcommand("trace", "run-trace utilities");
  trace_cmd->require_subcommand(1);
  auto* trace_verify = trace_cmd->add_subcommand("verify", "replay a trace against its graph");
  trace_verify->add_option("--in", trace_in, "edge-list file")->required();
  trace_verify->add_option("--trace", trace_path, "trace JSON")->required();
  trace_verify->add_option("--coloring", trace_coloring, "expected final coloring JSON");

  ColorFlags bench;
  std::string corpus, bench_out;
  int jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "solve every edge list in a directory");
  bench_cmd->add_option("--corpus", corpus, "directory of edge-list files")->required();
  bench_cmd->add_option("--out", bench_out, "report JSON");
  bench_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_solver_flags(bench_cmd, bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*color_cmd) return do_color(color, out);
    if (*verify_cmd) return do_verify(verify_in, verify_coloring, out);
    if (*oracle_cmd) return do_oracle(oracle_in, oracle_k, require_feasible, oracle_out, out);
    if (*gen_cmd) return do_gen(family, params, gen_seed, gen_out, out);
    if (*trace_verify) return do_trace_verify(trace_in, trace_path, trace_coloring, out);
    if (*bench_cmd) return do_bench(corpus, bench, jobs, bench_out, out);
  } catch (const ImprovementNotFound& e) {
    err << "error: " << e.what() << "\n";
    if (!e.dump().empty()) err << e.dump() << "\n";
    return kNoImprovement;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace equicolor::cli

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pmclp/bench.hpp"
#include "pmclp/bnb.hpp"
#include "pmclp/bnb1d.hpp"
#include "pmclp/greedy.hpp"
#include "pmclp/instgen.hpp"
#include "pmclp/io.hpp"
#include "pmclp/oracle.hpp"
#include "pmclp/render.hpp"

using namespace pmclp;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kTimeout = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

struct GenerateArgs {
  GenConfig gen;
  bool one_d = false;
  std::string out;
};

struct SolveArgs {
  std::string instance;
  std::string algo = "exact";
  std::string scv_mode = "outer";
  SolverConfig solver;
  std::string out;
};

struct BenchArgs {
  BenchConfig bench;
  bool scv_compare = false;
  std::string csv;
};

struct RenderArgs {
  std::string instance;
  std::string solution;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  GenConfig g = a.gen;
  g.dimension = a.one_d ? Dimension::kOneD : Dimension::kTwoD;
  emit(serialize_instance(generate(g)), a.out);
  return kOk;
}

int run_solve(const SolveArgs& a) {
  const Instance inst = parse_instance(read_file(a.instance));
  SolverConfig cfg = a.solver;
  cfg.scv_mode = a.scv_mode == "full" ? ScvMode::kFull : ScvMode::kOuter;
  SolveResult result;
  if (a.algo == "greedy") {
    const GreedyTrace trace = greedy(inst);
    result.solution = trace.solution;
    std::fprintf(stderr, "greedy iteration total %.9g\n", trace.total);
  } else if (a.algo == "oracle") {
    const OracleResult r = inst.dimension == Dimension::kOneD ? brute_force_1d(inst)
                                                              : brute_force_2d(inst);
    result.solution = {r.placements, r.reward};
    result.optimal = true;
    result.stats.nodes_explored = r.evaluations;
  } else {
    result = inst.dimension == Dimension::kOneD ? solve_1d(inst, cfg) : solve(inst, cfg);
  }
  emit(serialize_solution(result), a.out);
  std::fprintf(stderr, "reward %.9g (%s), %llu nodes, %.3f s\n", result.solution.reward,
               a.algo == "greedy" ? "greedy" : (result.optimal ? "optimal" : "time limit reached"),
               static_cast<unsigned long long>(result.stats.nodes_explored),
               result.stats.wall_time_s);
  if (a.algo == "exact" && !result.optimal) return kTimeout;
  return kOk;
}

int run_bench_cmd(const BenchArgs& a) {
  if (a.scv_compare) {
    const auto runs = run_scv_compare(a.bench);
    const std::string csv = scv_compare_csv(runs);
    if (!a.csv.empty()) write_file(a.csv, csv);
    std::cout << csv;
    int worse = 0;
    for (const auto& r : runs) worse += r.nodes_outer > r.nodes_full;
    std::cout << worse << " of " << runs.size()
              << " instances explored more nodes with outer SCVs only\n";
    return kOk;
  }
  const BenchReport report = run_bench(a.bench);
  if (!a.csv.empty()) write_file(a.csv, report.csv());
  std::cout << report.table();
  for (const BenchRun& r : report.runs)
    if (!r.error.empty())
      std::cerr << "p=" << r.p << " m=" << r.m << " n=" << r.n << " seed=" << r.seed
                << ": " << r.error << "\n";
  return kOk;
}

int run_render(const RenderArgs& a) {
  const Instance inst = parse_instance(read_file(a.instance));
  std::optional<Solution> sol;
  if (!a.solution.empty()) sol = parse_solution(read_file(a.solution)).solution;
  emit(render_svg(inst, sol ? &*sol : nullptr), a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-coverage location with adjustable service levels"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a random instance as JSON");
  g->add_option("--seed", gen.gen.seed, "Random seed");
  g->add_option("--n", gen.gen.n, "Number of demand zones")->check(CLI::NonNegativeNumber);
  g->add_option("--p", gen.gen.p, "Number of service zones")->check(CLI::PositiveNumber);
  g->add_option("--m", gen.gen.m, "Scales {1..m} (2D only)")->check(CLI::PositiveNumber);
  g->add_flag("--one-d", gen.one_d, "1D instance, zone j fixed at scale j");
  g->add_option("--region", gen.gen.region, "Side of the square region");
  g->add_option("--radius", gen.gen.r, "Concentration radius");
  g->add_option("--base-w", gen.gen.base_dims.first, "Base service zone width");
  g->add_option("--base-l", gen.gen.base_dims.second, "Base service zone height");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs solve_args;
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("instance", solve_args.instance, "Instance JSON")->required();
  s->add_option("--algo", solve_args.algo)->check(CLI::IsMember({"greedy", "exact", "oracle"}));
  s->add_option("--time-limit", solve_args.solver.time_limit_s, "Seconds")
      ->check(CLI::PositiveNumber);
  s->add_option("--beta", solve_args.solver.beta, "Partition gap ratio")->check(CLI::Range(0.0, 1.0));
  s->add_option("--epsilon", solve_args.solver.epsilon, "Pruning tolerance")
      ->check(CLI::NonNegativeNumber);
  s->add_option("--scv-mode", solve_args.scv_mode)->check(CLI::IsMember({"outer", "full"}));
  s->add_option("--out", solve_args.out, "Solution file (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Greedy versus exact over a sweep of random instances");
  b->add_option("--p", bench.bench.ps, "Values of p")->delimiter(',');
  b->add_option("--m", bench.bench.ms, "Values of m")->delimiter(',');
  b->add_option("--n", bench.bench.ns, "Values of n")->delimiter(',');
  b->add_option("--seeds", bench.bench.seeds, "Instances per group")->check(CLI::PositiveNumber);
  b->add_option("--base-seed", bench.bench.base_seed);
  b->add_flag("--one-d", bench.bench.one_d);
  b->add_option("--time-limit", bench.bench.solver.time_limit_s)->check(CLI::PositiveNumber);
  b->add_option("--jobs", bench.bench.jobs)->check(CLI::PositiveNumber);
  b->add_option("--region", bench.bench.gen.region);
  b->add_option("--radius", bench.bench.gen.r);
  b->add_flag("--scv-compare", bench.scv_compare, "Compare node counts per SCV mode");
  b->add_option("--csv", bench.csv, "CSV output file");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw an instance and optional solution as SVG");
  r->add_option("instance", render.instance)->required();
  r->add_option("--solution", render.solution);
  r->add_option("--out", render.out, "SVG file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return run_generate(gen);
    if (*s) return run_solve(solve_args);
    if (*b) return run_bench_cmd(bench);
    if (*r) return run_render(render);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

#include "pmclp/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "pmclp/bnb1d.hpp"
#include "pmclp/greedy.hpp"

namespace pmclp {
namespace {

struct Job {
  int p, m, n;
  std::uint64_t seed;
};

std::vector<Job> jobs_of(const BenchConfig& c) {
  std::vector<Job> out;
  const std::vector<int> ms = c.one_d ? std::vector<int>{1} : c.ms;
  for (int p : c.ps)
    for (int m : ms)
      for (int n : c.ns)
        for (int s = 0; s < c.seeds; ++s)
          out.push_back({p, m, n, c.base_seed + static_cast<std::uint64_t>(s)});
  return out;
}

Instance instance_for(const BenchConfig& c, const Job& job) {
  GenConfig g = c.gen;
  g.seed = job.seed;
  g.n = job.n;
  g.p = job.p;
  g.m = job.m;
  g.dimension = c.one_d ? Dimension::kOneD : Dimension::kTwoD;
  return generate(g);
}

SolveResult exact_solve(const Instance& inst, const SolverConfig& cfg) {
  return inst.dimension == Dimension::kOneD ? solve_1d(inst, cfg) : solve(inst, cfg);
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) f(i);
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Group cells in column order, with timeouts and failures marked.
std::vector<std::string> cells(const BenchGroup& g, bool one_d, double limit) {
  std::vector<std::string> row{std::to_string(g.p)};
  if (!one_d) row.push_back(std::to_string(g.m));
  row.push_back(std::to_string(g.n));
  row.push_back(num(g.nodes, 1));
  if (g.failures > 0) {
    for (int i = 0; i < 5; ++i) row.push_back("error");
    return row;
  }
  if (!g.all_optimal) {
    row.push_back(num(limit, 0) + "+");
    row.push_back("-");
    row.push_back("-");
    row.push_back(num(g.t_h));
    row.push_back("-");
    return row;
  }
  row.push_back(num(g.t));
  row.push_back(num(g.t1));
  row.push_back(num(g.t1_over_t));
  row.push_back(num(g.t_h));
  row.push_back(num(g.alpha));
  return row;
}

}  // namespace

std::vector<std::string> BenchReport::columns(bool one_d) {
  if (one_d) return {"p", "n", "nodes", "T", "T1", "T1/T", "T_H", "alpha"};
  return {"p", "m", "n", "nodes", "T", "T1", "T1/T", "T_H", "alpha"};
}

BenchReport run_bench(const BenchConfig& config) {
  const std::vector<Job> jobs = jobs_of(config);
  BenchReport report;
  report.one_d = config.one_d;
  report.time_limit_s = config.solver.time_limit_s;
  report.runs.resize(jobs.size());

  parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
    const Job& job = jobs[i];
    BenchRun& run = report.runs[i];
    run.p = job.p;
    run.m = job.m;
    run.n = job.n;
    run.seed = job.seed;
    try {
      run.instance = instance_for(config, job);
      const auto start = std::chrono::steady_clock::now();
      const GreedyTrace g = greedy(run.instance);
      run.t_h = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      run.greedy_reward = g.solution.reward;
      run.exact = exact_solve(run.instance, config.solver);
      run.exact_reward = run.exact.solution.reward;
      run.optimal = run.exact.optimal;
      run.nodes = run.exact.stats.nodes_explored;
      run.t = run.exact.stats.wall_time_s;
      run.t1 = run.exact.stats.optimal_found_time_s;
    } catch (const std::exception& e) {
      run.error = e.what();
    }
  });

  for (std::size_t i = 0; i < report.runs.size();) {
    BenchGroup g;
    const BenchRun& first = report.runs[i];
    g.p = first.p;
    g.m = first.m;
    g.n = first.n;
    g.min_alpha = 1.0;
    std::size_t j = i;
    for (; j < report.runs.size() && report.runs[j].p == g.p &&
           report.runs[j].m == g.m && report.runs[j].n == g.n;
         ++j) {
      const BenchRun& r = report.runs[j];
      ++g.count;
      if (!r.error.empty()) {
        ++g.failures;
        continue;
      }
      g.all_optimal = g.all_optimal && r.optimal;
      g.nodes += static_cast<double>(r.nodes);
      g.t += r.t;
      g.t1 += r.t1;
      g.t1_over_t += r.t > 0.0 ? r.t1 / r.t : 0.0;
      g.t_h += r.t_h;
      const double a = r.exact_reward > 0.0 ? r.greedy_reward / r.exact_reward : 1.0;
      g.alpha += a;
      g.min_alpha = std::min(g.min_alpha, a);
    }
    const int ok = g.count - g.failures;
    if (ok > 0) {
      g.nodes /= ok;
      g.t /= ok;
      g.t1 /= ok;
      g.t1_over_t /= ok;
      g.t_h /= ok;
      g.alpha /= ok;
    }
    report.groups.push_back(g);
    i = j;
  }
  return report;
}

std::string BenchReport::csv() const {
  std::ostringstream out;
  const auto cols = columns(one_d);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const BenchGroup& g : groups) {
    const auto row = cells(g, one_d, time_limit_s);
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

std::string BenchReport::table() const {
  const auto cols = columns(one_d);
  std::vector<std::vector<std::string>> rows{cols};
  for (const BenchGroup& g : groups) rows.push_back(cells(g, one_d, time_limit_s));
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      out << (i ? "  " : "");
      out << std::string(width[i] - rows[k][i].size(), ' ') << rows[k][i];
    }
    out << "\n";
    if (k == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w + 2;
      out << std::string(total - 2, '-') << "\n";
    }
  }
  return out.str();
}

std::vector<ScvCompareRun> run_scv_compare(const BenchConfig& config) {
  const std::vector<Job> jobs = jobs_of(config);
  std::vector<ScvCompareRun> out(jobs.size());
  parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
    const Job& job = jobs[i];
    const Instance inst = instance_for(config, job);
    SolverConfig outer = config.solver;
    outer.scv_mode = ScvMode::kOuter;
    SolverConfig full = config.solver;
    full.scv_mode = ScvMode::kFull;
    const SolveResult a = exact_solve(inst, outer);
    const SolveResult b = exact_solve(inst, full);
    out[i] = {job.p, job.m, job.n, job.seed,
              a.stats.nodes_explored, b.stats.nodes_explored,
              a.solution.reward, b.solution.reward, a.optimal && b.optimal};
  });
  return out;
}

std::string scv_compare_csv(const std::vector<ScvCompareRun>& runs) {
  std::ostringstream out;
  out << "p,m,n,seed,nodes_outer,nodes_full,reward_outer,reward_full,optimal\n";
  for (const ScvCompareRun& r : runs) {
    out << r.p << "," << r.m << "," << r.n << "," << r.seed << ","
        << r.nodes_outer << "," << r.nodes_full << "," << num(r.reward_outer, 6)
        << "," << num(r.reward_full, 6) << "," << (r.optimal ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace pmclp

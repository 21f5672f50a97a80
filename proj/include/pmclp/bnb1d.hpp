#pragma once

#include <vector>

#include "pmclp/bnb.hpp"

namespace pmclp::bnb1d {

struct Node {
  std::vector<Candidates> xs;  // kCrossScale marks a zone not yet reached
  int bs = -1;                 // -1 at the root
  int bsfl = -1;               // first-level branching zone
};

// Per-zone reward rows. Every zone has its own fixed scale.
class Context {
 public:
  explicit Context(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const Coverage& coverage() const { return cov_; }
  int p() const { return instance_->p; }
  double scale(int j) const { return scales_[j]; }
  const RewardMatrix& row(int j) const { return rows_[j]; }
  std::span<const double> grid(int j) const { return rows_[j].xs().values; }
  std::span<const double> priorities(int j) const { return priority_[j]; }
  double coordinate(const Candidates& c, int j) const;

 private:
  const Instance* instance_;
  Coverage cov_;
  std::vector<double> scales_;
  std::vector<RewardMatrix> rows_;
  std::vector<std::vector<double>> priority_;
};

Node root(const Context& ctx);
bool is_leaf(const Node& node);
std::vector<Placement> leaf_placements(const Node& node, const Context& ctx);
std::vector<Node> branch(const Node& node, const Context& ctx,
                         const SolverConfig& config);
double upper_bound(const Node& node, const Context& ctx);

}  // namespace pmclp::bnb1d

namespace pmclp {

// Exact solver for 1D instances with one fixed scale per service zone.
SolveResult solve_1d(const Instance& instance, const SolverConfig& config = {});

}  // namespace pmclp

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sociogrow/graph.hpp"

namespace sociogrow {

// Row-major N x N matrix; row i is node i's probability distribution over
// "communities" (which node it knows about). Rows sum to 1 after every full
// dynamics step.
class KnowledgeMatrix {
 public:
  KnowledgeMatrix() = default;
  explicit KnowledgeMatrix(int n) : n_(n), data_(std::size_t(n) * n, 0.0) {}

  static KnowledgeMatrix identity(int n);

  int dim() const { return n_; }

  double at(NodeId i, NodeId j) const {
    return data_[std::size_t(i) * n_ + j];
  }
  double& at(NodeId i, NodeId j) { return data_[std::size_t(i) * n_ + j]; }

  std::span<const double> row(NodeId i) const {
    return {data_.data() + std::size_t(i) * n_, std::size_t(n_)};
  }
  std::span<double> row(NodeId i) {
    return {data_.data() + std::size_t(i) * n_, std::size_t(n_)};
  }

  double row_sum(NodeId i) const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

struct DynamicsParams {
  double memory = 0.5;              // m in [0,1]
  double alpha = 1.1;               // competition exponent, >= 1
  int max_iterations = 100;
  double convergence_epsilon = 1e-6;

  void validate() const;
};

// S(0) = delta_ij: every node knows only about itself.
KnowledgeMatrix init_knowledge(int n);

// Diffusion half-step: S' = m*S + (1-m)*A*S with A the raw adjacency
// matrix. Rows of the result are generally not normalized.
KnowledgeMatrix communicate(const KnowledgeMatrix& s, const Graph& g,
                            double memory);

// Competition: row-wise x -> x^alpha / sum(x^alpha). Throws on an all-zero
// row (degenerate knowledge state). alpha == 1 reduces to row normalization.
KnowledgeMatrix compete(const KnowledgeMatrix& s_half, double alpha);

// In-place competition applied to a single row; used by compete and by the
// scalar fixed-point analyses in tests.
void compete_row(std::span<double> row, double alpha);

// One full communication + competition step; output rows sum to 1.
KnowledgeMatrix step(const KnowledgeMatrix& s, const Graph& g,
                     const DynamicsParams& params);

// Called after every full step with the current matrix and the 1-based
// iteration number.
using StepObserver =
    std::function<void(const KnowledgeMatrix&, int iteration)>;

struct ConvergenceResult {
  KnowledgeMatrix matrix;
  int iterations = 0;
  bool converged = false;
};

// Iterates step() from init_knowledge until the max entrywise change drops
// below params.convergence_epsilon or max_iterations is hit. Non-convergence
// is reported through the flag, not an error.
ConvergenceResult run_to_convergence(const Graph& g,
                                     const DynamicsParams& params,
                                     const StepObserver& observer = {});

struct LevelScores {
  std::vector<NodeId> nodes;    // same order as the input level
  std::vector<double> scores;   // sums to 1 over the level
  bool uniform_fallback = false;

  double score_of(NodeId id) const;
  // Winner under "highest score, ties to lowest id".
  NodeId argmax() const;
};

// Attachment scores within one BFS level: score(j) is the knowledge mass the
// level members assign to j, renormalized over the level. Ids beyond the
// matrix dimension are treated as unknown (zero knowledge); if no mass
// remains the scores fall back to uniform and the flag is set.
LevelScores level_scores(const KnowledgeMatrix& s,
                         std::span<const NodeId> level);

}  // namespace sociogrow

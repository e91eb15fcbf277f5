#include "sociogrow/knowledge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sociogrow {

KnowledgeMatrix KnowledgeMatrix::identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("knowledge matrix: n must be >= 1");
  }
  KnowledgeMatrix s(n);
  for (NodeId i = 0; i < n; ++i) s.at(i, i) = 1.0;
  return s;
}

double KnowledgeMatrix::row_sum(NodeId i) const {
  double sum = 0.0;
  for (double v : row(i)) sum += v;
  return sum;
}

void DynamicsParams::validate() const {
  if (memory < 0.0 || memory > 1.0) {
    throw std::invalid_argument("dynamics: memory m must be in [0,1]");
  }
  if (alpha < 1.0) {
    throw std::invalid_argument("dynamics: alpha must be >= 1");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("dynamics: max_iterations must be >= 1");
  }
  if (convergence_epsilon <= 0.0) {
    throw std::invalid_argument("dynamics: convergence_epsilon must be > 0");
  }
}

KnowledgeMatrix init_knowledge(int n) { return KnowledgeMatrix::identity(n); }

KnowledgeMatrix communicate(const KnowledgeMatrix& s, const Graph& g,
                            double memory) {
  const int n = s.dim();
  if (n != g.node_count()) {
    throw std::invalid_argument(
        "communicate: matrix dimension " + std::to_string(n) +
        " does not match node count " + std::to_string(g.node_count()));
  }
  KnowledgeMatrix out(n);
  const double diffusion = 1.0 - memory;
#pragma omp parallel for schedule(static)
  for (NodeId i = 0; i < n; ++i) {
    double* dst = out.row(i).data();
    const double* src = s.row(i).data();
    for (NodeId j = 0; j < n; ++j) dst[j] = memory * src[j];
    for (NodeId k : g.neighbors(i)) {
      const double* nb = s.row(k).data();
      for (NodeId j = 0; j < n; ++j) dst[j] += diffusion * nb[j];
    }
  }
  return out;
}

namespace {

// Entries whose post-normalization share drops below this are flushed to
// zero so later power iterations skip them. The discarded mass per row is
// at most n * 1e-14, far inside the 1e-9 row-sum tolerance.
constexpr double kFlushThreshold = 1e-14;

}  // namespace

void compete_row(std::span<double> row, double alpha) {
  double sum = 0.0;
  if (alpha == 1.0) {
    for (double v : row) sum += v;
  } else if (alpha == 2.0) {
    for (double& v : row) {
      v *= v;
      sum += v;
    }
  } else {
    for (double& v : row) {
      if (v > 0.0) {
        v = std::pow(v, alpha);
        sum += v;
      } else {
        v = 0.0;
      }
    }
  }
  if (sum <= 0.0) {
    throw std::domain_error("compete: all-zero knowledge row");
  }
  const double inv = 1.0 / sum;
  for (double& v : row) {
    v *= inv;
    if (v < kFlushThreshold) v = 0.0;
  }
}

KnowledgeMatrix compete(const KnowledgeMatrix& s_half, double alpha) {
  KnowledgeMatrix out = s_half;
  const int n = out.dim();
  bool degenerate = false;
#pragma omp parallel for schedule(static)
  for (NodeId i = 0; i < n; ++i) {
    try {
      compete_row(out.row(i), alpha);
    } catch (const std::domain_error&) {
#pragma omp atomic write
      degenerate = true;
    }
  }
  if (degenerate) {
    throw std::domain_error("compete: all-zero knowledge row");
  }
  return out;
}

KnowledgeMatrix step(const KnowledgeMatrix& s, const Graph& g,
                     const DynamicsParams& params) {
  return compete(communicate(s, g, params.memory), params.alpha);
}

ConvergenceResult run_to_convergence(const Graph& g,
                                     const DynamicsParams& params,
                                     const StepObserver& observer) {
  params.validate();
  const int n = g.node_count();
  if (n < 1) {
    throw std::invalid_argument("run_to_convergence: empty graph");
  }
  ConvergenceResult result;
  result.matrix = init_knowledge(n);
  for (int iter = 1; iter <= params.max_iterations; ++iter) {
    KnowledgeMatrix next = step(result.matrix, g, params);
    double max_change = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_change)
    for (NodeId i = 0; i < n; ++i) {
      const double* a = next.row(i).data();
      const double* b = result.matrix.row(i).data();
      double local = 0.0;
      for (NodeId j = 0; j < n; ++j) {
        local = std::max(local, std::abs(a[j] - b[j]));
      }
      max_change = std::max(max_change, local);
    }
    result.matrix = std::move(next);
    result.iterations = iter;
    if (observer) observer(result.matrix, iter);
    if (max_change < params.convergence_epsilon) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double LevelScores::score_of(NodeId id) const {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] == id) return scores[k];
  }
  throw std::out_of_range("level_scores: node " + std::to_string(id) +
                          " not in level");
}

NodeId LevelScores::argmax() const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (scores[k] > scores[best] ||
        (scores[k] == scores[best] && nodes[k] < nodes[best])) {
      best = k;
    }
  }
  return nodes[best];
}

LevelScores level_scores(const KnowledgeMatrix& s,
                         std::span<const NodeId> level) {
  if (level.empty()) {
    throw std::invalid_argument("level_scores: empty level");
  }
  LevelScores out;
  out.nodes.assign(level.begin(), level.end());
  out.scores.assign(level.size(), 0.0);
  double total = 0.0;
  for (NodeId i : level) {
    if (i < 0) throw std::out_of_range("level_scores: negative node id");
    if (i >= s.dim()) continue;  // arrived after the matrix was computed
    for (std::size_t k = 0; k < out.nodes.size(); ++k) {
      const NodeId j = out.nodes[k];
      if (j >= s.dim()) continue;
      const double v = s.at(i, j);
      out.scores[k] += v;
      total += v;
    }
  }
  if (total > 0.0) {
    for (double& v : out.scores) v /= total;
  } else {
    const double uniform = 1.0 / static_cast<double>(level.size());
    std::fill(out.scores.begin(), out.scores.end(), uniform);
    out.uniform_fallback = true;
  }
  return out;
}

}  // namespace sociogrow

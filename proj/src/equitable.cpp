#include "specat/equitable.hpp"

#include <algorithm>
#include <map>

#include "specat/error.hpp"

namespace specat {

namespace {

std::vector<std::size_t> counts_by_cell(const RealMatrix& adj, const Partition& p, std::size_t v) {
  std::vector<std::size_t> counts(p.cell_count(), 0);
  for (std::size_t k = 0; k < adj.cols(); ++k)
    if (adj(v, k) != 0.0) ++counts[p.cell_of(k)];
  return counts;
}

}  // namespace

RealMatrix adjacency_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RealMatrix adj(n, n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    adj.set(u, v, 1.0);
    adj.set(v, u, 1.0);
  }
  return adj;
}

void validate_adjacency(const RealMatrix& adj, bool require_connected) {
  if (adj.rows() != adj.cols())
    throw PreconditionError("adjacency matrix is " + std::to_string(adj.rows()) + "x" + std::to_string(adj.cols()) +
                            ", expected square");
  const std::size_t n = adj.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = adj(i, j);
      if (a != 0.0 && a != 1.0)
        throw PreconditionError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not 0/1");
      if (a != adj(j, i))
        throw PreconditionError("graph is not undirected: adjacency differs at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  if (require_connected) {
    if (n == 0) throw PreconditionError("graph not connected: no vertices");
    const auto comps = weak_components(n, [&](std::size_t i, std::size_t j) { return adj(i, j) != 0.0; });
    if (comps.cell_count() != 1)
      throw PreconditionError("graph not connected: " + std::to_string(comps.cell_count()) + " components");
  }
}

Partition color_refinement(const RealMatrix& adj, const Partition& initial) {
  Partition current = initial;
  for (;;) {
    // Signature: (own cell, neighbour count per cell). New cells are ranked by
    // signature, which orders sub-cells deterministically.
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> rank;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(adj.rows());
    for (std::size_t v = 0; v < adj.rows(); ++v) {
      sig[v] = {current.cell_of(v), counts_by_cell(adj, current, v)};
      rank.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : rank) id = next++;
    std::vector<std::size_t> ids(adj.rows());
    for (std::size_t v = 0; v < adj.rows(); ++v) ids[v] = rank.at(sig[v]);
    Partition refined = Partition::from_labels(ids);
    if (refined.cell_count() == current.cell_count()) return refined;
    current = std::move(refined);
  }
}

Partition coarsest_equitable_partition(const RealMatrix& adjacency) {
  validate_adjacency(adjacency, true);
  return color_refinement(adjacency, Partition::single_cell(adjacency.rows()));
}

std::optional<std::string> equitability_violation(const RealMatrix& adj, const Partition& p) {
  if (p.size() != adj.rows())
    return "partition covers " + std::to_string(p.size()) + " vertices, graph has " + std::to_string(adj.rows());
  for (std::size_t k = 0; k < p.cell_count(); ++k) {
    const auto& cell = p.cell(k);
    const auto expected = counts_by_cell(adj, p, cell.front());
    for (auto v : cell) {
      const auto got = counts_by_cell(adj, p, v);
      if (got == expected) continue;
      for (std::size_t c = 0; c < got.size(); ++c)
        if (got[c] != expected[c])
          return "vertex " + std::to_string(v) + " has " + std::to_string(got[c]) + " neighbours in cell " +
                 std::to_string(c) + " but vertex " + std::to_string(cell.front()) + " of the same cell has " +
                 std::to_string(expected[c]);
    }
  }
  return std::nullopt;
}

RealMatrix walk_matrix(const RealMatrix& adj) {
  validate_adjacency(adj, false);
  const std::size_t n = adj.rows();
  RealMatrix f(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t degree = 0;
    for (std::size_t k = 0; k < n; ++k) degree += adj(j, k) != 0.0 ? 1 : 0;
    if (degree == 0) throw PreconditionError("vertex " + std::to_string(j) + " is isolated");
    for (std::size_t k = 0; k < n; ++k)
      if (adj(j, k) != 0.0) f.set(j, k, 1.0 / static_cast<double>(degree));
  }
  return f;
}

EquitableQuotient reduced_transition_matrix(const RealMatrix& adj, const Partition& partition) {
  validate_adjacency(adj, false);
  if (auto bad = equitability_violation(adj, partition)) throw PreconditionError("partition is not equitable: " + *bad);
  const std::size_t n = adj.rows();
  const std::size_t cells = partition.cell_count();

  EquitableQuotient q;
  q.partition = partition;
  q.degrees.resize(cells);
  q.reduced = RealMatrix(cells, cells);
  q.rho = RealMatrix(cells, n);
  q.kappa = RealMatrix(n, cells);
  for (std::size_t J = 0; J < cells; ++J) {
    const auto& cell = partition.cell(J);
    q.degrees[J] = counts_by_cell(adj, partition, cell.front());
    std::size_t total = 0;
    for (auto d : q.degrees[J]) total += d;
    if (total == 0) throw PreconditionError("vertex " + std::to_string(cell.front()) + " is isolated");
    for (std::size_t K = 0; K < cells; ++K)
      q.reduced.set(J, K, static_cast<double>(q.degrees[J][K]) / static_cast<double>(total));
    const double weight = 1.0 / static_cast<double>(cell.size());
    for (auto v : cell) {
      q.rho.set(J, v, weight);
      q.kappa.set(v, J, 1.0);
    }
  }
  return q;
}

LawReport check_quotient(const RealMatrix& adj, const EquitableQuotient& q, Tolerance tol) {
  LawReport report;
  const MatR cat;
  const std::size_t cells = q.partition.cell_count();

  for (std::size_t J = 0; J < cells; ++J)
    for (std::size_t K = 0; K < cells; ++K) {
      const std::size_t lhs = q.partition.cell(J).size() * q.degrees[J][K];
      const std::size_t rhs = q.partition.cell(K).size() * q.degrees[K][J];
      report.record("conservation n_J d(J,K) = n_K d(K,J)", lhs == rhs,
                    lhs > rhs ? double(lhs - rhs) : double(rhs - lhs), [&] {
                      return std::vector<std::string>{"J = " + std::to_string(J), "K = " + std::to_string(K),
                                                      "n_J d(J,K) = " + std::to_string(lhs),
                                                      "n_K d(K,J) = " + std::to_string(rhs)};
                    });
    }

  for (std::size_t J = 0; J < cells; ++J) {
    double sum = 0.0;
    for (std::size_t K = 0; K < cells; ++K) sum += q.reduced(J, K);
    report.record("lambda_1 rows sum to 1", tol.close(sum, 1.0), std::abs(sum - 1.0), [&] {
      return std::vector<std::string>{"row " + std::to_string(J) + " sums to " + format_scalar(sum)};
    });
  }

  auto law = [&](std::string_view name, const RealMatrix& lhs, const RealMatrix& rhs) {
    report.record(name, cat.equal(lhs, rhs, tol), cat.residual(lhs, rhs), [&] {
      return std::vector<std::string>{"lhs = " + describe_matrix(lhs), "rhs = " + describe_matrix(rhs)};
    });
  };
  const RealMatrix f = walk_matrix(adj);
  law("rho_1.kappa_1 = id", multiply(q.rho, q.kappa), RealMatrix::identity(cells));
  law("rho_1.f = lambda_1.rho_1", multiply(q.rho, f), multiply(q.reduced, q.rho));
  law("f.kappa_1 = kappa_1.lambda_1", multiply(f, q.kappa), multiply(q.kappa, q.reduced));
  const RealMatrix residual = residual_part(f, q);
  law("rho_1.(f - kappa_1.lambda_1.rho_1) = 0", multiply(q.rho, residual), RealMatrix(cells, f.cols()));
  return report;
}

}  // namespace specat

#pragma once

// Equitable partitions of undirected graphs and the reduced random-walk
// transition matrix on their cells.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specat/law_report.hpp"
#include "specat/matcat.hpp"
#include "specat/partition.hpp"
#include "specat/tolerance.hpp"

namespace specat {

using RealMatrix = ScalarMatrix<RealDomain>;

// Symmetric 0/1 adjacency from an undirected edge list on {0..n-1}.
RealMatrix adjacency_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Throws PreconditionError for non-square, non-0/1, asymmetric or (when
// required) disconnected input.
void validate_adjacency(const RealMatrix& adjacency, bool require_connected = true);

// Refines `initial` by neighbour counts per cell until stable.
Partition color_refinement(const RealMatrix& adjacency, const Partition& initial);

// Coarsest equitable partition of a connected undirected graph.
Partition coarsest_equitable_partition(const RealMatrix& adjacency);

// Description of the first vertex whose neighbour counts differ from its
// cell's first member, or nullopt when the partition is equitable.
std::optional<std::string> equitability_violation(const RealMatrix& adjacency, const Partition& partition);

// Random-walk matrix f with f_jk = 1/d_j on edges.
RealMatrix walk_matrix(const RealMatrix& adjacency);

struct EquitableQuotient {
  Partition partition;
  std::vector<std::vector<std::size_t>> degrees;  // d(J,K): neighbours in K of any vertex of J
  RealMatrix reduced;                             // lambda_1(J,K) = d(J,K) / d(J)
  RealMatrix rho;                                 // row J = (1/n_J) * indicator of J
  RealMatrix kappa;                               // column J = indicator of J
};

// Throws PreconditionError naming the violating vertex when the partition is
// not equitable.
EquitableQuotient reduced_transition_matrix(const RealMatrix& adjacency, const Partition& partition);

// Conservation n_J d(J,K) = n_K d(K,J), stochastic rows, rho.kappa = id, the
// intertwinings with the walk matrix, and rho.(f - kappa.lambda.rho) = 0.
LawReport check_quotient(const RealMatrix& adjacency, const EquitableQuotient& q, Tolerance tol = {});

template <ScalarDomain D>
ScalarMatrix<D> lift_real(const RealMatrix& m) {
  std::vector<typename D::Scalar> data(m.entries().begin(), m.entries().end());
  return ScalarMatrix<D>(m.rows(), m.cols(), std::move(data));
}

// f - kappa_1.lambda_1.rho_1. Requires a domain with negation.
template <ScalarDomain D>
ScalarMatrix<D> residual_part(const ScalarMatrix<D>& f, const EquitableQuotient& q) {
  if constexpr (!D::has_negation) {
    throw DomainError("residual_part: the " + std::string(D::name) + " domain has no subtraction");
  } else {
    const auto principal = multiply(lift_real<D>(q.kappa), multiply(lift_real<D>(q.reduced), lift_real<D>(q.rho)));
    return subtract(f, principal);
  }
}

}  // namespace specat

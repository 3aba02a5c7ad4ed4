#pragma once

// Spectral decompositions by support connectivity: relation-component
// separation in Rel(L) and block-diagonal detection in Mat(.).

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "specat/error.hpp"
#include "specat/matcat.hpp"
#include "specat/partition.hpp"
#include "specat/relcat.hpp"
#include "specat/spectral.hpp"

namespace specat {

template <CMonCategory C>
struct Separation {
  Partition partition;
  SpectralDecomposition<C> decomposition;
};

// Splits the carrier of an endo-relation into the weakly connected components
// of its support. Per cell A_i: rho_i = {(a, a) | a in A_i} at top,
// kappa_i = rho_i converse and lambda_i = f restricted to A_i.
Separation<RelCategory> separate_components(const RelCategory& cat, const LRelation& f);

// Sub-carrier of `c` holding the elements listed in `cell`, in order.
Carrier sub_carrier(const Carrier& c, const std::vector<std::size_t>& cell);

// Splits the index set of a square matrix into the connected components of the
// symmetrized support {(i, j) | |f_ij| > zero_threshold}. rho_i and kappa_i are
// 0/1 coordinate selections and lambda_i is the principal submatrix on cell i.
template <ScalarDomain D>
Separation<MatCategory<D>> detect_blocks(const MatCategory<D>& cat, const ScalarMatrix<D>& f,
                                         double zero_threshold = 0.0) {
  using Scalar = typename D::Scalar;
  if (f.rows() != f.cols())
    throw PreconditionError("detect_blocks: matrix is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                            ", expected square");
  const std::size_t n = f.rows();
  auto partition = weak_components(n, [&](std::size_t i, std::size_t j) {
    return D::magnitude(f(i, j)) > zero_threshold;
  });

  SpectralDecomposition<MatCategory<D>> dec;
  dec.carrier = n;
  for (const auto& cell : partition.cells()) {
    const std::size_t k = cell.size();
    ScalarMatrix<D> rho(k, n), kappa(n, k), lambda(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      rho.set(a, cell[a], Scalar(1));
      kappa.set(cell[a], a, Scalar(1));
      for (std::size_t b = 0; b < k; ++b) lambda.set(a, b, f(cell[a], cell[b]));
    }
    dec.blocks.push_back({k, std::move(rho), std::move(kappa), std::move(lambda)});
  }
  if (dec.blocks.empty()) dec = identity_decomposition(cat, f);
  return {std::move(partition), std::move(dec)};
}

}  // namespace specat

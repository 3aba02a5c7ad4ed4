#include "specat/components.hpp"

namespace specat {

Carrier sub_carrier(const Carrier& c, const std::vector<std::size_t>& cell) {
  std::vector<std::string> labels;
  labels.reserve(cell.size());
  for (auto v : cell) labels.push_back(c[v]);
  return Carrier(std::move(labels));
}

Separation<RelCategory> separate_components(const RelCategory& cat, const LRelation& f) {
  if (!(f.source() == f.target()))
    throw TypeMismatch("separate_components: relation is not an endo-relation (" + describe_carrier(f.source()) +
                       " -> " + describe_carrier(f.target()) + ")");
  const auto& L = *cat.algebra();
  const auto& c = f.source();
  auto partition = weak_components(c.size(), [&](std::size_t i, std::size_t j) { return f.at(i, j) != L.bottom(); });

  SpectralDecomposition<RelCategory> dec;
  dec.carrier = c;
  for (const auto& cell : partition.cells()) {
    auto object = sub_carrier(c, cell);
    auto rho = lrel_zero(cat.algebra(), c, object);
    auto lambda = lrel_zero(cat.algebra(), object, object);
    for (std::size_t a = 0; a < cell.size(); ++a) {
      rho.set(a, cell[a], L.top());
      for (std::size_t b = 0; b < cell.size(); ++b) lambda.set(a, b, f.at(cell[a], cell[b]));
    }
    auto kappa = lrel_converse(rho);
    dec.blocks.push_back({std::move(object), std::move(rho), std::move(kappa), std::move(lambda)});
  }
  // The empty carrier has no cells; keep the one-block identity decomposition.
  if (dec.blocks.empty()) dec = identity_decomposition(cat, f);
  return {std::move(partition), std::move(dec)};
}

}  // namespace specat

#pragma once

// Spectral decompositions of endo-arrows f: c -> c as an n-ary family of
// blocks (x_i, rho_i: c -> x_i, kappa_i: x_i -> c, lambda_i: x_i -> x_i).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "specat/cmon_core.hpp"
#include "specat/error.hpp"
#include "specat/law_report.hpp"
#include "specat/tolerance.hpp"

namespace specat {

template <CMonCategory C>
struct SpectralBlock {
  typename C::Object object;
  typename C::Arrow rho;
  typename C::Arrow kappa;
  typename C::Arrow lambda;
};

template <CMonCategory C>
struct SpectralDecomposition {
  typename C::Object carrier;
  std::vector<SpectralBlock<C>> blocks;
};

namespace conditions {
inline constexpr std::string_view kRetraction = "(a) rho_i.kappa_i = id";
inline constexpr std::string_view kOrthogonal = "(b) rho_i.kappa_j = 0 (i != j)";
inline constexpr std::string_view kPartitionOfIdentity = "(c) sum kappa_i.rho_i = id";
inline constexpr std::string_view kReconstruction = "(d) sum kappa_i.lambda_i.rho_i = f";
inline constexpr std::string_view kProjectionIntertwines = "rho_i.f = lambda_i.rho_i";
inline constexpr std::string_view kInjectionIntertwines = "f.kappa_i = kappa_i.lambda_i";
}  // namespace conditions

template <CMonCategory C>
void check_decomposition_types(const C& cat, const SpectralDecomposition<C>& dec) {
  if (dec.blocks.empty()) throw TypeMismatch("decomposition: no blocks");
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    const std::string tag = "block " + std::to_string(i) + ": ";
    detail::expect_arrow(cat, tag + "rho", b.rho, dec.carrier, b.object);
    detail::expect_arrow(cat, tag + "kappa", b.kappa, b.object, dec.carrier);
    detail::expect_arrow(cat, tag + "lambda", b.lambda, b.object, b.object);
  }
}

// Checks conditions (a)-(d) and the two intertwining identities that follow
// from them. Throws TypeMismatch when arrows do not type-check against f.
template <CMonCategory C>
LawReport verify_decomposition(const C& cat, const typename C::Arrow& f, const SpectralDecomposition<C>& dec,
                               Tolerance tol = {}) {
  using Arrow = typename C::Arrow;
  detail::expect_arrow(cat, "f", f, dec.carrier, dec.carrier);
  check_decomposition_types(cat, dec);

  constexpr std::size_t kWholeCarrier = static_cast<std::size_t>(-1);
  LawReport report;
  auto law = [&](std::string_view name, std::size_t i, std::size_t j, const Arrow& lhs, const Arrow& rhs) {
    report.record(name, cat.equal(lhs, rhs, tol), cat.residual(lhs, rhs), [&] {
      std::vector<std::string> out;
      if (i != kWholeCarrier) out.push_back("block i = " + std::to_string(i));
      if (j != i) out.push_back("block j = " + std::to_string(j));
      out.push_back("lhs = " + cat.describe(lhs));
      out.push_back("rhs = " + cat.describe(rhs));
      return out;
    });
  };

  const std::size_t n = dec.blocks.size();
  auto partition = cat.zero(dec.carrier, dec.carrier);
  auto reconstruction = cat.zero(dec.carrier, dec.carrier);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& bi = dec.blocks[i];
    law(conditions::kRetraction, i, i, cat.compose(bi.rho, bi.kappa), cat.identity(bi.object));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& bj = dec.blocks[j];
      law(conditions::kOrthogonal, i, j, cat.compose(bi.rho, bj.kappa), cat.zero(bj.object, bi.object));
    }
    partition = cat.add(partition, cat.compose(bi.kappa, bi.rho));
    reconstruction = cat.add(reconstruction, cat.compose(bi.kappa, cat.compose(bi.lambda, bi.rho)));
  }
  if (n < 2) report.entry(conditions::kOrthogonal);
  law(conditions::kPartitionOfIdentity, kWholeCarrier, kWholeCarrier, partition, cat.identity(dec.carrier));
  law(conditions::kReconstruction, kWholeCarrier, kWholeCarrier, reconstruction, f);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = dec.blocks[i];
    law(conditions::kProjectionIntertwines, i, i, cat.compose(b.rho, f), cat.compose(b.lambda, b.rho));
    law(conditions::kInjectionIntertwines, i, i, cat.compose(f, b.kappa), cat.compose(b.kappa, b.lambda));
  }
  return report;
}

template <CMonCategory C>
typename C::Arrow reconstruct(const C& cat, const SpectralDecomposition<C>& dec) {
  auto total = cat.zero(dec.carrier, dec.carrier);
  for (const auto& b : dec.blocks) total = cat.add(total, cat.compose(b.kappa, cat.compose(b.lambda, b.rho)));
  return total;
}

// Single block with rho = kappa = id_c and lambda = f.
template <CMonCategory C>
SpectralDecomposition<C> identity_decomposition(const C& cat, const typename C::Arrow& f) {
  const auto c = cat.source(f);
  detail::expect_arrow(cat, "f", f, c, c);
  return SpectralDecomposition<C>{c, {SpectralBlock<C>{c, cat.identity(c), cat.identity(c), f}}};
}

namespace detail {

template <CMonCategory C>
void expect_shared_structure(const C& cat, const SpectralDecomposition<C>& a, const SpectralDecomposition<C>& b,
                             std::string_view op, Tolerance tol) {
  if (!(a.carrier == b.carrier)) throw PreconditionError(std::string(op) + ": carriers differ");
  if (a.blocks.size() != b.blocks.size()) throw PreconditionError(std::string(op) + ": block counts differ");
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const auto& x = a.blocks[i];
    const auto& y = b.blocks[i];
    if (!(x.object == y.object) || !cat.equal(x.kappa, y.kappa, tol) || !cat.equal(x.rho, y.rho, tol))
      throw PreconditionError(std::string(op) + ": block " + std::to_string(i) +
                              " does not share its eigeninjection and projection");
  }
}

}  // namespace detail

// (lambda'_i . lambda_i): a decomposition of f' . f when both share their
// eigeninjections.
template <CMonCategory C>
SpectralDecomposition<C> compose_decompositions(const C& cat, const SpectralDecomposition<C>& dec,
                                                const SpectralDecomposition<C>& dec_after, Tolerance tol = {}) {
  check_decomposition_types(cat, dec);
  check_decomposition_types(cat, dec_after);
  detail::expect_shared_structure(cat, dec, dec_after, "compose_decompositions", tol);
  SpectralDecomposition<C> out = dec;
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    out.blocks[i].lambda = cat.compose(dec_after.blocks[i].lambda, dec.blocks[i].lambda);
  return out;
}

// (lambda'_i + lambda_i): a decomposition of f' + f.
template <CMonCategory C>
SpectralDecomposition<C> sum_decompositions(const C& cat, const SpectralDecomposition<C>& dec,
                                            const SpectralDecomposition<C>& other, Tolerance tol = {}) {
  check_decomposition_types(cat, dec);
  check_decomposition_types(cat, other);
  detail::expect_shared_structure(cat, dec, other, "sum_decompositions", tol);
  SpectralDecomposition<C> out = dec;
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    out.blocks[i].lambda = cat.add(other.blocks[i].lambda, dec.blocks[i].lambda);
  return out;
}

// Groups blocks 2..n into one block over x_2 (+) ... (+) x_n (left-folded
// canonical biproduct): rho = <rho_2..rho_n>, kappa = [kappa_2..kappa_n],
// lambda = lambda_2 (+) ... (+) lambda_n.
template <CMonCategory C>
SpectralDecomposition<C> fold_to_binary(const C& cat, const SpectralDecomposition<C>& dec) {
  check_decomposition_types(cat, dec);
  if (dec.blocks.size() <= 2) return dec;
  std::vector<typename C::Object> objects;
  std::vector<typename C::Arrow> rhos, kappas, lambdas;
  for (std::size_t i = 1; i < dec.blocks.size(); ++i) {
    objects.push_back(dec.blocks[i].object);
    rhos.push_back(dec.blocks[i].rho);
    kappas.push_back(dec.blocks[i].kappa);
    lambdas.push_back(dec.blocks[i].lambda);
  }
  const auto rest = nary_biproduct(cat, std::span<const typename C::Object>(objects));
  SpectralBlock<C> grouped{rest.carrier, nary_pair(cat, std::span<const typename C::Arrow>(rhos), rest),
                           nary_copair(cat, std::span<const typename C::Arrow>(kappas), rest),
                           nary_oplus(cat, std::span<const typename C::Arrow>(lambdas), rest, rest)};
  return SpectralDecomposition<C>{dec.carrier, {dec.blocks.front(), std::move(grouped)}};
}

}  // namespace specat

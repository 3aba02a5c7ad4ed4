#pragma once

// Semiadditive CMon-functors between category instances, the functor law
// checker and the transport of spectral decompositions along functors.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "specat/cmon_core.hpp"
#include "specat/error.hpp"
#include "specat/heyting.hpp"
#include "specat/law_report.hpp"
#include "specat/relcat.hpp"
#include "specat/spectral.hpp"

namespace specat {

// Map between finite lattices preserving bottom, top, binary joins and meets.
class LatticeHom {
 public:
  using Element = HeytingTable::Element;

  // Throws InvalidStructure with the first violated law and its element pair.
  static LatticeHom create(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map);
  static LatticeHom unchecked(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map);
  static LatticeHom identity(AlgebraPtr algebra);
  // x |-> top iff threshold <= x, into the two-element lattice.
  static LatticeHom threshold(AlgebraPtr source, Element threshold);

  std::vector<std::string> violations(std::size_t limit = 1) const;

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element x) const { return map_.at(x); }

 private:
  LatticeHom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map);
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> map_;
};

enum class FunctorKind { lattice_hom_induced, caller_supplied };

template <CMonCategory Src, CMonCategory Tgt>
struct Functor {
  FunctorKind kind = FunctorKind::caller_supplied;
  std::function<typename Tgt::Object(const typename Src::Object&)> object;
  std::function<typename Tgt::Arrow(const typename Src::Arrow&)> arrow;
};

using RelFunctor = Functor<RelCategory, RelCategory>;

// Identity on carriers, h applied entrywise on arrows. Rejects maps that are
// not lattice homomorphisms.
RelFunctor induced_functor(const LatticeHom& h);
// Entrywise functor without the homomorphism check.
RelFunctor entrywise_functor(const LatticeHom& h);

namespace functor_laws {
inline constexpr std::string_view kAdditive = "F(f+g) = F(f)+F(g)";
inline constexpr std::string_view kZero = "F(0) = 0";
inline constexpr std::string_view kComposition = "F(g.f) = F(g).F(f)";
inline constexpr std::string_view kIdentity = "F(id) = id";
inline constexpr std::string_view kZeroObject = "F(zero object) is a zero object";
inline constexpr std::string_view kGammaProjections = "pi'_k.gamma = F(pi_k)";
inline constexpr std::string_view kGammaInjections = "gamma.F(iota_k) = iota'_k";
inline constexpr std::string_view kGammaIso = "gamma is invertible";
inline constexpr std::string_view kGammaNatural = "gamma natural";
}  // namespace functor_laws

namespace detail {

template <CMonCategory Src, CMonCategory Tgt>
struct FunctorChecker {
  const Src& src;
  const Tgt& tgt;
  const Functor<Src, Tgt>& F;
  Tolerance tol;
  LawReport report;

  using SA = typename Src::Arrow;
  using TA = typename Tgt::Arrow;

  void law(std::string_view name, const TA& lhs, const TA& rhs,
           std::initializer_list<std::pair<std::string_view, const SA*>> inputs) {
    report.record(name, tgt.equal(lhs, rhs, tol), tgt.residual(lhs, rhs), [&] {
      std::vector<std::string> out{"lhs = " + tgt.describe(lhs), "rhs = " + tgt.describe(rhs)};
      for (const auto& [label, a] : inputs) out.push_back(std::string(label) + " = " + src.describe(*a));
      return out;
    });
  }

  void parallel(const SA& f, const SA& g) {
    law(functor_laws::kAdditive, F.arrow(src.add(f, g)), tgt.add(F.arrow(f), F.arrow(g)), {{"f", &f}, {"g", &g}});
    const auto z = src.zero(src.source(f), src.target(f));
    law(functor_laws::kZero, F.arrow(z), tgt.zero(F.object(src.source(f)), F.object(src.target(f))), {});
  }

  void composable(const SA& f, const SA& g) {
    law(functor_laws::kComposition, F.arrow(src.compose(g, f)), tgt.compose(F.arrow(g), F.arrow(f)),
        {{"f", &f}, {"g", &g}});
    law(functor_laws::kIdentity, F.arrow(src.identity(src.source(f))), tgt.identity(F.object(src.source(f))), {});
  }

  // gamma = iota'_1.F(pi_1) + iota'_2.F(pi_2): F(x (+) y) -> F(x) (+)' F(y).
  TA gamma(const typename Src::Object& x, const typename Src::Object& y) {
    const auto w = src.biproduct(x, y);
    const auto wt = tgt.biproduct(F.object(x), F.object(y));
    return tgt.add(tgt.compose(wt.iota1, F.arrow(w.pi1)), tgt.compose(wt.iota2, F.arrow(w.pi2)));
  }

  void biproduct(const typename Src::Object& x, const typename Src::Object& y) {
    const auto w = src.biproduct(x, y);
    const auto wt = tgt.biproduct(F.object(x), F.object(y));
    const TA g = gamma(x, y);
    law(functor_laws::kGammaProjections, tgt.compose(wt.pi1, g), F.arrow(w.pi1), {});
    law(functor_laws::kGammaProjections, tgt.compose(wt.pi2, g), F.arrow(w.pi2), {});
    law(functor_laws::kGammaInjections, tgt.compose(g, F.arrow(w.iota1)), wt.iota1, {});
    law(functor_laws::kGammaInjections, tgt.compose(g, F.arrow(w.iota2)), wt.iota2, {});
    const TA inverse = tgt.add(tgt.compose(F.arrow(w.iota1), wt.pi1), tgt.compose(F.arrow(w.iota2), wt.pi2));
    law(functor_laws::kGammaIso, tgt.compose(g, inverse), tgt.identity(wt.carrier), {});
    law(functor_laws::kGammaIso, tgt.compose(inverse, g), tgt.identity(F.object(w.carrier)), {});
  }

  // gamma_{x',y'} . F(f (+) g) = (F f (+)' F g) . gamma_{x,y}
  void naturality(const SA& f, const SA& g) {
    const auto lhs = tgt.compose(gamma(src.target(f), src.target(g)), F.arrow(oplus(src, f, g)));
    const auto rhs = tgt.compose(oplus(tgt, F.arrow(f), F.arrow(g)), gamma(src.source(f), src.source(g)));
    law(functor_laws::kGammaNatural, lhs, rhs, {{"f", &f}, {"g", &g}});
  }

  void zero_object() {
    const auto z = F.object(src.zero_object());
    const auto id = tgt.identity(z);
    law(functor_laws::kZeroObject, tgt.zero(z, z), id, {});
  }
};

}  // namespace detail

// Sampled check that F is a semiadditive CMon-functor: monoid homomorphism on
// homsets, functoriality, zero-object preservation and the biproduct
// comparison gamma with its naturality on sampled squares.
template <CMonCategory Src, CMonCategory Tgt, ArrowSampler<Src> S>
LawReport check_cmon_functor(const Src& src, const Tgt& tgt, const Functor<Src, Tgt>& F, S& sampler,
                             std::size_t trials, Tolerance tol, Rng& rng) {
  detail::FunctorChecker<Src, Tgt> check{src, tgt, F, tol, {}};
  check.zero_object();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = sampler.object(rng);
    const auto y = sampler.object(rng);
    const auto z = sampler.object(rng);
    const auto f = sampler.arrow(rng, x, y);
    const auto f2 = sampler.arrow(rng, x, y);
    const auto g = sampler.arrow(rng, y, z);
    check.parallel(f, f2);
    check.composable(f, g);
    check.biproduct(x, y);
    const auto h = sampler.arrow(rng, z, x);
    check.naturality(f, h);
  }
  return check.report;
}

// Every relation source -> target over the lattice (|L|^(|source|*|target|) of them).
std::vector<LRelation> enumerate_relations(const AlgebraPtr& algebra, const Carrier& source, const Carrier& target);

// Exhaustive variant for relation instances: all arrows over carriers of size
// <= max_carrier (additivity on all parallel pairs, functoriality on all
// composable pairs, gamma on all carrier pairs).
LawReport check_cmon_functor_exhaustive(const RelCategory& src, const RelCategory& tgt, const RelFunctor& F,
                                        std::size_t max_carrier);

// Applies F to f and to every arrow of a decomposition verified against f.
// Throws PreconditionError when the input does not verify.
template <CMonCategory Src, CMonCategory Tgt>
std::pair<typename Tgt::Arrow, SpectralDecomposition<Tgt>> map_decomposition(
    const Src& src, const Tgt& tgt, const Functor<Src, Tgt>& F, const typename Src::Arrow& f,
    const SpectralDecomposition<Src>& dec, Tolerance tol = {}) {
  (void)tgt;
  const auto verdict = verify_decomposition(src, f, dec, tol);
  if (!verdict.passed())
    throw PreconditionError("map_decomposition: input decomposition does not verify (" +
                            verdict.failed_laws().front() + ")");
  SpectralDecomposition<Tgt> image;
  image.carrier = F.object(dec.carrier);
  for (const auto& b : dec.blocks)
    image.blocks.push_back({F.object(b.object), F.arrow(b.rho), F.arrow(b.kappa), F.arrow(b.lambda)});
  return {F.arrow(f), std::move(image)};
}

}  // namespace specat

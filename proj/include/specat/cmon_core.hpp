#pragma once

// Generic machinery for semiadditive CMon-categories: a category instance is
// any type satisfying `CMonCategory`. Everything in this header is a pure
// function of immutable arrows.

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specat/error.hpp"
#include "specat/law_report.hpp"
#include "specat/random.hpp"
#include "specat/tolerance.hpp"

namespace specat {

template <class Object, class Arrow>
struct BiproductWitness {
  Object left;
  Object right;
  Object carrier;
  Arrow pi1;    // carrier -> left
  Arrow pi2;    // carrier -> right
  Arrow iota1;  // left -> carrier
  Arrow iota2;  // right -> carrier
};

template <class C>
concept CMonCategory =
    requires(const C& cat, const typename C::Object& x, const typename C::Arrow& f, Tolerance tol) {
      { cat.source(f) } -> std::convertible_to<typename C::Object>;
      { cat.target(f) } -> std::convertible_to<typename C::Object>;
      { cat.compose(f, f) } -> std::same_as<typename C::Arrow>;
      { cat.add(f, f) } -> std::same_as<typename C::Arrow>;
      { cat.zero(x, x) } -> std::same_as<typename C::Arrow>;
      { cat.identity(x) } -> std::same_as<typename C::Arrow>;
      { cat.zero_object() } -> std::convertible_to<typename C::Object>;
      { cat.biproduct(x, x) } -> std::same_as<BiproductWitness<typename C::Object, typename C::Arrow>>;
      { cat.residual(f, f) } -> std::convertible_to<double>;
      { cat.equal(f, f, tol) } -> std::convertible_to<bool>;
      { cat.describe(f) } -> std::convertible_to<std::string>;
      { cat.describe_object(x) } -> std::convertible_to<std::string>;
      { x == x } -> std::convertible_to<bool>;
    };

template <CMonCategory C>
using WitnessOf = BiproductWitness<typename C::Object, typename C::Arrow>;

template <class S, class C>
concept ArrowSampler = requires(S& s, Rng& rng, const typename C::Object& x) {
  { s.object(rng) } -> std::convertible_to<typename C::Object>;
  { s.arrow(rng, x, x) } -> std::convertible_to<typename C::Arrow>;
};

namespace detail {

template <CMonCategory C>
std::string signature(const C& cat, const typename C::Object& src, const typename C::Object& tgt) {
  return cat.describe_object(src) + " -> " + cat.describe_object(tgt);
}

template <CMonCategory C>
void expect_arrow(const C& cat, std::string_view name, const typename C::Arrow& f,
                  const typename C::Object& src, const typename C::Object& tgt) {
  if (cat.source(f) == src && cat.target(f) == tgt) return;
  throw TypeMismatch(std::string(name) + ": expected " + signature(cat, src, tgt) + ", got " +
                     signature(cat, cat.source(f), cat.target(f)));
}

template <CMonCategory C>
void expect_parallel(const C& cat, std::string_view op, const typename C::Arrow& f,
                     const typename C::Arrow& g) {
  if (cat.source(f) == cat.source(g) && cat.target(f) == cat.target(g)) return;
  throw TypeMismatch(std::string(op) + ": arrows are not parallel (" +
                     signature(cat, cat.source(f), cat.target(f)) + " vs " +
                     signature(cat, cat.source(g), cat.target(g)) + ")");
}

template <CMonCategory C>
std::vector<std::string> describe_all(
    const C& cat,
    std::initializer_list<std::pair<std::string_view, const typename C::Arrow*>> arrows) {
  std::vector<std::string> out;
  out.reserve(arrows.size());
  for (const auto& [label, arrow] : arrows) out.push_back(std::string(label) + " = " + cat.describe(*arrow));
  return out;
}

}  // namespace detail

template <CMonCategory C>
void check_witness_types(const C& cat, const WitnessOf<C>& w) {
  detail::expect_arrow(cat, "pi1", w.pi1, w.carrier, w.left);
  detail::expect_arrow(cat, "pi2", w.pi2, w.carrier, w.right);
  detail::expect_arrow(cat, "iota1", w.iota1, w.left, w.carrier);
  detail::expect_arrow(cat, "iota2", w.iota2, w.right, w.carrier);
}

// Passes iff 0_{c,c} = id_c, which characterizes zero objects.
template <CMonCategory C>
LawReport check_zero_object(const C& cat, const typename C::Object& candidate, Tolerance tol = {}) {
  LawReport report;
  const auto id = cat.identity(candidate);
  const auto zero = cat.zero(candidate, candidate);
  const bool ok = cat.equal(zero, id, tol);
  report.record("zero-object: 0_{c,c} = id_c", ok, cat.residual(zero, id), [&] {
    return detail::describe_all(cat, {{"id_c", &id}, {"0_{c,c}", &zero}});
  });
  return report;
}

inline constexpr std::string_view kBiproductA = "(a) pi1.iota1 = id";
inline constexpr std::string_view kBiproductB = "(b) pi2.iota2 = id";
inline constexpr std::string_view kBiproductC = "(c) pi1.iota2 = 0";
inline constexpr std::string_view kBiproductD = "(d) pi2.iota1 = 0";
inline constexpr std::string_view kBiproductE = "(e) iota1.pi1 + iota2.pi2 = id";

template <CMonCategory C>
LawReport check_biproduct_axioms(const C& cat, const WitnessOf<C>& w, Tolerance tol = {}) {
  check_witness_types(cat, w);
  LawReport report;
  auto law = [&](std::string_view name, const typename C::Arrow& lhs, const typename C::Arrow& rhs) {
    report.record(name, cat.equal(lhs, rhs, tol), cat.residual(lhs, rhs), [&] {
      return detail::describe_all(cat, {{"lhs", &lhs},
                                        {"rhs", &rhs},
                                        {"pi1", &w.pi1},
                                        {"pi2", &w.pi2},
                                        {"iota1", &w.iota1},
                                        {"iota2", &w.iota2}});
    });
  };
  law(kBiproductA, cat.compose(w.pi1, w.iota1), cat.identity(w.left));
  law(kBiproductB, cat.compose(w.pi2, w.iota2), cat.identity(w.right));
  law(kBiproductC, cat.compose(w.pi1, w.iota2), cat.zero(w.right, w.left));
  law(kBiproductD, cat.compose(w.pi2, w.iota1), cat.zero(w.left, w.right));
  law(kBiproductE, cat.add(cat.compose(w.iota1, w.pi1), cat.compose(w.iota2, w.pi2)),
      cat.identity(w.carrier));
  return report;
}

// <f1, f2> = iota1.f1 + iota2.f2
template <CMonCategory C>
typename C::Arrow pair(const C& cat, const typename C::Arrow& f1, const typename C::Arrow& f2,
                       const WitnessOf<C>& w) {
  if (!(cat.source(f1) == cat.source(f2)))
    throw TypeMismatch("pair: sources differ (" + cat.describe_object(cat.source(f1)) + " vs " +
                       cat.describe_object(cat.source(f2)) + ")");
  detail::expect_arrow(cat, "pair: f1", f1, cat.source(f1), w.left);
  detail::expect_arrow(cat, "pair: f2", f2, cat.source(f2), w.right);
  return cat.add(cat.compose(w.iota1, f1), cat.compose(w.iota2, f2));
}

// [f1, f2] = f1.pi1 + f2.pi2
template <CMonCategory C>
typename C::Arrow copair(const C& cat, const typename C::Arrow& f1, const typename C::Arrow& f2,
                         const WitnessOf<C>& w) {
  if (!(cat.target(f1) == cat.target(f2)))
    throw TypeMismatch("copair: targets differ (" + cat.describe_object(cat.target(f1)) + " vs " +
                       cat.describe_object(cat.target(f2)) + ")");
  detail::expect_arrow(cat, "copair: f1", f1, w.left, cat.target(f1));
  detail::expect_arrow(cat, "copair: f2", f2, w.right, cat.target(f2));
  return cat.add(cat.compose(f1, w.pi1), cat.compose(f2, w.pi2));
}

template <CMonCategory C>
typename C::Arrow oplus(const C& cat, const typename C::Arrow& f, const typename C::Arrow& g,
                        const WitnessOf<C>& source_witness, const WitnessOf<C>& target_witness) {
  detail::expect_arrow(cat, "oplus: f", f, source_witness.left, target_witness.left);
  detail::expect_arrow(cat, "oplus: g", g, source_witness.right, target_witness.right);
  return cat.add(cat.compose(target_witness.iota1, cat.compose(f, source_witness.pi1)),
                 cat.compose(target_witness.iota2, cat.compose(g, source_witness.pi2)));
}

// f (+) g over the canonical witnesses of the instance.
template <CMonCategory C>
typename C::Arrow oplus(const C& cat, const typename C::Arrow& f, const typename C::Arrow& g) {
  return oplus(cat, f, g, cat.biproduct(cat.source(f), cat.source(g)),
               cat.biproduct(cat.target(f), cat.target(g)));
}

template <CMonCategory C>
typename C::Arrow diagonal(const C& cat, const typename C::Object& x) {
  const auto id = cat.identity(x);
  return pair(cat, id, id, cat.biproduct(x, x));
}

template <CMonCategory C>
typename C::Arrow codiagonal(const C& cat, const typename C::Object& x) {
  const auto id = cat.identity(x);
  return copair(cat, id, id, cat.biproduct(x, x));
}

// codiag_y . (f (+) g) . diag_x; agrees with the native sum in every instance.
template <CMonCategory C>
typename C::Arrow sum_via_biproduct(const C& cat, const typename C::Arrow& f, const typename C::Arrow& g) {
  detail::expect_parallel(cat, "sum_via_biproduct", f, g);
  const auto x = cat.source(f);
  const auto y = cat.target(f);
  return cat.compose(codiagonal(cat, y), cat.compose(oplus(cat, f, g), diagonal(cat, x)));
}

template <CMonCategory C>
typename C::Arrow sum_all(const C& cat, std::span<const typename C::Arrow> arrows,
                          const typename C::Object& src, const typename C::Object& tgt) {
  auto total = cat.zero(src, tgt);
  for (const auto& a : arrows) total = cat.add(total, a);
  return total;
}

// Left-folded n-ary biproduct x1 (+) x2 (+) ... (+) xn with composite
// projections and injections.
template <CMonCategory C>
struct NaryBiproduct {
  typename C::Object carrier;
  std::vector<typename C::Object> factors;
  std::vector<typename C::Arrow> projections;
  std::vector<typename C::Arrow> injections;
};

template <CMonCategory C>
NaryBiproduct<C> nary_biproduct(const C& cat, std::span<const typename C::Object> factors) {
  if (factors.empty()) throw PreconditionError("nary_biproduct: at least one factor required");
  NaryBiproduct<C> out;
  out.carrier = factors.front();
  out.factors.assign(factors.begin(), factors.end());
  out.projections.push_back(cat.identity(factors.front()));
  out.injections.push_back(cat.identity(factors.front()));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    auto w = cat.biproduct(out.carrier, factors[k]);
    for (auto& p : out.projections) p = cat.compose(p, w.pi1);
    for (auto& i : out.injections) i = cat.compose(w.iota1, i);
    out.projections.push_back(w.pi2);
    out.injections.push_back(w.iota2);
    out.carrier = w.carrier;
  }
  return out;
}

template <CMonCategory C>
typename C::Arrow nary_pair(const C& cat, std::span<const typename C::Arrow> arrows,
                            const NaryBiproduct<C>& b) {
  if (arrows.size() != b.factors.size()) throw TypeMismatch("nary_pair: arity mismatch");
  const auto src = cat.source(arrows.front());
  auto total = cat.zero(src, b.carrier);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    detail::expect_arrow(cat, "nary_pair: component " + std::to_string(i), arrows[i], src, b.factors[i]);
    total = cat.add(total, cat.compose(b.injections[i], arrows[i]));
  }
  return total;
}

template <CMonCategory C>
typename C::Arrow nary_copair(const C& cat, std::span<const typename C::Arrow> arrows,
                              const NaryBiproduct<C>& b) {
  if (arrows.size() != b.factors.size()) throw TypeMismatch("nary_copair: arity mismatch");
  const auto tgt = cat.target(arrows.front());
  auto total = cat.zero(b.carrier, tgt);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    detail::expect_arrow(cat, "nary_copair: component " + std::to_string(i), arrows[i], b.factors[i], tgt);
    total = cat.add(total, cat.compose(arrows[i], b.projections[i]));
  }
  return total;
}

template <CMonCategory C>
typename C::Arrow nary_oplus(const C& cat, std::span<const typename C::Arrow> arrows,
                             const NaryBiproduct<C>& src, const NaryBiproduct<C>& tgt) {
  if (arrows.size() != src.factors.size() || arrows.size() != tgt.factors.size())
    throw TypeMismatch("nary_oplus: arity mismatch");
  auto total = cat.zero(src.carrier, tgt.carrier);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    detail::expect_arrow(cat, "nary_oplus: component " + std::to_string(i), arrows[i], src.factors[i],
                         tgt.factors[i]);
    total = cat.add(total, cat.compose(tgt.injections[i], cat.compose(arrows[i], src.projections[i])));
  }
  return total;
}

namespace laws {
inline constexpr std::string_view kComposeAssociative = "compose.associative";
inline constexpr std::string_view kComposeIdentity = "compose.identity";
inline constexpr std::string_view kAddAssociative = "add.associative";
inline constexpr std::string_view kAddCommutative = "add.commutative";
inline constexpr std::string_view kAddUnit = "add.unit";
inline constexpr std::string_view kZeroAnnihilates = "zero.annihilates";
inline constexpr std::string_view kDistributiveLeft = "distributive.left";
inline constexpr std::string_view kDistributiveRight = "distributive.right";
inline constexpr std::string_view kZeroObject = "zero-object";
inline constexpr std::string_view kPairUniversal = "pair.universal";
inline constexpr std::string_view kPairUnique = "pair.unique";
inline constexpr std::string_view kCopairUniversal = "copair.universal";
inline constexpr std::string_view kCopairUnique = "copair.unique";
inline constexpr std::string_view kCopairPair = "copair.pair = codiag.(fh (+) gk).diag";
inline constexpr std::string_view kSumViaBiproduct = "sum_via_biproduct = add";
}  // namespace laws

// Randomized check of the CMon-category laws, the biproduct conditions on
// canonical witnesses, pairing universality, the copair/pair composite
// identity and sum-via-biproduct agreement.
template <CMonCategory C, ArrowSampler<C> S>
LawReport run_law_suite(const C& cat, S& sampler, std::size_t trials, Tolerance tol, Rng& rng) {
  using Arrow = typename C::Arrow;
  LawReport report;
  auto law = [&](std::string_view name, const Arrow& lhs, const Arrow& rhs,
                 std::initializer_list<std::pair<std::string_view, const Arrow*>> inputs) {
    const bool ok = cat.equal(lhs, rhs, tol);
    report.record(name, ok, cat.residual(lhs, rhs), [&] {
      auto out = detail::describe_all(cat, {{"lhs", &lhs}, {"rhs", &rhs}});
      auto more = detail::describe_all(cat, inputs);
      out.insert(out.end(), more.begin(), more.end());
      return out;
    });
  };

  const auto zero_object = cat.zero_object();
  {
    const auto id = cat.identity(zero_object);
    const auto z = cat.zero(zero_object, zero_object);
    law(laws::kZeroObject, z, id, {});
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const auto w = sampler.object(rng);
    const auto x = sampler.object(rng);
    const auto y = sampler.object(rng);
    const auto z = sampler.object(rng);

    const Arrow f = sampler.arrow(rng, x, y);
    const Arrow f2 = sampler.arrow(rng, x, y);
    const Arrow f3 = sampler.arrow(rng, x, y);
    const Arrow g = sampler.arrow(rng, y, z);
    const Arrow g2 = sampler.arrow(rng, y, z);
    const Arrow h = sampler.arrow(rng, z, w);

    law(laws::kComposeAssociative, cat.compose(h, cat.compose(g, f)), cat.compose(cat.compose(h, g), f),
        {{"f", &f}, {"g", &g}, {"h", &h}});
    law(laws::kComposeIdentity, cat.compose(cat.identity(y), f), f, {{"f", &f}});
    law(laws::kComposeIdentity, cat.compose(f, cat.identity(x)), f, {{"f", &f}});

    law(laws::kAddAssociative, cat.add(f, cat.add(f2, f3)), cat.add(cat.add(f, f2), f3),
        {{"f", &f}, {"f2", &f2}, {"f3", &f3}});
    law(laws::kAddCommutative, cat.add(f, f2), cat.add(f2, f), {{"f", &f}, {"f2", &f2}});
    law(laws::kAddUnit, cat.add(f, cat.zero(x, y)), f, {{"f", &f}});
    law(laws::kAddUnit, cat.add(cat.zero(x, y), f), f, {{"f", &f}});

    law(laws::kZeroAnnihilates, cat.compose(g, cat.zero(x, y)), cat.zero(x, z), {{"g", &g}});
    law(laws::kZeroAnnihilates, cat.compose(cat.zero(y, z), f), cat.zero(x, z), {{"f", &f}});

    law(laws::kDistributiveLeft, cat.compose(g, cat.add(f, f2)), cat.add(cat.compose(g, f), cat.compose(g, f2)),
        {{"g", &g}, {"f", &f}, {"f2", &f2}});
    law(laws::kDistributiveRight, cat.compose(cat.add(g, g2), f), cat.add(cat.compose(g, f), cat.compose(g2, f)),
        {{"g", &g}, {"g2", &g2}, {"f", &f}});

    const auto wxy = cat.biproduct(x, y);
    report.merge(check_biproduct_axioms(cat, wxy, tol));

    // Pairing: f1: w -> x, f2: w -> y.
    const Arrow p1 = sampler.arrow(rng, w, x);
    const Arrow p2 = sampler.arrow(rng, w, y);
    const Arrow paired = pair(cat, p1, p2, wxy);
    law(laws::kPairUniversal, cat.compose(wxy.pi1, paired), p1, {{"f1", &p1}, {"f2", &p2}});
    law(laws::kPairUniversal, cat.compose(wxy.pi2, paired), p2, {{"f1", &p1}, {"f2", &p2}});
    const Arrow into = sampler.arrow(rng, w, wxy.carrier);
    law(laws::kPairUnique, pair(cat, cat.compose(wxy.pi1, into), cat.compose(wxy.pi2, into), wxy), into,
        {{"h", &into}});

    // Copairing: q1: x -> z, q2: y -> z.
    const Arrow q1 = sampler.arrow(rng, x, z);
    const Arrow q2 = sampler.arrow(rng, y, z);
    const Arrow copaired = copair(cat, q1, q2, wxy);
    law(laws::kCopairUniversal, cat.compose(copaired, wxy.iota1), q1, {{"f1", &q1}, {"f2", &q2}});
    law(laws::kCopairUniversal, cat.compose(copaired, wxy.iota2), q2, {{"f1", &q1}, {"f2", &q2}});
    const Arrow outof = sampler.arrow(rng, wxy.carrier, z);
    law(laws::kCopairUnique, copair(cat, cat.compose(outof, wxy.iota1), cat.compose(outof, wxy.iota2), wxy),
        outof, {{"h", &outof}});

    // [q1, q2] . <p1, p2> = codiag_z . ((q1 p1) (+) (q2 p2)) . diag_w
    {
      const Arrow lhs = cat.compose(copaired, paired);
      const Arrow rhs = cat.compose(codiagonal(cat, z),
                                    cat.compose(oplus(cat, cat.compose(q1, p1), cat.compose(q2, p2)),
                                                diagonal(cat, w)));
      law(laws::kCopairPair, lhs, rhs, {{"f", &q1}, {"g", &q2}, {"h", &p1}, {"k", &p2}});
    }

    law(laws::kSumViaBiproduct, sum_via_biproduct(cat, f, f2), cat.add(f, f2), {{"f", &f}, {"g", &f2}});
  }
  return report;
}

}  // namespace specat

#pragma once

// Rel(L): objects are finite ordered carriers, an arrow A -> B is a map
// B x A -> L stored as a |B| x |A| grid (rows indexed by the target).
// Composition is sup-of-meets, the homset monoid is the pointwise join.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specat/cmon_core.hpp"
#include "specat/heyting.hpp"
#include "specat/random.hpp"

namespace specat {

// Finite ordered set of pairwise distinct labels.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> labels);
  Carrier(std::initializer_list<std::string> labels) : Carrier(std::vector<std::string>(labels)) {}

  // Labels "prefix0", "prefix1", ...
  static Carrier indexed(std::size_t n, std::string_view prefix = "");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(std::string_view label) const;  // throws UnknownElement

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

std::string describe_carrier(const Carrier& c);

class LRelation {
 public:
  using Element = HeytingTable::Element;

  LRelation() = default;
  // `values` is target-major: values[t * source.size() + s].
  LRelation(AlgebraPtr algebra, Carrier source, Carrier target, std::vector<Element> values);
  // Grid given as rows of element labels, one row per target element.
  static LRelation from_labels(AlgebraPtr algebra, Carrier source, Carrier target,
                               const std::vector<std::vector<std::string>>& rows);
  // Crisp relation: top on the listed (target, source) pairs, bottom elsewhere.
  static LRelation from_pairs(AlgebraPtr algebra, Carrier source, Carrier target,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Carrier& source() const { return source_; }
  const Carrier& target() const { return target_; }
  Element at(std::size_t t, std::size_t s) const { return values_[t * source_.size() + s]; }
  void set(std::size_t t, std::size_t s, Element v);
  const std::vector<Element>& values() const { return values_; }

  // (target, source) label pairs whose value is not bottom.
  std::vector<std::pair<std::string, std::string>> support() const;

  friend bool operator==(const LRelation& a, const LRelation& b);

 private:
  AlgebraPtr algebra_;
  Carrier source_;
  Carrier target_;
  std::vector<Element> values_;
};

// (g . f)(c, a) = join_b g(c, b) /\ f(b, a)
LRelation lrel_compose(const LRelation& g, const LRelation& f);
LRelation lrel_join(const LRelation& a, const LRelation& b);
LRelation lrel_zero(const AlgebraPtr& algebra, const Carrier& source, const Carrier& target);
LRelation lrel_identity(const AlgebraPtr& algebra, const Carrier& carrier);
LRelation lrel_converse(const LRelation& f);
// Applies `map` to every value; the result lives over `algebra`.
LRelation lrel_map_values(const LRelation& f, const AlgebraPtr& algebra, const std::vector<HeytingTable::Element>& map);

std::string describe_relation(const LRelation& f);

class RelCategory {
 public:
  using Object = Carrier;
  using Arrow = LRelation;
  using Witness = BiproductWitness<Object, Arrow>;

  explicit RelCategory(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }

  const Carrier& source(const Arrow& f) const { return f.source(); }
  const Carrier& target(const Arrow& f) const { return f.target(); }
  Arrow compose(const Arrow& g, const Arrow& f) const;
  Arrow add(const Arrow& f, const Arrow& g) const;
  Arrow zero(const Object& x, const Object& y) const { return lrel_zero(algebra_, x, y); }
  Arrow identity(const Object& x) const { return lrel_identity(algebra_, x); }
  Object zero_object() const { return Carrier{}; }

  // Tagged disjoint union {(1,a)} u {(2,b)}, left labels first; pi_k = p_k
  // and iota_k = pi_k converse.
  Witness biproduct(const Object& a, const Object& b) const;
  // pi1 = f . p1, pi2 = g . p2 with isomorphisms f: A -> A, g: B -> B.
  Witness generalized_biproduct(const Arrow& f, const Arrow& g) const;

  // Number of differing cells; infinity when the shapes differ.
  double residual(const Arrow& f, const Arrow& g) const;
  // Exact; the tolerance is ignored.
  bool equal(const Arrow& f, const Arrow& g, Tolerance = {}) const { return f == g; }
  std::string describe(const Arrow& f) const { return describe_relation(f); }
  std::string describe_object(const Object& x) const { return describe_carrier(x); }

 private:
  void expect_algebra(const Arrow& f, std::string_view op) const;
  AlgebraPtr algebra_;
};

static_assert(CMonCategory<RelCategory>);

// Random carriers "v0".."v{k-1}" with k in [0, max_carrier]; values uniform
// over the lattice, or bottom with probability `sparsity`.
struct RelSampler {
  AlgebraPtr algebra;
  std::size_t max_carrier = 6;
  double sparsity = 0.3;

  Carrier object(Rng& rng) const { return Carrier::indexed(uniform_size(rng, 0, max_carrier), "v"); }
  LRelation arrow(Rng& rng, const Carrier& src, const Carrier& tgt) const;
};

}  // namespace specat

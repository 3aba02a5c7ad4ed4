#include "specat/relcat.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "specat/error.hpp"

namespace specat {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw PreconditionError("carrier: duplicate label '" + l + "'");
}

Carrier Carrier::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return Carrier(std::move(labels));
}

std::size_t Carrier::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UnknownElement("carrier has no element '" + std::string(label) + "'");
}

std::string describe_carrier(const Carrier& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i];
  }
  return out + "}";
}

LRelation::LRelation(AlgebraPtr algebra, Carrier source, Carrier target, std::vector<Element> values)
    : algebra_(std::move(algebra)), source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (!algebra_) throw PreconditionError("relation: no lattice");
  if (values_.size() != source_.size() * target_.size())
    throw PreconditionError("relation: grid has " + std::to_string(values_.size()) + " cells, expected " +
                            std::to_string(target_.size()) + "x" + std::to_string(source_.size()));
  for (auto v : values_)
    if (v >= algebra_->size())
      throw UnknownElement("relation: value index " + std::to_string(v) + " is not an element of lattice '" +
                           algebra_->name() + "'");
}

LRelation LRelation::from_labels(AlgebraPtr algebra, Carrier source, Carrier target,
                                 const std::vector<std::vector<std::string>>& rows) {
  if (rows.size() != target.size())
    throw PreconditionError("relation: " + std::to_string(rows.size()) + " rows for a target of size " +
                            std::to_string(target.size()));
  std::vector<Element> values;
  values.reserve(source.size() * target.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != source.size())
      throw PreconditionError("relation: row " + std::to_string(t) + " has " + std::to_string(rows[t].size()) +
                              " cells, source has " + std::to_string(source.size()));
    for (const auto& l : rows[t]) values.push_back(algebra->index_of(l));
  }
  return LRelation(std::move(algebra), std::move(source), std::move(target), std::move(values));
}

LRelation LRelation::from_pairs(AlgebraPtr algebra, Carrier source, Carrier target,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto rel = lrel_zero(algebra, source, target);
  for (const auto& [t, s] : pairs) rel.set(rel.target().index_of(t), rel.source().index_of(s), algebra->top());
  return rel;
}

void LRelation::set(std::size_t t, std::size_t s, Element v) {
  if (v >= algebra_->size()) throw UnknownElement("relation: value index out of range");
  values_.at(t * source_.size() + s) = v;
}

std::vector<std::pair<std::string, std::string>> LRelation::support() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t t = 0; t < target_.size(); ++t)
    for (std::size_t s = 0; s < source_.size(); ++s)
      if (at(t, s) != algebra_->bottom()) out.emplace_back(target_[t], source_[s]);
  return out;
}

bool operator==(const LRelation& a, const LRelation& b) {
  const bool same_algebra = a.algebra_ == b.algebra_ || (a.algebra_ && b.algebra_ && *a.algebra_ == *b.algebra_);
  return same_algebra && a.source_ == b.source_ && a.target_ == b.target_ && a.values_ == b.values_;
}

namespace {

void expect_same_algebra(const LRelation& a, const LRelation& b, std::string_view op) {
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
    throw TypeMismatch(std::string(op) + ": relations over different lattices ('" + a.algebra()->name() +
                       "' vs '" + b.algebra()->name() + "')");
}

}  // namespace

LRelation lrel_compose(const LRelation& g, const LRelation& f) {
  expect_same_algebra(g, f, "compose");
  if (!(g.source() == f.target()))
    throw TypeMismatch("compose: target " + describe_carrier(f.target()) + " of f does not match source " +
                       describe_carrier(g.source()) + " of g");
  const auto& L = *g.algebra();
  const std::size_t nc = g.target().size(), nb = g.source().size(), na = f.source().size();
  std::vector<LRelation::Element> out(nc * na, L.bottom());
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t b = 0; b < nb; ++b) {
      const auto gcb = g.at(c, b);
      if (gcb == L.bottom()) continue;
      for (std::size_t a = 0; a < na; ++a) {
        auto& cell = out[c * na + a];
        cell = L.join(cell, L.meet(gcb, f.at(b, a)));
      }
    }
  return LRelation(g.algebra(), f.source(), g.target(), std::move(out));
}

LRelation lrel_join(const LRelation& a, const LRelation& b) {
  expect_same_algebra(a, b, "join");
  if (!(a.source() == b.source() && a.target() == b.target()))
    throw TypeMismatch("join: relations are not parallel");
  std::vector<LRelation::Element> out(a.values());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.algebra()->join(out[k], b.values()[k]);
  return LRelation(a.algebra(), a.source(), a.target(), std::move(out));
}

LRelation lrel_zero(const AlgebraPtr& algebra, const Carrier& source, const Carrier& target) {
  return LRelation(algebra, source, target,
                   std::vector<LRelation::Element>(source.size() * target.size(), algebra->bottom()));
}

LRelation lrel_identity(const AlgebraPtr& algebra, const Carrier& carrier) {
  auto id = lrel_zero(algebra, carrier, carrier);
  for (std::size_t i = 0; i < carrier.size(); ++i) id.set(i, i, algebra->top());
  return id;
}

LRelation lrel_converse(const LRelation& f) {
  std::vector<LRelation::Element> out(f.values().size());
  const std::size_t ns = f.source().size(), nt = f.target().size();
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t s = 0; s < ns; ++s) out[s * nt + t] = f.at(t, s);
  return LRelation(f.algebra(), f.target(), f.source(), std::move(out));
}

LRelation lrel_map_values(const LRelation& f, const AlgebraPtr& algebra, const std::vector<LRelation::Element>& map) {
  std::vector<LRelation::Element> out(f.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = map.at(f.values()[k]);
  return LRelation(algebra, f.source(), f.target(), std::move(out));
}

std::string describe_relation(const LRelation& f) {
  std::ostringstream os;
  os << describe_carrier(f.source()) << "->" << describe_carrier(f.target()) << " [";
  for (std::size_t t = 0; t < f.target().size(); ++t) {
    if (t) os << ',';
    os << '[';
    for (std::size_t s = 0; s < f.source().size(); ++s) {
      if (s) os << ',';
      os << f.algebra()->label(f.at(t, s));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RelCategory::RelCategory(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw PreconditionError("RelCategory: no lattice");
}

void RelCategory::expect_algebra(const Arrow& f, std::string_view op) const {
  if (f.algebra() != algebra_ && !(*f.algebra() == *algebra_))
    throw TypeMismatch(std::string(op) + ": relation over lattice '" + f.algebra()->name() +
                       "' used in Rel(" + algebra_->name() + ")");
}

LRelation RelCategory::compose(const Arrow& g, const Arrow& f) const {
  expect_algebra(g, "compose");
  return lrel_compose(g, f);
}

LRelation RelCategory::add(const Arrow& f, const Arrow& g) const {
  expect_algebra(f, "add");
  return lrel_join(f, g);
}

RelCategory::Witness RelCategory::biproduct(const Object& a, const Object& b) const {
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& x : a.labels()) labels.push_back("(1," + x + ")");
  for (const auto& x : b.labels()) labels.push_back("(2," + x + ")");
  Carrier c(std::move(labels));
  auto p1 = lrel_zero(algebra_, c, a);
  auto p2 = lrel_zero(algebra_, c, b);
  for (std::size_t i = 0; i < a.size(); ++i) p1.set(i, i, algebra_->top());
  for (std::size_t j = 0; j < b.size(); ++j) p2.set(j, a.size() + j, algebra_->top());
  auto i1 = lrel_converse(p1);
  auto i2 = lrel_converse(p2);
  return Witness{a, b, std::move(c), std::move(p1), std::move(p2), std::move(i1), std::move(i2)};
}

RelCategory::Witness RelCategory::generalized_biproduct(const Arrow& f, const Arrow& g) const {
  auto is_iso = [&](const Arrow& h) {
    if (!(h.source() == h.target())) return false;
    const auto id = identity(h.source());
    return compose(h, lrel_converse(h)) == id && compose(lrel_converse(h), h) == id;
  };
  if (!is_iso(f)) throw PreconditionError("generalized_biproduct: f is not an isomorphism (f.f^T = f^T.f = id)");
  if (!is_iso(g)) throw PreconditionError("generalized_biproduct: g is not an isomorphism (g.g^T = g^T.g = id)");
  auto w = biproduct(f.source(), g.source());
  w.pi1 = compose(f, w.pi1);
  w.pi2 = compose(g, w.pi2);
  w.iota1 = lrel_converse(w.pi1);
  w.iota2 = lrel_converse(w.pi2);
  return w;
}

double RelCategory::residual(const Arrow& f, const Arrow& g) const {
  if (!(f.source() == g.source() && f.target() == g.target())) return std::numeric_limits<double>::infinity();
  double diff = 0;
  for (std::size_t k = 0; k < f.values().size(); ++k) diff += f.values()[k] != g.values()[k] ? 1.0 : 0.0;
  return diff;
}

LRelation RelSampler::arrow(Rng& rng, const Carrier& src, const Carrier& tgt) const {
  std::vector<LRelation::Element> values(src.size() * tgt.size());
  for (auto& v : values)
    v = coin(rng, sparsity) ? algebra->bottom()
                            : static_cast<LRelation::Element>(uniform_index(rng, algebra->size()));
  return LRelation(algebra, src, tgt, std::move(values));
}

}  // namespace specat

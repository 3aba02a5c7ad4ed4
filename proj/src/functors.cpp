#include "specat/functors.hpp"

namespace specat {

LatticeHom::LatticeHom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw PreconditionError("lattice map: missing lattice");
  if (map_.size() != source_->size())
    throw InvalidStructure("lattice map: " + std::to_string(map_.size()) + " images for " +
                           std::to_string(source_->size()) + " elements of '" + source_->name() + "'");
  for (auto e : map_)
    if (e >= target_->size()) throw UnknownElement("lattice map: image outside '" + target_->name() + "'");
}

LatticeHom LatticeHom::create(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map) {
  LatticeHom h(std::move(source), std::move(target), std::move(map));
  if (auto v = h.violations(1); !v.empty()) throw InvalidStructure(v.front());
  return h;
}

LatticeHom LatticeHom::unchecked(AlgebraPtr source, AlgebraPtr target, std::vector<Element> map) {
  return LatticeHom(std::move(source), std::move(target), std::move(map));
}

LatticeHom LatticeHom::identity(AlgebraPtr algebra) {
  std::vector<Element> map(algebra->size());
  for (Element e = 0; e < map.size(); ++e) map[e] = e;
  return create(algebra, algebra, std::move(map));
}

LatticeHom LatticeHom::threshold(AlgebraPtr source, Element threshold) {
  auto target = share(HeytingTable::boolean());
  std::vector<Element> map(source->size());
  for (Element e = 0; e < map.size(); ++e) map[e] = source->leq(threshold, e) ? target->top() : target->bottom();
  return create(std::move(source), std::move(target), std::move(map));
}

std::vector<std::string> LatticeHom::violations(std::size_t limit) const {
  std::vector<std::string> out;
  const auto& S = *source_;
  const auto& T = *target_;
  auto name = [&](Element x) { return "'" + S.label(x) + "'"; };
  auto img = [&](Element x) { return "'" + T.label(map_[x]) + "'"; };
  auto fail = [&](std::string msg) {
    out.push_back("lattice map " + S.name() + " -> " + T.name() + ": " + std::move(msg));
    return out.size() >= limit;
  };
  if (map_[S.bottom()] != T.bottom() && fail("bottom maps to " + img(S.bottom()))) return out;
  if (map_[S.top()] != T.top() && fail("top maps to " + img(S.top()))) return out;
  for (Element x = 0; x < S.size(); ++x)
    for (Element y = 0; y < S.size(); ++y) {
      if (map_[S.join(x, y)] != T.join(map_[x], map_[y]) &&
          fail("join not preserved at pair (" + name(x) + ", " + name(y) + "): h(x \\/ y) = " + img(S.join(x, y)) +
               ", h(x) \\/ h(y) = '" + T.label(T.join(map_[x], map_[y])) + "'"))
        return out;
      if (map_[S.meet(x, y)] != T.meet(map_[x], map_[y]) &&
          fail("meet not preserved at pair (" + name(x) + ", " + name(y) + "): h(x /\\ y) = " + img(S.meet(x, y)) +
               ", h(x) /\\ h(y) = '" + T.label(T.meet(map_[x], map_[y])) + "'"))
        return out;
    }
  return out;
}

RelFunctor entrywise_functor(const LatticeHom& h) {
  RelFunctor F;
  F.kind = FunctorKind::caller_supplied;
  F.object = [](const Carrier& c) { return c; };
  F.arrow = [h](const LRelation& f) {
    if (f.algebra() != h.source() && !(*f.algebra() == *h.source()))
      throw TypeMismatch("functor: relation over '" + f.algebra()->name() + "', functor expects '" +
                         h.source()->name() + "'");
    return lrel_map_values(f, h.target(), h.map());
  };
  return F;
}

RelFunctor induced_functor(const LatticeHom& h) {
  if (auto v = h.violations(1); !v.empty()) throw InvalidStructure(v.front());
  RelFunctor F = entrywise_functor(h);
  F.kind = FunctorKind::lattice_hom_induced;
  return F;
}

std::vector<LRelation> enumerate_relations(const AlgebraPtr& algebra, const Carrier& source, const Carrier& target) {
  const std::size_t cells = source.size() * target.size();
  std::vector<LRelation::Element> values(cells, 0);
  std::vector<LRelation> out;
  for (;;) {
    out.emplace_back(algebra, source, target, values);
    std::size_t k = 0;
    while (k < cells && ++values[k] == algebra->size()) values[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

LawReport check_cmon_functor_exhaustive(const RelCategory& src, const RelCategory& tgt, const RelFunctor& F,
                                        std::size_t max_carrier) {
  detail::FunctorChecker<RelCategory, RelCategory> check{src, tgt, F, Tolerance::exact(), {}};
  check.zero_object();
  std::vector<Carrier> carriers;
  for (std::size_t n = 0; n <= max_carrier; ++n) carriers.push_back(Carrier::indexed(n, "v"));

  for (const auto& x : carriers)
    for (const auto& y : carriers) {
      check.biproduct(x, y);
      const auto xy = enumerate_relations(src.algebra(), x, y);
      for (const auto& f : xy)
        for (const auto& g : xy) check.parallel(f, g);
      for (const auto& z : carriers) {
        const auto yz = enumerate_relations(src.algebra(), y, z);
        for (const auto& f : xy)
          for (const auto& g : yz) check.composable(f, g);
      }
    }
  return check.report;
}

}  // namespace specat

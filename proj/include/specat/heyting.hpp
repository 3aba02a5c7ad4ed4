#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace specat {

// Finite complete Heyting algebra given by its meet and join tables. The
// implication is derived as a => b = join{ x | x /\ a <= b }.
class HeytingTable {
 public:
  using Element = std::uint32_t;

  // Validates lattice laws, bounds and residuation exhaustively; throws
  // InvalidStructure naming the first violated law and its witness elements.
  static HeytingTable create(std::string name, std::vector<std::string> labels,
                             std::vector<Element> meet, std::vector<Element> join);

  // No validation. Intended for fault injection in law-suite tests.
  static HeytingTable unchecked(std::string name, std::vector<std::string> labels,
                                std::vector<Element> meet, std::vector<Element> join);

  static HeytingTable boolean();
  static HeytingTable b4();
  // k-element chain 0 < 1/(k-1) < ... < 1 with min/max and Goedel implication.
  static HeytingTable chain(std::size_t k);

  // All violated laws, empty when the table is a valid Heyting algebra.
  std::vector<std::string> violations(std::size_t limit = 1) const;

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  Element index_of(std::string_view label) const;  // throws UnknownElement
  bool contains(std::string_view label) const;

  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element implies(Element a, Element b) const { return implies_[a * size() + b]; }
  bool leq(Element x, Element y) const { return meet(x, y) == x; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  const std::vector<Element>& meet_table() const { return meet_; }
  const std::vector<Element>& join_table() const { return join_; }

  friend bool operator==(const HeytingTable& a, const HeytingTable& b) {
    return a.labels_ == b.labels_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  HeytingTable(std::string name, std::vector<std::string> labels, std::vector<Element> meet,
               std::vector<Element> join);
  void derive();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> implies_;
  Element bottom_ = 0;
  Element top_ = 0;
};

using AlgebraPtr = std::shared_ptr<const HeytingTable>;

inline AlgebraPtr share(HeytingTable t) { return std::make_shared<const HeytingTable>(std::move(t)); }

}  // namespace specat

#include "specat/heyting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "specat/error.hpp"

namespace specat {

namespace {

using Element = HeytingTable::Element;

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }

}  // namespace

HeytingTable::HeytingTable(std::string name, std::vector<std::string> labels, std::vector<Element> meet,
                           std::vector<Element> join)
    : name_(std::move(name)), labels_(std::move(labels)), meet_(std::move(meet)), join_(std::move(join)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidStructure("lattice '" + name_ + "': no elements");
  if (meet_.size() != n * n || join_.size() != n * n)
    throw InvalidStructure("lattice '" + name_ + "': meet/join tables must be " + std::to_string(n) + "x" +
                           std::to_string(n));
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InvalidStructure("lattice '" + name_ + "': duplicate element '" + l + "'");
  for (std::size_t k = 0; k < n * n; ++k)
    if (meet_[k] >= n || join_[k] >= n)
      throw InvalidStructure("lattice '" + name_ + "': table entry out of range");
  derive();
}

void HeytingTable::derive() {
  const std::size_t n = size();
  // bottom: unit of join; top: unit of meet. Fall back to 0 when absent so
  // unchecked tables stay usable.
  bottom_ = 0;
  top_ = 0;
  for (Element e = 0; e < n; ++e) {
    bool is_bottom = true;
    bool is_top = true;
    for (Element x = 0; x < n; ++x) {
      is_bottom = is_bottom && join(e, x) == x;
      is_top = is_top && meet(e, x) == x;
    }
    if (is_bottom) bottom_ = e;
    if (is_top) top_ = e;
  }
  implies_.assign(n * n, bottom_);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element acc = bottom_;
      for (Element x = 0; x < n; ++x)
        if (leq(meet(x, a), b)) acc = join(acc, x);
      implies_[a * n + b] = acc;
    }
}

std::vector<std::string> HeytingTable::violations(std::size_t limit) const {
  std::vector<std::string> out;
  const std::size_t n = size();
  auto lbl = [&](Element e) { return "'" + labels_[e] + "'"; };
  auto fail = [&](std::string msg) {
    out.push_back("lattice '" + name_ + "': " + std::move(msg));
    return out.size() >= limit;
  };

  for (Element x = 0; x < n; ++x) {
    if (meet(x, x) != x && fail("meet is not idempotent at x=" + lbl(x))) return out;
    if (join(x, x) != x && fail("join is not idempotent at x=" + lbl(x))) return out;
    for (Element y = 0; y < n; ++y) {
      if (meet(x, y) != meet(y, x) && fail("meet is not commutative at (" + lbl(x) + ", " + lbl(y) + ")"))
        return out;
      if (join(x, y) != join(y, x) && fail("join is not commutative at (" + lbl(x) + ", " + lbl(y) + ")"))
        return out;
      if (meet(x, join(x, y)) != x &&
          fail("absorption x /\\ (x \\/ y) = x fails at (" + lbl(x) + ", " + lbl(y) + ")"))
        return out;
      if (join(x, meet(x, y)) != x &&
          fail("absorption x \\/ (x /\\ y) = x fails at (" + lbl(x) + ", " + lbl(y) + ")"))
        return out;
      for (Element z = 0; z < n; ++z) {
        if (meet(meet(x, y), z) != meet(x, meet(y, z)) &&
            fail("meet is not associative at (" + lbl(x) + ", " + lbl(y) + ", " + lbl(z) + ")"))
          return out;
        if (join(join(x, y), z) != join(x, join(y, z)) &&
            fail("join is not associative at (" + lbl(x) + ", " + lbl(y) + ", " + lbl(z) + ")"))
          return out;
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    if (join(bottom_, x) != x && fail("no bottom element (join unit)")) return out;
    if (meet(top_, x) != x && fail("no top element (meet unit)")) return out;
  }

  for (Element x = 0; x < n; ++x)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const bool lhs = leq(meet(x, a), b);
        const bool rhs = leq(x, implies(a, b));
        if (lhs != rhs && fail("residuation (x /\\ a <= b iff x <= a => b) fails at x=" + lbl(x) + ", a=" +
                               lbl(a) + ", b=" + lbl(b)))
          return out;
      }
  return out;
}

HeytingTable HeytingTable::create(std::string name, std::vector<std::string> labels, std::vector<Element> meet,
                                  std::vector<Element> join) {
  HeytingTable t(std::move(name), std::move(labels), std::move(meet), std::move(join));
  if (auto v = t.violations(1); !v.empty()) throw InvalidStructure(v.front());
  return t;
}

HeytingTable HeytingTable::unchecked(std::string name, std::vector<std::string> labels,
                                     std::vector<Element> meet, std::vector<Element> join) {
  return HeytingTable(std::move(name), std::move(labels), std::move(meet), std::move(join));
}

HeytingTable HeytingTable::boolean() { return chain(2); }

HeytingTable HeytingTable::b4() {
  // 0 < a, b < 1 with a, b incomparable; encoded as bit sets {} {a} {b} {a,b}.
  std::vector<std::string> labels{"0", "a", "b", "1"};
  std::vector<Element> meet(16), join(16);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      meet[x * 4 + y] = x & y;
      join[x * 4 + y] = x | y;
    }
  return create("b4", std::move(labels), std::move(meet), std::move(join));
}

HeytingTable HeytingTable::chain(std::size_t k) {
  if (k < 2) throw InvalidStructure("chain lattice needs at least 2 elements");
  std::vector<std::string> labels;
  const std::size_t den = k - 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == 0) {
      labels.emplace_back("0");
    } else if (i == den) {
      labels.emplace_back("1");
    } else {
      const std::size_t g = gcd(i, den);
      labels.push_back(std::to_string(i / g) + "/" + std::to_string(den / g));
    }
  }
  std::vector<Element> meet(k * k), join(k * k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) {
      meet[x * k + y] = std::min(x, y);
      join[x * k + y] = std::max(x, y);
    }
  return create(k == 2 ? "bool" : "chain:" + std::to_string(k), std::move(labels), std::move(meet),
                std::move(join));
}

HeytingTable::Element HeytingTable::index_of(std::string_view label) const {
  for (Element e = 0; e < size(); ++e)
    if (labels_[e] == label) return e;
  throw UnknownElement("unknown element '" + std::string(label) + "' in lattice '" + name_ + "'");
}

bool HeytingTable::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

}  // namespace specat

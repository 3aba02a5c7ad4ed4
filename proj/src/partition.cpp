#include "specat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "specat/error.hpp"

namespace specat {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells) : n_(n), cells_(std::move(cells)) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  cell_of_.assign(n_, unset);
  for (auto& c : cells_) {
    if (c.empty()) throw PreconditionError("partition: empty cell");
    std::sort(c.begin(), c.end());
  }
  std::sort(cells_.begin(), cells_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < cells_.size(); ++k)
    for (auto v : cells_[k]) {
      if (v >= n_) throw PreconditionError("partition: element " + std::to_string(v) + " out of range");
      if (cell_of_[v] != unset)
        throw PreconditionError("partition: element " + std::to_string(v) + " appears in two cells");
      cell_of_[v] = k;
    }
  for (std::size_t v = 0; v < n_; ++v)
    if (cell_of_[v] == unset) throw PreconditionError("partition: element " + std::to_string(v) + " is not covered");
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t v = 0; v < n; ++v) cells[v] = {v};
  return Partition(n, std::move(cells));
}

Partition Partition::single_cell(std::size_t n) {
  if (n == 0) return Partition(0, {});
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Partition(n, {std::move(all)});
}

Partition Partition::from_labels(const std::vector<std::size_t>& cell_id) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < cell_id.size(); ++v) groups[cell_id[v]].push_back(v);
  std::vector<std::vector<std::size_t>> cells;
  cells.reserve(groups.size());
  for (auto& [id, members] : groups) cells.push_back(std::move(members));
  return Partition(cell_id.size(), std::move(cells));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& c : cells_)
    for (auto v : c)
      if (coarser.cell_of(v) != coarser.cell_of(c.front())) return false;
  return true;
}

std::string describe_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.cell_count(); ++k) {
    if (k) out += ",";
    out += "{";
    for (std::size_t i = 0; i < p.cell(k).size(); ++i) {
      if (i) out += ",";
      out += std::to_string(p.cell(k)[i]);
    }
    out += "}";
  }
  return out + "]";
}

Partition weak_components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& linked) {
  // Union-find with path halving; component ids are roots.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && linked(i, j)) {
        const auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::size_t> id(n);
  for (std::size_t v = 0; v < n; ++v) id[v] = find(v);
  return Partition::from_labels(id);
}

}  // namespace specat

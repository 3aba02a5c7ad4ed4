#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace specat {

// Disjoint cover of {0, ..., n-1}. Members are sorted within each cell and
// cells are ordered by their smallest member.
class Partition {
 public:
  Partition() = default;
  // Throws PreconditionError unless `cells` is a disjoint cover by non-empty cells.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells);

  static Partition discrete(std::size_t n);
  static Partition single_cell(std::size_t n);
  // Cells from a per-element cell id (ids need not be contiguous).
  static Partition from_labels(const std::vector<std::size_t>& cell_id);

  std::size_t size() const { return n_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  const std::vector<std::size_t>& cell(std::size_t k) const { return cells_[k]; }
  // Index of the cell containing element v.
  std::size_t cell_of(std::size_t v) const { return cell_of_[v]; }

  // True when every cell of *this lies inside a cell of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_;
};

std::string describe_partition(const Partition& p);

// Weakly connected components of the graph on {0..n-1} with an edge between
// i and j whenever linked(i, j) or linked(j, i).
Partition weak_components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& linked);

}  // namespace specat

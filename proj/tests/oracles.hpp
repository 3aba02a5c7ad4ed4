#pragma once

// Brute-force reference implementations. They share no code with the library.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <vector>

namespace oracle {

using Cells = std::vector<std::vector<std::size_t>>;

inline Cells canonical(Cells cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

// Components of the undirected graph with an edge {i, j} whenever edge(i, j) or edge(j, i).
inline Cells bfs_components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& edge) {
  std::vector<bool> seen(n, false);
  Cells out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> cell;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      cell.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && (edge(v, w) || edge(w, v))) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    out.push_back(std::move(cell));
  }
  return canonical(out);
}

using Adjacency = std::vector<std::vector<int>>;

// Calls fn(block) for every set partition of {0..n-1}, given as a restricted
// growth string (block[v] = index of v's block).
inline void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t used) {
    if (v == n) {
      fn(block);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      block[v] = b;
      rec(v + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    fn(block);
    return;
  }
  block[0] = 0;
  rec(1, 1);
}

inline bool is_equitable(const Adjacency& adj, const std::vector<std::size_t>& block) {
  const std::size_t n = adj.size();
  const std::size_t blocks = n == 0 ? 0 : *std::max_element(block.begin(), block.end()) + 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (block[u] != block[v]) continue;
      for (std::size_t b = 0; b < blocks; ++b) {
        int cu = 0, cv = 0;
        for (std::size_t w = 0; w < n; ++w) {
          if (block[w] != b) continue;
          cu += adj[u][w];
          cv += adj[v][w];
        }
        if (cu != cv) return false;
      }
    }
  return true;
}

inline Cells cells_of(const std::vector<std::size_t>& block) {
  const std::size_t blocks = block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
  Cells out(blocks);
  for (std::size_t v = 0; v < block.size(); ++v) out[block[v]].push_back(v);
  return canonical(out);
}

struct CoarsestSearch {
  Cells coarsest;
  std::size_t candidates = 0;  // equitable partitions with the minimum cell count
  bool all_refine = true;      // every equitable partition refines `coarsest`
};

// Exhaustive search over all set partitions.
inline CoarsestSearch exhaustive_coarsest_equitable(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> equitable;
  for_each_set_partition(n, [&](const std::vector<std::size_t>& block) {
    if (is_equitable(adj, block)) equitable.push_back(block);
  });
  CoarsestSearch out;
  std::size_t best = n + 1;
  for (const auto& b : equitable) {
    const std::size_t k = cells_of(b).size();
    if (k < best) {
      best = k;
      out.coarsest = cells_of(b);
      out.candidates = 1;
    } else if (k == best) {
      ++out.candidates;
    }
  }
  std::vector<std::size_t> coarse_block(n);
  for (std::size_t c = 0; c < out.coarsest.size(); ++c)
    for (auto v : out.coarsest[c]) coarse_block[v] = c;
  for (const auto& b : equitable)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (b[u] == b[v] && coarse_block[u] != coarse_block[v]) out.all_refine = false;
  return out;
}

inline bool connected(const Adjacency& adj) {
  if (adj.empty()) return false;
  return bfs_components(adj.size(), [&](std::size_t i, std::size_t j) { return adj[i][j] != 0; }).size() == 1;
}

// Every connected simple graph on n labelled vertices, as adjacency matrices.
inline std::vector<Adjacency> connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Adjacency> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    Adjacency adj(n, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (1ul << k)) adj[slots[k].first][slots[k].second] = adj[slots[k].second][slots[k].first] = 1;
    if (connected(adj)) out.push_back(std::move(adj));
  }
  return out;
}

}  // namespace oracle

#include "gcvs/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "gcvs/error.hpp"

namespace gcvs {
namespace {

using Mask = std::uint32_t;

void require_exact_size(const Graph& graph, std::size_t vertex_limit) {
  if (graph.vertex_count() > vertex_limit || graph.vertex_count() > 32) {
    fail(ErrorCode::GraphTooLarge, std::to_string(graph.vertex_count()) +
                                       " vertices exceed the exact-solver limit of " +
                                       std::to_string(std::min<std::size_t>(vertex_limit, 32)));
  }
}

// Adjacency as 0-based bitmasks.
std::vector<Mask> adjacency_masks(const Graph& graph) {
  std::vector<Mask> adj(graph.vertex_count(), 0);
  for (const Edge& e : graph.edges()) {
    adj[e.lo - 1] |= Mask{1} << (e.hi - 1);
    adj[e.hi - 1] |= Mask{1} << (e.lo - 1);
  }
  return adj;
}

class Backtracker {
 public:
  Backtracker(const std::vector<Mask>& adj, std::uint32_t palette)
      : adj_(adj), palette_(palette), colors_(adj.size(), 0) {}

  bool solve() { return place(0, 0); }
  const Digits& colors() const { return colors_; }

 private:
  // A vertex may open at most one new color beyond those already used, which
  // never excludes the lexicographically smallest solution.
  bool place(std::size_t v, std::uint32_t used) {
    if (v == adj_.size()) return true;
    std::uint64_t forbidden = 0;
    Mask earlier = adj_[v] & ((Mask{1} << v) - 1);
    while (earlier) {
      const int u = std::countr_zero(earlier);
      earlier &= earlier - 1;
      forbidden |= std::uint64_t{1} << colors_[u];
    }
    const std::uint32_t top = std::min(palette_, used + 1);
    for (std::uint32_t c = 0; c < top; ++c) {
      if (forbidden >> c & 1) continue;
      colors_[v] = c;
      if (place(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::uint32_t palette_;
  Digits colors_;
};

void expand_clique(const std::vector<Mask>& adj, Mask candidates, std::uint32_t size,
                   std::uint32_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + static_cast<std::uint32_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    expand_clique(adj, candidates & adj[v], size + 1, best);
  }
}

}  // namespace

ColoringVerdict check_coloring(const Graph& graph, const Coloring& coloring) {
  if (coloring.size() != graph.vertex_count()) {
    fail(ErrorCode::LengthMismatch, "coloring has " + std::to_string(coloring.size()) +
                                        " digits for " + std::to_string(graph.vertex_count()) +
                                        " vertices");
  }
  for (const Edge& e : graph.edges()) {
    if (coloring.color_of(e.lo) == coloring.color_of(e.hi)) return {false, e};
  }
  return {true, std::nullopt};
}

std::optional<Coloring> find_coloring(const Graph& graph, std::uint32_t palette,
                                      std::size_t vertex_limit) {
  if (palette == 0) fail(ErrorCode::InvalidArgument, "palette must be >= 1");
  require_exact_size(graph, vertex_limit);
  const auto adj = adjacency_masks(graph);
  if (palette < graph.vertex_count() && clique_lower_bound(graph, vertex_limit) > palette) {
    return std::nullopt;
  }
  const std::uint32_t effective = std::min<std::uint32_t>(
      palette, static_cast<std::uint32_t>(graph.vertex_count()));
  Backtracker solver(adj, effective);
  if (!solver.solve()) return std::nullopt;
  return Coloring(solver.colors(), palette);
}

bool is_colorable(const Graph& graph, std::uint32_t palette, std::size_t vertex_limit) {
  if (palette == 0) return false;
  return find_coloring(graph, palette, vertex_limit).has_value();
}

std::uint32_t chromatic_number(const Graph& graph, std::size_t vertex_limit) {
  require_exact_size(graph, vertex_limit);
  for (std::uint32_t n = clique_lower_bound(graph, vertex_limit);; ++n) {
    if (is_colorable(graph, n, vertex_limit)) return n;
  }
}

Coloring dsatur_coloring(const Graph& graph) {
  const std::size_t m = graph.vertex_count();
  std::vector<std::vector<std::size_t>> nbrs(m);
  for (const Edge& e : graph.edges()) {
    nbrs[e.lo - 1].push_back(e.hi - 1);
    nbrs[e.hi - 1].push_back(e.lo - 1);
  }
  constexpr std::uint32_t kUncolored = ~std::uint32_t{0};
  Digits colors(m, kUncolored);
  std::vector<std::vector<bool>> seen(m);  // neighbour colors per vertex
  std::vector<std::size_t> saturation(m, 0);

  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (colors[v] != kUncolored) continue;
      if (pick == m || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && nbrs[v].size() > nbrs[pick].size())) {
        pick = v;
      }
    }
    std::uint32_t c = 0;
    while (c < seen[pick].size() && seen[pick][c]) ++c;
    colors[pick] = c;
    for (std::size_t u : nbrs[pick]) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++saturation[u];
      }
    }
  }
  return Coloring(colors);
}

std::uint32_t brooks_upper_bound(const Graph& graph) {
  const std::size_t m = graph.vertex_count();
  std::vector<std::vector<std::size_t>> nbrs(m + 1);
  for (const Edge& e : graph.edges()) {
    nbrs[e.lo].push_back(e.hi);
    nbrs[e.hi].push_back(e.lo);
  }
  std::vector<bool> visited(m + 1, false);
  std::uint32_t bound = 1;
  for (std::size_t root = 1; root <= m; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> component{root};
    visited[root] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t u : nbrs[component[i]]) {
        if (!visited[u]) {
          visited[u] = true;
          component.push_back(u);
        }
      }
    }
    const std::size_t size = component.size();
    std::size_t degree_sum = 0;
    std::size_t max_deg = 0;
    bool all_degree_two = true;
    for (std::size_t v : component) {
      degree_sum += nbrs[v].size();
      max_deg = std::max(max_deg, nbrs[v].size());
      all_degree_two = all_degree_two && nbrs[v].size() == 2;
    }
    std::size_t local;
    if (degree_sum / 2 == pair_count(size)) {
      local = size;  // complete, including K1
    } else if (all_degree_two && size % 2 == 1) {
      local = 3;  // odd cycle
    } else {
      local = std::max<std::size_t>(max_deg, 1);
    }
    bound = std::max(bound, static_cast<std::uint32_t>(local));
  }
  return bound;
}

std::uint32_t clique_lower_bound(const Graph& graph, std::size_t vertex_limit) {
  require_exact_size(graph, vertex_limit);
  const auto adj = adjacency_masks(graph);
  const std::size_t m = graph.vertex_count();
  const Mask all = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
  std::uint32_t best = 0;
  expand_clique(adj, all, 0, best);
  return best;
}

}  // namespace gcvs

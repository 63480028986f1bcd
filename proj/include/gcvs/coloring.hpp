#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "gcvs/graph.hpp"

namespace gcvs {

/// Vertex limit for the exact (exponential-time) operations.
inline constexpr std::size_t kExactVertexLimit = 24;

struct ColoringVerdict {
  bool valid = true;
  std::optional<Edge> first_violation;  // in canonical edge order
};

/// Proper-coloring test, O(m + |E|).
ColoringVerdict check_coloring(const Graph& graph, const Coloring& coloring);

/// Lexicographically smallest proper coloring with digits in [0, palette),
/// found by backtracking over vertices in index order with ascending colors.
std::optional<Coloring> find_coloring(const Graph& graph, std::uint32_t palette,
                                      std::size_t vertex_limit = kExactVertexLimit);

/// True iff the graph has a proper coloring with at most `palette` colors.
/// A palette of 0 is accepted and always yields false.
bool is_colorable(const Graph& graph, std::uint32_t palette,
                  std::size_t vertex_limit = kExactVertexLimit);

std::uint32_t chromatic_number(const Graph& graph,
                               std::size_t vertex_limit = kExactVertexLimit);

/// Saturation-degree greedy. Ties go to higher degree, then lower index.
Coloring dsatur_coloring(const Graph& graph);

/// Brooks' bound applied per connected component: complete components give
/// their size, odd cycles give 3, everything else its maximum degree (1 when
/// edgeless). The result is the maximum over components.
std::uint32_t brooks_upper_bound(const Graph& graph);

/// Size of a maximum clique.
std::uint32_t clique_lower_bound(const Graph& graph,
                                 std::size_t vertex_limit = kExactVertexLimit);

}  // namespace gcvs

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcvs {

using Bits = std::vector<std::uint8_t>;
using Digits = std::vector<std::uint32_t>;

/// Unordered vertex pair with 1-based endpoints, stored with lo < hi.
struct Edge {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// m(m-1)/2, the number of below-diagonal adjacency entries.
constexpr std::size_t pair_count(std::size_t m) noexcept {
  return m < 2 ? 0 : m * (m - 1) / 2;
}

/// Position of entry a_ij (1-based, i > j) in the row-major below-diagonal
/// order a21, a31, a32, a41, ...
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept {
  return (i - 1) * (i - 2) / 2 + (j - 1);
}

/// m such that pair_count(m) == len, if one exists (m >= 1).
std::optional<std::size_t> triangular_root(std::size_t len) noexcept;

/// Smallest m >= 1 with pair_count(m) >= bit_length.
std::size_t vertices_for_bits(std::size_t bit_length) noexcept;

// Labeled simple undirected graph on vertices 1..m. The below-diagonal bit
// sequence is the canonical form; the edge list is kept alongside it in the
// same order so that edge scans are linear in |E|.
class Graph {
 public:
  /// Validates and builds. Pairs may be given in either orientation.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}
  explicit Graph(std::size_t vertex_count) : Graph(vertex_count, std::span<const Edge>{}) {}

  static Graph from_structure_bits(std::span<const std::uint8_t> bits);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Bits& structure_bits() const noexcept { return bits_; }

  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.bits_ == b.bits_;
  }

 private:
  Graph() = default;
  void rebuild_edges();

  std::size_t vertex_count_ = 1;
  Bits bits_;
  std::vector<Edge> edges_;
};

/// Complete graph K_m.
Graph complete_graph(std::size_t m);
/// Cycle 1-2-...-m-1 (m >= 3).
Graph cycle_graph(std::size_t m);
/// Path 1-2-...-m.
Graph path_graph(std::size_t m);

// Vertex color digits in Z_k; digit i belongs to vertex i+1.
class Coloring {
 public:
  Coloring(Digits digits, std::uint32_t modulus);
  /// Modulus defaults to max digit + 1.
  explicit Coloring(Digits digits);

  std::size_t size() const noexcept { return digits_.size(); }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const Digits& digits() const noexcept { return digits_; }
  std::uint32_t color_of(std::size_t vertex) const { return digits_.at(vertex - 1); }
  std::size_t distinct_count() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Digits digits_;
  std::uint32_t modulus_;
};

struct PaddingInfo {
  std::size_t bit_length = 0;
  std::size_t vertex_count = 1;
  std::size_t pad_count = 0;

  friend bool operator==(const PaddingInfo&, const PaddingInfo&) = default;
};

struct NumberGraph {
  Graph graph;
  PaddingInfo padding;
};

/// Parses a string of '0'/'1' characters. Throws InvalidBitString otherwise.
Bits parse_bit_string(std::string_view text);
std::string to_bit_string(std::span<const std::uint8_t> bits);

/// Encodes a binary number as the graph whose below-diagonal entries are its
/// bits, zero-filling the tail up to the next triangular length.
NumberGraph graph_from_number(std::string_view bits);

/// Inverse of graph_from_number. Throws PaddingMismatch when a padded entry is
/// set, since that can only come from corruption.
std::string number_from_graph(const Graph& graph, const PaddingInfo& padding);

/// Structure bits followed by the m diagonal color digits.
Digits flatten_colored(const Graph& graph, const Coloring& coloring);

std::pair<Graph, Coloring> unflatten_colored(std::span<const std::uint32_t> sequence,
                                             std::size_t vertex_count, std::uint32_t modulus);

std::string to_string(const Edge& edge);

}  // namespace gcvs

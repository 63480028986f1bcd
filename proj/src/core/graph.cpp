#include "gcvs/graph.hpp"

#include <algorithm>
#include <set>

#include "gcvs/error.hpp"

namespace gcvs {

std::optional<std::size_t> triangular_root(std::size_t len) noexcept {
  std::size_t m = 1;
  while (pair_count(m) < len) ++m;
  if (pair_count(m) == len) return m;
  return std::nullopt;
}

std::size_t vertices_for_bits(std::size_t bit_length) noexcept {
  std::size_t m = 1;
  while (pair_count(m) < bit_length) ++m;
  return m;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count), bits_(pair_count(vertex_count), 0) {
  if (vertex_count == 0) fail(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  for (const Edge& e : edges) {
    const std::size_t lo = std::min(e.lo, e.hi);
    const std::size_t hi = std::max(e.lo, e.hi);
    if (lo == 0 || hi > vertex_count) {
      fail(ErrorCode::VertexOutOfRange,
           "edge " + to_string(e) + " outside 1.." + std::to_string(vertex_count));
    }
    if (lo == hi) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(lo));
    auto& bit = bits_[pair_index(hi, lo)];
    if (bit) fail(ErrorCode::DuplicateEdge, "duplicate edge " + to_string(Edge{lo, hi}));
    bit = 1;
  }
  rebuild_edges();
}

Graph Graph::from_structure_bits(std::span<const std::uint8_t> bits) {
  const auto m = triangular_root(bits.size());
  if (!m) {
    fail(ErrorCode::NonTriangularLength,
         std::to_string(bits.size()) + " is not of the form m(m-1)/2");
  }
  Graph g;
  g.vertex_count_ = *m;
  g.bits_.reserve(bits.size());
  for (std::uint8_t b : bits) {
    if (b > 1) fail(ErrorCode::NonBinaryStructureDigit, "structure digit " + std::to_string(b));
    g.bits_.push_back(b);
  }
  g.rebuild_edges();
  return g;
}

void Graph::rebuild_edges() {
  edges_.clear();
  std::size_t p = 0;
  for (std::size_t i = 2; i <= vertex_count_; ++i) {
    for (std::size_t j = 1; j < i; ++j, ++p) {
      if (bits_[p]) edges_.push_back(Edge{j, i});
    }
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u == 0 || v == 0 || u > vertex_count_ || v > vertex_count_) {
    fail(ErrorCode::VertexOutOfRange, "vertex outside graph");
  }
  if (u == v) return false;
  return bits_[pair_index(std::max(u, v), std::min(u, v))] != 0;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 1; u <= vertex_count_; ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::size_t Graph::max_degree() const {
  std::vector<std::size_t> deg(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.lo];
    ++deg[e.hi];
  }
  return *std::max_element(deg.begin(), deg.end());
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 1; u <= vertex_count_; ++u) {
    if (adjacent(u, v)) out.push_back(u);
  }
  return out;
}

Graph complete_graph(std::size_t m) {
  return Graph::from_structure_bits(Bits(pair_count(m), 1));
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) fail(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < m; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, m});
  return Graph(m, edges);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < m; ++v) edges.push_back({v, v + 1});
  return Graph(m, edges);
}

Coloring::Coloring(Digits digits, std::uint32_t modulus)
    : digits_(std::move(digits)), modulus_(modulus) {
  if (modulus_ == 0) fail(ErrorCode::InvalidArgument, "color modulus must be >= 1");
  for (std::uint32_t d : digits_) {
    if (d >= modulus_) {
      fail(ErrorCode::ColorOutOfRange,
           "color " + std::to_string(d) + " not in Z_" + std::to_string(modulus_));
    }
  }
}

Coloring::Coloring(Digits digits)
    : Coloring(digits, digits.empty() ? 1 : *std::max_element(digits.begin(), digits.end()) + 1) {}

std::size_t Coloring::distinct_count() const {
  return std::set<std::uint32_t>(digits_.begin(), digits_.end()).size();
}

Bits parse_bit_string(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      fail(ErrorCode::InvalidBitString,
           "position " + std::to_string(i) + ": expected '0' or '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string to_bit_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

NumberGraph graph_from_number(std::string_view bits) {
  Bits structure = parse_bit_string(bits);
  const std::size_t m = vertices_for_bits(structure.size());
  PaddingInfo padding{structure.size(), m, pair_count(m) - structure.size()};
  structure.resize(pair_count(m), 0);
  return NumberGraph{Graph::from_structure_bits(structure), padding};
}

std::string number_from_graph(const Graph& graph, const PaddingInfo& padding) {
  if (padding.vertex_count != graph.vertex_count() ||
      padding.bit_length + padding.pad_count != pair_count(graph.vertex_count())) {
    fail(ErrorCode::PaddingMismatch, "padding record does not describe this graph");
  }
  const Bits& bits = graph.structure_bits();
  for (std::size_t p = padding.bit_length; p < bits.size(); ++p) {
    if (bits[p]) {
      fail(ErrorCode::PaddingMismatch, "padded entry " + std::to_string(p) + " is set");
    }
  }
  return to_bit_string(std::span(bits).first(padding.bit_length));
}

Digits flatten_colored(const Graph& graph, const Coloring& coloring) {
  if (coloring.size() != graph.vertex_count()) {
    fail(ErrorCode::LengthMismatch, "coloring length differs from vertex count");
  }
  Digits out(graph.structure_bits().begin(), graph.structure_bits().end());
  out.insert(out.end(), coloring.digits().begin(), coloring.digits().end());
  return out;
}

std::pair<Graph, Coloring> unflatten_colored(std::span<const std::uint32_t> sequence,
                                             std::size_t vertex_count, std::uint32_t modulus) {
  const std::size_t structure_len = pair_count(vertex_count);
  if (vertex_count == 0 || sequence.size() != structure_len + vertex_count) {
    fail(ErrorCode::LengthMismatch, "sequence length " + std::to_string(sequence.size()) +
                                        " does not match m=" + std::to_string(vertex_count));
  }
  Bits bits;
  bits.reserve(structure_len);
  for (std::size_t p = 0; p < structure_len; ++p) {
    if (sequence[p] > 1) {
      fail(ErrorCode::NonBinaryStructureDigit,
           "structure position " + std::to_string(p) + " holds " + std::to_string(sequence[p]));
    }
    bits.push_back(static_cast<std::uint8_t>(sequence[p]));
  }
  Digits colors(sequence.begin() + structure_len, sequence.end());
  return {Graph::from_structure_bits(bits), Coloring(std::move(colors), modulus)};
}

std::string to_string(const Edge& edge) {
  return "{" + std::to_string(edge.lo) + "," + std::to_string(edge.hi) + "}";
}

}  // namespace gcvs

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcvs/graph.hpp"
#include "gcvs/rng.hpp"

namespace gcvs {

class SecretVector {
 public:
  SecretVector(Digits digits, std::uint32_t modulus);

  const Digits& digits() const noexcept { return digits_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return digits_.size(); }

  friend bool operator==(const SecretVector&, const SecretVector&) = default;

 private:
  Digits digits_;
  std::uint32_t modulus_;
};

struct KghShare {
  std::size_t index = 1;       // 1..threshold
  std::size_t threshold = 2;   // t; all t shares are needed
  std::uint32_t modulus = 2;
  Digits digits;

  friend bool operator==(const KghShare&, const KghShare&) = default;
};

/// (t, t) additive sharing over Z_k: shares 1..t-1 uniform, share t closes
/// the sum. For k = 2 this is a one-time pad.
std::vector<KghShare> kgh_split(const SecretVector& secret, std::size_t threshold,
                                UniformSource& rng);

/// Component-wise sum mod k of any number of shares.
SecretVector kgh_combine(std::span<const KghShare> shares, std::uint32_t modulus);

// Vectors that are never valid secrets. Combining shares into a member means
// something was tampered with.
class ExclusionSet {
 public:
  using Predicate = std::function<bool(std::span<const std::uint32_t>)>;

  ExclusionSet() = default;
  explicit ExclusionSet(std::set<Digits> vectors) : vectors_(std::move(vectors)) {}
  explicit ExclusionSet(Predicate predicate) : predicate_(std::move(predicate)) {}

  bool contains(std::span<const std::uint32_t> digits) const;

 private:
  std::set<Digits> vectors_;
  Predicate predicate_;
};

std::vector<KghShare> kghe_split(const SecretVector& secret, std::size_t threshold,
                                 const ExclusionSet& excluded, UniformSource& rng);
SecretVector kghe_combine(std::span<const KghShare> shares, std::uint32_t modulus,
                          const ExclusionSet& excluded);

// One participant's share of a colored graph. The structure part shares the
// below-diagonal adjacency bits over Z_ks (ks = 2 normally, ks = k in
// uniform-modulus mode); the color part shares the diagonal over Z_k.
struct ColoredShare {
  std::size_t index = 1;
  std::size_t threshold = 2;
  std::size_t vertex_count = 1;
  std::size_t extension = 0;
  std::uint32_t palette = 1;
  std::uint32_t modulus = 2;
  std::uint32_t structure_modulus = 2;
  Digits structure;
  Digits colors;

  friend bool operator==(const ColoredShare&, const ColoredShare&) = default;
};

struct ColoredSplitOptions {
  std::size_t extension = 0;
  bool uniform_modulus = false;
};

std::vector<ColoredShare> split_colored_graph(const Graph& graph, const Coloring& coloring,
                                              std::size_t threshold, std::uint32_t modulus,
                                              UniformSource& rng,
                                              const ColoredSplitOptions& options = {});

struct CombinedGraph {
  Graph graph;
  Coloring coloring;
};

/// Sums the structure parts mod ks and the color parts mod k. Any non-empty
/// subset combines; shapes and parameters must agree. In uniform-modulus mode
/// a combined structure digit outside {0,1} throws NonBinaryStructureDigit.
CombinedGraph combine_colored_graph(std::span<const ColoredShare> shares, std::uint32_t modulus);

std::string serialize_share(const ColoredShare& share);
ColoredShare parse_share(std::string_view text);

}  // namespace gcvs

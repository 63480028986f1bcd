#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gcvs {

// Color class sizes x_1..x_n of a vertex partition. Stored non-increasing;
// the exponent sum is symmetric so order carries no information.
class ColorPartition {
 public:
  explicit ColorPartition(std::vector<std::uint32_t> parts);
  ColorPartition(std::initializer_list<std::uint32_t> parts)
      : ColorPartition(std::vector<std::uint32_t>(parts)) {}

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::uint32_t vertex_total() const noexcept { return total_; }
  std::uint32_t class_count() const noexcept {
    return static_cast<std::uint32_t>(parts_.size());
  }

  friend bool operator==(const ColorPartition&, const ColorPartition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t total_ = 0;
};

/// A graph count represented exactly as 2^exponent.
struct CountExponent {
  std::uint64_t exponent = 0;

  friend bool operator==(const CountExponent&, const CountExponent&) = default;
  friend auto operator<=>(const CountExponent&, const CountExponent&) = default;
};

/// All labeled graphs on V vertices: 2^(V(V-1)/2).
CountExponent gamma_exponent(std::uint32_t vertices);

/// Graphs for which the fixed partition is a proper coloring: sum over class
/// pairs i < j of x_i * x_j.
CountExponent partition_exponent(const ColorPartition& partition);

/// Partitions of V into exactly n positive parts, each as a non-increasing
/// sequence, emitted in decreasing lexicographic order.
std::vector<ColorPartition> enumerate_color_partitions(std::uint32_t vertices,
                                                       std::uint32_t classes);

/// Maximum partition_exponent over enumerate_color_partitions(V, n).
CountExponent gamma_n_exponent(std::uint32_t vertices, std::uint32_t classes);

/// Exponent form of 2^(V(V-1)/2) >= 2^(V-n) * max_P 2^e(P).
bool check_count_bound(std::uint32_t vertices, std::uint32_t classes);

struct UndetectedBound {
  std::uint32_t y = 0;               // V - n; p_n <= 2^-y
  std::int64_t ratio_exponent = 0;   // log2 of Gamma(V,n) / Gamma(V), exact
};

UndetectedBound undetected_probability_bound(std::uint32_t vertices, std::uint32_t classes);

// Brute-force oracles. They enumerate every labeled graph and therefore only
// accept V <= kOracleVertexLimit.
inline constexpr std::uint32_t kOracleVertexLimit = 6;

/// Graphs on V vertices for which coloring class j with color j is proper.
/// Classes take consecutive vertex ranges.
std::uint64_t oracle_count_partition_proper(std::uint32_t vertices,
                                            const ColorPartition& partition);

/// Graphs on V vertices with chromatic number <= n.
std::uint64_t oracle_count_n_colorable(std::uint32_t vertices, std::uint32_t classes);

/// Counts symmetric loop-free adjacency relations by choosing each vertex's
/// neighbour set independently and keeping only mutually consistent choices.
std::uint64_t oracle_count_labeled_graphs(std::uint32_t vertices);

// One (V, n) row of the counting table.
struct CountRow {
  std::uint32_t vertices = 0;
  std::uint32_t classes = 0;
  std::uint32_t y = 0;
  std::uint64_t gamma_exp = 0;
  std::uint64_t gamma_n_exp = 0;
  bool bound_holds = false;
  // Enumeration checks for V <= 6: every partition count equals 2^e(P), the
  // labeled-graph count equals 2^gamma_exp, and the n-colorable count is at
  // least 2^gamma_n_exp.
  std::optional<bool> oracle_pass;
};

std::vector<CountRow> counting_table(std::uint32_t max_vertices, bool run_oracle);
std::string counting_csv(const std::vector<CountRow>& rows, bool with_oracle);

}  // namespace gcvs

#include "gcvs/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "gcvs/coloring.hpp"
#include "gcvs/error.hpp"
#include "gcvs/graph.hpp"

namespace gcvs {
namespace {

void require_classes(std::uint32_t vertices, std::uint32_t classes) {
  if (classes < 1 || classes > vertices) {
    fail(ErrorCode::InvalidArgument, "need 1 <= n <= V, got V=" + std::to_string(vertices) +
                                         " n=" + std::to_string(classes));
  }
}

void require_oracle_size(std::uint32_t vertices) {
  if (vertices > kOracleVertexLimit) {
    fail(ErrorCode::TooLargeForOracle,
         "enumeration oracle limited to V <= " + std::to_string(kOracleVertexLimit));
  }
  if (vertices == 0) fail(ErrorCode::InvalidArgument, "V must be >= 1");
}

}  // namespace

ColorPartition::ColorPartition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorCode::InvalidArgument, "partition needs at least one class");
  for (std::uint32_t x : parts_) {
    if (x == 0) fail(ErrorCode::InvalidArgument, "degenerate partition with an empty class");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

CountExponent gamma_exponent(std::uint32_t vertices) {
  if (vertices == 0) fail(ErrorCode::InvalidArgument, "V must be >= 1");
  return {pair_count(vertices)};
}

CountExponent partition_exponent(const ColorPartition& partition) {
  const auto& x = partition.parts();
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) e += std::uint64_t{x[i]} * x[j];
  }
  return {e};
}

std::vector<ColorPartition> enumerate_color_partitions(std::uint32_t vertices,
                                                       std::uint32_t classes) {
  require_classes(vertices, classes);
  std::vector<ColorPartition> out;
  std::vector<std::uint32_t> parts;
  // Fill `remaining` into `slots` parts, each at most `cap`.
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> fill =
      [&](std::uint32_t remaining, std::uint32_t slots, std::uint32_t cap) {
        if (slots == 0) {
          if (remaining == 0) out.emplace_back(parts);
          return;
        }
        const std::uint32_t hi = std::min(cap, remaining - (slots - 1));
        const std::uint32_t lo = (remaining + slots - 1) / slots;
        for (std::uint32_t x = hi; x >= lo && x >= 1; --x) {
          parts.push_back(x);
          fill(remaining - x, slots - 1, x);
          parts.pop_back();
        }
      };
  fill(vertices, classes, vertices);
  return out;
}

CountExponent gamma_n_exponent(std::uint32_t vertices, std::uint32_t classes) {
  CountExponent best{0};
  for (const auto& p : enumerate_color_partitions(vertices, classes)) {
    best = std::max(best, partition_exponent(p));
  }
  return best;
}

bool check_count_bound(std::uint32_t vertices, std::uint32_t classes) {
  require_classes(vertices, classes);
  const std::uint64_t y = vertices - classes;
  return gamma_exponent(vertices).exponent >= y + gamma_n_exponent(vertices, classes).exponent;
}

UndetectedBound undetected_probability_bound(std::uint32_t vertices, std::uint32_t classes) {
  require_classes(vertices, classes);
  const auto all = static_cast<std::int64_t>(gamma_exponent(vertices).exponent);
  const auto colorable = static_cast<std::int64_t>(gamma_n_exponent(vertices, classes).exponent);
  return {vertices - classes, colorable - all};
}

std::uint64_t oracle_count_partition_proper(std::uint32_t vertices,
                                            const ColorPartition& partition) {
  require_oracle_size(vertices);
  if (partition.vertex_total() != vertices) {
    fail(ErrorCode::InvalidArgument, "partition does not sum to V");
  }
  std::vector<std::uint32_t> color_of(vertices + 1);
  std::uint32_t v = 1;
  for (std::uint32_t j = 0; j < partition.class_count(); ++j) {
    for (std::uint32_t r = 0; r < partition.parts()[j]; ++r) color_of[v++] = j;
  }
  // Positions whose endpoints share a class must be absent.
  std::uint64_t forbidden = 0;
  for (std::uint32_t i = 2; i <= vertices; ++i) {
    for (std::uint32_t j = 1; j < i; ++j) {
      if (color_of[i] == color_of[j]) forbidden |= std::uint64_t{1} << pair_index(i, j);
    }
  }
  const std::uint64_t graphs = std::uint64_t{1} << pair_count(vertices);
  std::uint64_t count = 0;
  for (std::uint64_t g = 0; g < graphs; ++g) count += (g & forbidden) == 0 ? 1 : 0;
  return count;
}

std::uint64_t oracle_count_n_colorable(std::uint32_t vertices, std::uint32_t classes) {
  require_oracle_size(vertices);
  if (classes == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const std::size_t len = pair_count(vertices);
  Bits bits(len);
  std::uint64_t count = 0;
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << len); ++g) {
    for (std::size_t p = 0; p < len; ++p) bits[p] = (g >> p) & 1;
    if (is_colorable(Graph::from_structure_bits(bits), classes)) ++count;
  }
  return count;
}

std::uint64_t oracle_count_labeled_graphs(std::uint32_t vertices) {
  require_oracle_size(vertices);
  // neighbours[v] is a V-bit set; vertex v may not list itself, and whenever
  // both endpoints are decided the two choices must agree.
  std::vector<std::uint32_t> neighbours(vertices, 0);
  std::function<std::uint64_t(std::uint32_t)> extend = [&](std::uint32_t v) -> std::uint64_t {
    if (v == vertices) return 1;
    std::uint64_t total = 0;
    for (std::uint32_t set = 0; set < (1u << vertices); ++set) {
      if (set >> v & 1) continue;
      bool consistent = true;
      for (std::uint32_t u = 0; u < v && consistent; ++u) {
        consistent = ((set >> u) & 1) == ((neighbours[u] >> v) & 1);
      }
      if (!consistent) continue;
      neighbours[v] = set;
      total += extend(v + 1);
    }
    return total;
  };
  return extend(0);
}

std::vector<CountRow> counting_table(std::uint32_t max_vertices, bool run_oracle) {
  if (max_vertices == 0) fail(ErrorCode::InvalidArgument, "max V must be >= 1");
  std::vector<CountRow> rows;
  for (std::uint32_t v = 1; v <= max_vertices; ++v) {
    const bool oracle_row = run_oracle && v <= kOracleVertexLimit;
    const std::uint64_t all_graphs = oracle_row ? oracle_count_labeled_graphs(v) : 0;
    for (std::uint32_t n = 1; n <= v; ++n) {
      CountRow row;
      row.vertices = v;
      row.classes = n;
      row.y = v - n;
      row.gamma_exp = gamma_exponent(v).exponent;
      row.gamma_n_exp = gamma_n_exponent(v, n).exponent;
      row.bound_holds = check_count_bound(v, n);
      if (oracle_row) {
        bool pass = all_graphs == (std::uint64_t{1} << row.gamma_exp);
        for (const auto& p : enumerate_color_partitions(v, n)) {
          pass = pass && oracle_count_partition_proper(v, p) ==
                             (std::uint64_t{1} << partition_exponent(p).exponent);
        }
        pass = pass && oracle_count_n_colorable(v, n) >= (std::uint64_t{1} << row.gamma_n_exp);
        row.oracle_pass = pass;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string counting_csv(const std::vector<CountRow>& rows, bool with_oracle) {
  std::string out = "V,n,y,gamma_exp,gamma_n_exp,bound_holds";
  out += with_oracle ? ",oracle\n" : "\n";
  for (const CountRow& r : rows) {
    out += std::to_string(r.vertices) + "," + std::to_string(r.classes) + "," +
           std::to_string(r.y) + "," + std::to_string(r.gamma_exp) + "," +
           std::to_string(r.gamma_n_exp) + "," + (r.bound_holds ? "true" : "false");
    if (with_oracle) out += r.oracle_pass ? (*r.oracle_pass ? ",PASS" : ",FAIL") : ",-";
    out += "\n";
  }
  return out;
}

}  // namespace gcvs

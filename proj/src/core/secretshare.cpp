#include "gcvs/secretshare.hpp"

#include <algorithm>
#include <charconv>

#include "gcvs/checkdigit.hpp"
#include "gcvs/error.hpp"

namespace gcvs {
namespace {

constexpr std::string_view kShareMagic = "GCVS1";

void check_domain(std::span<const std::uint32_t> digits, std::uint32_t modulus) {
  for (std::uint32_t d : digits) {
    if (d >= modulus) {
      fail(ErrorCode::ColorOutOfRange,
           "digit " + std::to_string(d) + " outside Z_" + std::to_string(modulus));
    }
  }
}

// s - sum(others) over Z_k.
Digits close_sum(std::span<const std::uint32_t> secret, const std::vector<Digits>& others,
                 std::uint32_t modulus) {
  Digits closing(secret.begin(), secret.end());
  for (const Digits& other : others) {
    for (std::size_t i = 0; i < closing.size(); ++i) {
      closing[i] = (closing[i] + modulus - other[i]) % modulus;
    }
  }
  return closing;
}

std::vector<Digits> additive_split(std::span<const std::uint32_t> secret, std::size_t threshold,
                                   std::uint32_t modulus, UniformSource& rng) {
  if (threshold < 2) fail(ErrorCode::InvalidArgument, "threshold must be >= 2");
  if (modulus < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  std::vector<Digits> parts(threshold - 1, Digits(secret.size()));
  for (Digits& part : parts) {
    for (auto& d : part) d = rng.below(modulus);
  }
  parts.push_back(close_sum(secret, parts, modulus));
  return parts;
}

std::uint64_t read_decimal(std::string_view text, std::size_t line, std::string_view field) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || (text.size() > 1 && text[0] == '0') || ec != std::errc{} ||
      ptr != text.data() + text.size()) {
    fail(ErrorCode::Malformed, "line " + std::to_string(line) + ": field " + std::string(field) +
                                   " is not a decimal");
  }
  return value;
}

// Reads "k1=v1  k2=v2 ..." with the exact keys in order.
std::vector<std::uint64_t> read_fields(std::string_view line, std::size_t line_no,
                                       std::initializer_list<std::string_view> keys) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  for (auto key = keys.begin(); key != keys.end(); ++key) {
    if (key != keys.begin()) {
      if (line.substr(pos, 2) != "  ") {
        fail(ErrorCode::Malformed, "line " + std::to_string(line_no) +
                                       ": expected two spaces before " + std::string(*key));
      }
      pos += 2;
    }
    if (line.substr(pos, key->size()) != *key || line.substr(pos + key->size(), 1) != "=") {
      fail(ErrorCode::Malformed,
           "line " + std::to_string(line_no) + ": expected field " + std::string(*key));
    }
    pos += key->size() + 1;
    std::size_t end = std::min(line.find(' ', pos), line.size());
    values.push_back(read_decimal(line.substr(pos, end - pos), line_no, *key));
    pos = end;
  }
  if (pos != line.size()) {
    fail(ErrorCode::Malformed, "line " + std::to_string(line_no) + ": unexpected trailing text");
  }
  return values;
}

}  // namespace

SecretVector::SecretVector(Digits digits, std::uint32_t modulus)
    : digits_(std::move(digits)), modulus_(modulus) {
  if (modulus_ < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  check_domain(digits_, modulus_);
}

std::vector<KghShare> kgh_split(const SecretVector& secret, std::size_t threshold,
                                UniformSource& rng) {
  auto parts = additive_split(secret.digits(), threshold, secret.modulus(), rng);
  std::vector<KghShare> shares;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    shares.push_back(KghShare{j + 1, threshold, secret.modulus(), std::move(parts[j])});
  }
  return shares;
}

SecretVector kgh_combine(std::span<const KghShare> shares, std::uint32_t modulus) {
  if (shares.empty()) fail(ErrorCode::InvalidArgument, "no shares to combine");
  Digits sum(shares.front().digits.size(), 0);
  for (const KghShare& share : shares) {
    if (share.modulus != modulus) {
      fail(ErrorCode::ModulusMismatch, "share " + std::to_string(share.index) + " is over Z_" +
                                           std::to_string(share.modulus));
    }
    if (share.digits.size() != sum.size()) {
      fail(ErrorCode::LengthMismatch, "share " + std::to_string(share.index) + " has length " +
                                          std::to_string(share.digits.size()));
    }
    check_domain(share.digits, modulus);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + share.digits[i]) % modulus;
  }
  return SecretVector(std::move(sum), modulus);
}

bool ExclusionSet::contains(std::span<const std::uint32_t> digits) const {
  if (predicate_ && predicate_(digits)) return true;
  return vectors_.count(Digits(digits.begin(), digits.end())) != 0;
}

std::vector<KghShare> kghe_split(const SecretVector& secret, std::size_t threshold,
                                 const ExclusionSet& excluded, UniformSource& rng) {
  if (excluded.contains(secret.digits())) {
    fail(ErrorCode::ExcludedSecret, "secret lies in the exclusion set");
  }
  return kgh_split(secret, threshold, rng);
}

SecretVector kghe_combine(std::span<const KghShare> shares, std::uint32_t modulus,
                          const ExclusionSet& excluded) {
  SecretVector combined = kgh_combine(shares, modulus);
  if (excluded.contains(combined.digits())) {
    fail(ErrorCode::ExcludedSecret, "combined shares yield an excluded vector");
  }
  return combined;
}

std::vector<ColoredShare> split_colored_graph(const Graph& graph, const Coloring& coloring,
                                              std::size_t threshold, std::uint32_t modulus,
                                              UniformSource& rng,
                                              const ColoredSplitOptions& options) {
  if (coloring.size() != graph.vertex_count()) {
    fail(ErrorCode::LengthMismatch, "coloring does not pair with the graph");
  }
  check_domain(coloring.digits(), modulus);
  const std::uint32_t ks = options.uniform_modulus ? modulus : 2;
  const Digits structure(graph.structure_bits().begin(), graph.structure_bits().end());
  auto structure_parts = additive_split(structure, threshold, ks, rng);
  auto color_parts = additive_split(coloring.digits(), threshold, modulus, rng);

  std::vector<ColoredShare> shares;
  for (std::size_t j = 0; j < threshold; ++j) {
    ColoredShare s;
    s.index = j + 1;
    s.threshold = threshold;
    s.vertex_count = graph.vertex_count();
    s.extension = options.extension;
    s.palette = static_cast<std::uint32_t>(coloring.distinct_count());
    s.modulus = modulus;
    s.structure_modulus = ks;
    s.structure = std::move(structure_parts[j]);
    s.colors = std::move(color_parts[j]);
    shares.push_back(std::move(s));
  }
  return shares;
}

CombinedGraph combine_colored_graph(std::span<const ColoredShare> shares, std::uint32_t modulus) {
  if (shares.empty()) fail(ErrorCode::ShapeMismatch, "no shares to combine");
  const ColoredShare& first = shares.front();
  const std::size_t len = pair_count(first.vertex_count);
  Digits structure(len, 0);
  Digits colors(first.vertex_count, 0);
  for (const ColoredShare& s : shares) {
    if (s.modulus != modulus) {
      fail(ErrorCode::ModulusMismatch, "share " + std::to_string(s.index) + " is over Z_" +
                                           std::to_string(s.modulus));
    }
    if (s.vertex_count != first.vertex_count || s.threshold != first.threshold ||
        s.structure_modulus != first.structure_modulus || s.extension != first.extension ||
        s.structure.size() != len || s.colors.size() != first.vertex_count) {
      fail(ErrorCode::ShapeMismatch,
           "share " + std::to_string(s.index) + " does not match the shape of share " +
               std::to_string(first.index));
    }
    check_domain(s.structure, s.structure_modulus);
    check_domain(s.colors, modulus);
    for (std::size_t i = 0; i < len; ++i) {
      structure[i] = (structure[i] + s.structure[i]) % s.structure_modulus;
    }
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = (colors[i] + s.colors[i]) % modulus;
  }
  Bits bits(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (structure[i] > 1) {
      fail(ErrorCode::NonBinaryStructureDigit,
           "combined structure digit " + std::to_string(i) + " is " + std::to_string(structure[i]));
    }
    bits[i] = static_cast<std::uint8_t>(structure[i]);
  }
  return CombinedGraph{Graph::from_structure_bits(bits), Coloring(std::move(colors), modulus)};
}

std::string serialize_share(const ColoredShare& s) {
  std::string out(kShareMagic);
  out += "\nindex=" + std::to_string(s.index) + "  t=" + std::to_string(s.threshold);
  out += "\nm=" + std::to_string(s.vertex_count) + "  ext=" + std::to_string(s.extension) +
         "  n=" + std::to_string(s.palette) + "  k=" + std::to_string(s.modulus) +
         "  ks=" + std::to_string(s.structure_modulus);
  out += "\nS=" + format_digits(s.structure, s.structure_modulus);
  out += "\nC=" + format_digits(s.colors, s.modulus);
  out += "\n";
  return out;
}

ColoredShare parse_share(std::string_view text) {
  if (text.find('\r') != std::string_view::npos) {
    fail(ErrorCode::Malformed, "carriage return in share file");
  }
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      fail(ErrorCode::Malformed, "line " + std::to_string(lines.size() + 1) +
                                     ": missing LF terminator");
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() != 5) {
    fail(ErrorCode::Malformed, "expected 5 lines, found " + std::to_string(lines.size()));
  }
  if (lines[0] != kShareMagic) fail(ErrorCode::Malformed, "line 1: expected GCVS1 header");

  ColoredShare s;
  const auto who = read_fields(lines[1], 2, {"index", "t"});
  s.index = who[0];
  s.threshold = who[1];
  if (s.threshold < 2 || s.index < 1 || s.index > s.threshold) {
    fail(ErrorCode::Malformed, "line 2: need t >= 2 and 1 <= index <= t");
  }
  const auto shape = read_fields(lines[2], 3, {"m", "ext", "n", "k", "ks"});
  s.vertex_count = shape[0];
  s.extension = shape[1];
  s.palette = static_cast<std::uint32_t>(shape[2]);
  s.modulus = static_cast<std::uint32_t>(shape[3]);
  s.structure_modulus = static_cast<std::uint32_t>(shape[4]);
  if (s.vertex_count == 0 || s.extension >= s.vertex_count ||
      s.modulus < 2 || s.palette == 0 || s.palette > s.modulus ||
      (s.structure_modulus != 2 && s.structure_modulus != s.modulus)) {
    fail(ErrorCode::Malformed, "line 3: inconsistent share parameters");
  }
  auto digits_line = [&](std::size_t idx, std::string_view prefix, std::uint32_t modulus,
                         std::size_t count) {
    const std::string_view line = lines[idx];
    if (line.substr(0, prefix.size()) != prefix) {
      fail(ErrorCode::Malformed, "line " + std::to_string(idx + 1) + ": missing \"" +
                                     std::string(prefix) + "\" line");
    }
    try {
      return parse_digits(line.substr(prefix.size()), modulus, count);
    } catch (const Error& err) {
      fail(ErrorCode::Malformed, "line " + std::to_string(idx + 1) + ": " + err.what());
    }
  };
  s.structure = digits_line(3, "S=", s.structure_modulus, pair_count(s.vertex_count));
  s.colors = digits_line(4, "C=", s.modulus, s.vertex_count);
  return s;
}

}  // namespace gcvs

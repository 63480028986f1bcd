#include "gcvs/checkdigit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

#include "gcvs/error.hpp"

namespace gcvs {
namespace {

constexpr std::string_view kEnvelopeMagic = "GCCD1";

std::uint64_t parse_decimal(std::string_view text, std::size_t line, std::string_view field) {
  std::uint64_t value = 0;
  const bool leading_zero = text.size() > 1 && text.front() == '0';
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || leading_zero || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::Malformed, "line " + std::to_string(line) + ": field " + std::string(field) +
                                   " is not a decimal: '" + std::string(text) + "'");
  }
  return value;
}

// Splits "a=1  b=2" into the values of the expected keys, in order.
std::vector<std::string_view> parse_fields(std::string_view line, std::size_t line_no,
                                           std::initializer_list<std::string_view> keys) {
  std::vector<std::string_view> values;
  std::size_t pos = 0;
  bool first = true;
  for (std::string_view key : keys) {
    if (!first) {
      if (line.substr(pos, 2) != "  ") {
        fail(ErrorCode::Malformed, "line " + std::to_string(line_no) +
                                       ": expected two spaces before " + std::string(key));
      }
      pos += 2;
    }
    first = false;
    if (line.substr(pos, key.size()) != key || line.substr(pos + key.size(), 1) != "=") {
      fail(ErrorCode::Malformed,
           "line " + std::to_string(line_no) + ": expected field " + std::string(key));
    }
    pos += key.size() + 1;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    values.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  if (pos != line.size()) {
    fail(ErrorCode::Malformed, "line " + std::to_string(line_no) + ": unexpected trailing text");
  }
  return values;
}

std::vector<std::string_view> split_lines(std::string_view text, std::size_t expected) {
  if (text.find('\r') != std::string_view::npos) {
    fail(ErrorCode::Malformed, "carriage return in input; lines must end with LF");
  }
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      fail(ErrorCode::Malformed, "line " + std::to_string(lines.size() + 1) +
                                     ": missing LF terminator");
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() != expected) {
    fail(ErrorCode::Malformed, "expected " + std::to_string(expected) + " lines, found " +
                                   std::to_string(lines.size()));
  }
  return lines;
}

std::string_view prefixed(std::string_view line, std::size_t line_no, std::string_view prefix) {
  if (line.substr(0, prefix.size()) != prefix) {
    fail(ErrorCode::Malformed, "line " + std::to_string(line_no) + ": missing \"" +
                                   std::string(prefix) + "\" line");
  }
  return line.substr(prefix.size());
}

// Structural consistency of an in-memory envelope; returns a reason or "".
std::string envelope_problem(const Envelope& e) {
  for (char c : e.payload) {
    if (c != '0' && c != '1') return "payload contains a non-binary character";
  }
  if (e.vertex_count != vertices_for_bits(e.payload.size()) + e.extension) {
    return "vertex count does not match payload length and extension";
  }
  if (e.check_digits.size() != e.vertex_count) return "check digit count differs from m";
  if (e.modulus == 0 || e.palette == 0 || e.palette > e.modulus) return "need 1 <= n <= k";
  for (std::uint32_t d : e.check_digits) {
    if (d >= e.modulus) return "check digit outside Z_k";
  }
  return {};
}

}  // namespace

std::string_view outcome_name(VerifyOutcome outcome) noexcept {
  switch (outcome) {
    case VerifyOutcome::Positive: return "Positive";
    case VerifyOutcome::ColoringInvalid: return "ColoringInvalid";
    case VerifyOutcome::ChromaticTooLow: return "ChromaticTooLow";
    case VerifyOutcome::Malformed: return "Malformed";
  }
  return "Unknown";
}

Graph extend_graph(const Graph& graph, std::size_t extension) {
  if (extension == 0) return graph;
  Bits bits = graph.structure_bits();
  const std::size_t m = graph.vertex_count();
  // Rows of the new vertices follow the existing rows in canonical order.
  for (std::size_t v = m + 1; v <= m + extension; ++v) {
    bits.push_back(1);
    bits.insert(bits.end(), v - 2, 0);
  }
  return Graph::from_structure_bits(bits);
}

Graph strip_extension(const Graph& extended, std::size_t extension) {
  if (extension == 0) return extended;
  if (extension >= extended.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "extension must leave at least one vertex");
  }
  const std::size_t base = extended.vertex_count() - extension;
  const Bits& bits = extended.structure_bits();
  for (std::size_t v = base + 1; v <= extended.vertex_count(); ++v) {
    for (std::size_t u = 1; u < v; ++u) {
      const bool expected = u == 1;
      if ((bits[pair_index(v, u)] != 0) != expected) {
        fail(ErrorCode::ExtensionPatternMismatch,
             "extension vertex " + std::to_string(v) +
                 (expected ? " lost its edge to vertex 1" : " is adjacent to vertex " + std::to_string(u)));
      }
    }
  }
  return Graph::from_structure_bits(std::span(bits).first(pair_count(base)));
}

Verification check_colored_graph(const Graph& graph, const Coloring& colors) {
  if (colors.size() != graph.vertex_count()) {
    return {VerifyOutcome::Malformed, "coloring length differs from vertex count"};
  }
  if (graph.vertex_count() > kExactVertexLimit) {
    return {VerifyOutcome::Malformed, "graph exceeds the exact-solver vertex limit"};
  }
  const ColoringVerdict verdict = check_coloring(graph, colors);
  if (!verdict.valid) {
    return {VerifyOutcome::ColoringInvalid,
            "adjacent vertices share a color on edge " + to_string(*verdict.first_violation)};
  }
  const auto n = static_cast<std::uint32_t>(colors.distinct_count());
  if (n >= 2 && is_colorable(graph, n - 1)) {
    return {VerifyOutcome::ChromaticTooLow,
            "graph is " + std::to_string(n - 1) + "-colorable but " + std::to_string(n) +
                " colors were used"};
  }
  return {VerifyOutcome::Positive, {}};
}

Graph envelope_graph(const Envelope& envelope) {
  return extend_graph(graph_from_number(envelope.payload).graph, envelope.extension);
}

Envelope encode(std::string_view bits, std::size_t extension,
                std::optional<std::uint32_t> modulus) {
  const Graph graph = extend_graph(graph_from_number(bits).graph, extension);
  if (graph.vertex_count() > kExactVertexLimit) {
    fail(ErrorCode::GraphTooLarge, std::to_string(graph.vertex_count()) +
                                       " vertices exceed the exact-solver limit");
  }
  const std::uint32_t chi = chromatic_number(graph);
  const std::uint32_t k = modulus.value_or(chi);
  if (k < chi) {
    fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(k) +
                                         " is smaller than the chromatic number " +
                                         std::to_string(chi));
  }
  const auto coloring = find_coloring(graph, chi);
  Envelope e;
  e.payload = std::string(bits);
  e.vertex_count = graph.vertex_count();
  e.extension = extension;
  e.palette = chi;
  e.modulus = k;
  e.check_digits = coloring->digits();
  return e;
}

Verification verify(const Envelope& envelope) {
  if (auto problem = envelope_problem(envelope); !problem.empty()) {
    return {VerifyOutcome::Malformed, problem};
  }
  const Coloring colors(envelope.check_digits, envelope.modulus);
  if (colors.distinct_count() != envelope.palette) {
    return {VerifyOutcome::Malformed, "declared n differs from distinct check digits"};
  }
  return check_colored_graph(envelope_graph(envelope), colors);
}

std::string format_digits(std::span<const std::uint32_t> digits, std::uint32_t modulus) {
  std::string out;
  if (modulus <= 10) {
    for (std::uint32_t d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits[i]);
  }
  return out;
}

Digits parse_digits(std::string_view text, std::uint32_t modulus, std::size_t expected_count) {
  Digits digits;
  if (modulus <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') fail(ErrorCode::Malformed, "non-digit character in digit field");
      digits.push_back(static_cast<std::uint32_t>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      digits.push_back(static_cast<std::uint32_t>(parse_decimal(piece, 0, "digit")));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (digits.size() != expected_count) {
    fail(ErrorCode::Malformed, "expected " + std::to_string(expected_count) + " digits, found " +
                                   std::to_string(digits.size()));
  }
  for (std::uint32_t d : digits) {
    if (d >= modulus) {
      fail(ErrorCode::Malformed,
           "digit " + std::to_string(d) + " outside Z_" + std::to_string(modulus));
    }
  }
  return digits;
}

std::string serialize_envelope(const Envelope& e) {
  std::string out;
  out += kEnvelopeMagic;
  out += "\nl=" + std::to_string(e.bit_length());
  out += "\nm=" + std::to_string(e.vertex_count) + "  ext=" + std::to_string(e.extension);
  out += "\nn=" + std::to_string(e.palette) + "  k=" + std::to_string(e.modulus);
  out += "\nD=" + e.payload;
  out += "\nC=" + format_digits(e.check_digits, e.modulus);
  out += "\n";
  return out;
}

Envelope parse_envelope(std::string_view text) {
  const auto lines = split_lines(text, 6);
  if (lines[0] != kEnvelopeMagic) fail(ErrorCode::Malformed, "line 1: expected GCCD1 header");
  Envelope e;
  const auto l = parse_decimal(parse_fields(lines[1], 2, {"l"})[0], 2, "l");
  const auto geometry = parse_fields(lines[2], 3, {"m", "ext"});
  e.vertex_count = parse_decimal(geometry[0], 3, "m");
  e.extension = parse_decimal(geometry[1], 3, "ext");
  const auto palette = parse_fields(lines[3], 4, {"n", "k"});
  e.palette = static_cast<std::uint32_t>(parse_decimal(palette[0], 4, "n"));
  e.modulus = static_cast<std::uint32_t>(parse_decimal(palette[1], 4, "k"));
  if (e.modulus == 0 || e.palette == 0 || e.palette > e.modulus) {
    fail(ErrorCode::Malformed, "line 4: need 1 <= n <= k");
  }
  e.payload = std::string(prefixed(lines[4], 5, "D="));
  if (e.payload.size() != l) {
    fail(ErrorCode::Malformed, "line 5: D has " + std::to_string(e.payload.size()) +
                                   " bits but l=" + std::to_string(l));
  }
  for (char c : e.payload) {
    if (c != '0' && c != '1') fail(ErrorCode::Malformed, "line 5: D must be binary");
  }
  if (e.vertex_count != vertices_for_bits(l) + e.extension) {
    fail(ErrorCode::Malformed, "line 3: m inconsistent with l and ext");
  }
  try {
    e.check_digits = parse_digits(prefixed(lines[5], 6, "C="), e.modulus, e.vertex_count);
  } catch (const Error& err) {
    fail(ErrorCode::Malformed, std::string("line 6: ") + err.what());
  }
  return e;
}

std::string_view tamper_name(TamperKind kind) noexcept {
  switch (kind) {
    case TamperKind::FlipOneBit: return "flip_one_bit";
    case TamperKind::FlipBits: return "flip_bits";
    case TamperKind::ReplaceUniform: return "replace_uniform";
  }
  return "unknown";
}

std::optional<TamperKind> parse_tamper_kind(std::string_view name) noexcept {
  for (auto kind : {TamperKind::FlipOneBit, TamperKind::FlipBits, TamperKind::ReplaceUniform}) {
    if (tamper_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Envelope tamper(const Envelope& envelope, const TamperModel& model, UniformSource& rng) {
  Envelope out = envelope;
  std::string& d = out.payload;
  const std::size_t l = d.size();
  const auto flip = [&d](std::size_t i) { d[i] = d[i] == '0' ? '1' : '0'; };
  switch (model.kind) {
    case TamperKind::FlipOneBit:
      if (l == 0) fail(ErrorCode::PayloadTooShort, "cannot flip a bit of an empty payload");
      flip(rng.below(static_cast<std::uint32_t>(l)));
      break;
    case TamperKind::FlipBits: {
      if (model.bits == 0) fail(ErrorCode::InvalidArgument, "flip_bits needs j >= 1");
      if (model.bits > l) {
        fail(ErrorCode::PayloadTooShort, "cannot flip " + std::to_string(model.bits) +
                                             " distinct bits of a " + std::to_string(l) +
                                             "-bit payload");
      }
      std::vector<std::size_t> order(l);
      std::iota(order.begin(), order.end(), std::size_t{0});
      for (std::size_t r = 0; r < model.bits; ++r) {
        std::swap(order[r], order[r + rng.below(static_cast<std::uint32_t>(l - r))]);
        flip(order[r]);
      }
      break;
    }
    case TamperKind::ReplaceUniform:
      if (l == 0) fail(ErrorCode::PayloadTooShort, "cannot replace an empty payload");
      do {
        for (char& c : d) c = rng.below(2) ? '1' : '0';
      } while (d == envelope.payload);
      break;
  }
  return out;
}

Envelope tamper_check_digits(const Envelope& envelope, UniformSource& rng) {
  if (envelope.modulus < 2 || envelope.check_digits.empty()) {
    fail(ErrorCode::InvalidArgument, "check digits cannot change when k < 2");
  }
  Envelope out = envelope;
  auto& digit = out.check_digits[rng.below(static_cast<std::uint32_t>(out.check_digits.size()))];
  digit = (digit + 1 + rng.below(envelope.modulus - 1)) % envelope.modulus;
  return out;
}

double SweepRecord::tolerance() const {
  if (trials == 0) return 0.0;
  return 3.0 * std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
}

SweepRecord estimate_undetected_rate(const SweepConfig& config) {
  if (config.trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (config.palette < 1 || config.palette > config.vertices) {
    fail(ErrorCode::InvalidArgument, "need 1 <= n <= V");
  }
  if (config.vertices > kExactVertexLimit) {
    fail(ErrorCode::GraphTooLarge, "V exceeds the exact-solver limit");
  }
  const std::size_t len = pair_count(config.vertices);

  auto run_trial = [&](std::uint64_t trial) -> bool {
    SeededStream rng(config.seed, "tamper-sweep/trial", trial);
    Bits bits(len);
    std::uint64_t draws = 0;
    while (true) {
      if (draws++ == config.max_sampling_draws) {
        fail(ErrorCode::SamplingExhausted, "no payload with chromatic number " +
                                               std::to_string(config.palette) + " after " +
                                               std::to_string(config.max_sampling_draws) +
                                               " draws");
      }
      for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
      if (chromatic_number(Graph::from_structure_bits(bits)) == config.palette) break;
    }
    const Envelope sent = encode(to_bit_string(bits));
    const Envelope received = config.tamper_check_digits ? tamper_check_digits(sent, rng)
                                                         : tamper(sent, config.model, rng);
    return verify(received).outcome == VerifyOutcome::Positive;
  };

  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::uint64_t> undetected(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::uint64_t t = id; t < config.trials; t += jobs) undetected[id] += run_trial(t);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& th : threads) th.join();
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SweepRecord r;
  r.vertices = config.vertices;
  r.palette = config.palette;
  r.y = config.vertices - config.palette;
  r.trials = config.trials;
  r.undetected = std::accumulate(undetected.begin(), undetected.end(), std::uint64_t{0});
  r.empirical_rate = static_cast<double>(r.undetected) / static_cast<double>(r.trials);
  r.bound = std::ldexp(1.0, -static_cast<int>(r.y));
  return r;
}

std::string sweep_csv_header() {
  return "V,n,y,trials,undetected_count,empirical_rate,bound_2_pow_neg_y\n";
}

std::string sweep_csv_row(const SweepRecord& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%u,%u,%u,%llu,%llu,%.6f,%.6f\n", r.vertices, r.palette, r.y,
                static_cast<unsigned long long>(r.trials),
                static_cast<unsigned long long>(r.undetected), r.empirical_rate, r.bound);
  return buf;
}

}  // namespace gcvs

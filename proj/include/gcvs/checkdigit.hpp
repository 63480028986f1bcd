#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gcvs/coloring.hpp"
#include "gcvs/graph.hpp"
#include "gcvs/rng.hpp"

namespace gcvs {

// A number D together with its check digits col(D): the minimal coloring of
// the (optionally extended) graph G(D).
struct Envelope {
  std::string payload;            // D as '0'/'1' characters; l = payload.size()
  std::size_t vertex_count = 1;   // m, including extension vertices
  std::size_t extension = 0;
  std::uint32_t palette = 1;      // n, distinct colors used
  std::uint32_t modulus = 1;      // k >= n
  Digits check_digits;

  std::size_t bit_length() const noexcept { return payload.size(); }

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

enum class VerifyOutcome {
  Positive,
  ColoringInvalid,   // check digits are not a proper coloring of G(D')
  ChromaticTooLow,   // G(D') is (n-1)-colorable
  Malformed,
};

std::string_view outcome_name(VerifyOutcome outcome) noexcept;

struct Verification {
  VerifyOutcome outcome = VerifyOutcome::Positive;
  std::string detail;
};

/// Adds `extension` vertices m+1..m+ext, each adjacent to vertex 1 only.
Graph extend_graph(const Graph& graph, std::size_t extension);

/// Removes the last `extension` vertices after checking they follow the
/// extend_graph pattern exactly.
Graph strip_extension(const Graph& extended, std::size_t extension);

/// The two decode tests on an already reconstructed graph, with n taken as
/// the number of distinct digits in `colors`.
Verification check_colored_graph(const Graph& graph, const Coloring& colors);

/// Rebuilds the extended graph an envelope describes from its payload.
Graph envelope_graph(const Envelope& envelope);

Envelope encode(std::string_view bits, std::size_t extension = 0,
                std::optional<std::uint32_t> modulus = std::nullopt);

Verification verify(const Envelope& envelope);

std::string serialize_envelope(const Envelope& envelope);
Envelope parse_envelope(std::string_view text);

/// Digits as written in the C= and S= lines: one character per digit for
/// k <= 10, comma-separated decimals otherwise.
std::string format_digits(std::span<const std::uint32_t> digits, std::uint32_t modulus);
Digits parse_digits(std::string_view text, std::uint32_t modulus, std::size_t expected_count);

enum class TamperKind { FlipOneBit, FlipBits, ReplaceUniform };

struct TamperModel {
  TamperKind kind = TamperKind::FlipOneBit;
  std::size_t bits = 1;  // used by FlipBits
};

std::string_view tamper_name(TamperKind kind) noexcept;
std::optional<TamperKind> parse_tamper_kind(std::string_view name) noexcept;

/// Returns a copy whose payload differs from the original according to the
/// model. Check digits are left untouched.
Envelope tamper(const Envelope& envelope, const TamperModel& model, UniformSource& rng);

/// Replaces one check digit by a different value in Z_k. Outside the usual
/// error model, where check digits travel over a reliable channel.
Envelope tamper_check_digits(const Envelope& envelope, UniformSource& rng);

struct SweepConfig {
  std::uint32_t vertices = 6;
  std::uint32_t palette = 3;  // target chromatic number of sampled payloads
  std::uint64_t trials = 10000;
  TamperModel model{TamperKind::ReplaceUniform, 1};
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool tamper_check_digits = false;
  std::uint64_t max_sampling_draws = std::uint64_t{1} << 20;  // per trial
};

struct SweepRecord {
  std::uint32_t vertices = 0;
  std::uint32_t palette = 0;
  std::uint32_t y = 0;
  std::uint64_t trials = 0;
  std::uint64_t undetected = 0;
  double empirical_rate = 0.0;
  double bound = 1.0;  // 2^-y

  /// 3 * sqrt(p(1-p)/trials) with p = bound.
  double tolerance() const;
  bool within_bound() const { return empirical_rate <= bound + tolerance(); }
};

/// Monte-Carlo estimate of how often a tampered payload slips through.
/// Payloads are full triangular bit strings for V vertices, rejection-sampled
/// until their graph has chromatic number exactly `palette`. Trial i draws
/// from its own derived stream.
SweepRecord estimate_undetected_rate(const SweepConfig& config);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& record);

}  // namespace gcvs

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcvs/checkdigit.hpp"
#include "gcvs/graph.hpp"
#include "gcvs/rng.hpp"
#include "gcvs/secretshare.hpp"

namespace gcvs {

/// Verification set of shares: indices (1-based) that pool their shares.
class Vsos {
 public:
  explicit Vsos(std::vector<std::size_t> members);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool contains(std::size_t index) const;
  /// "1+3+4"
  std::string label() const;

  friend bool operator==(const Vsos&, const Vsos&) = default;
  friend auto operator<=>(const Vsos&, const Vsos&) = default;

 private:
  std::vector<std::size_t> members_;
};

class VerificationStructure {
 public:
  VerificationStructure(std::size_t threshold, std::vector<Vsos> sets);

  std::size_t threshold() const noexcept { return threshold_; }
  const std::vector<Vsos>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

 private:
  std::size_t threshold_;
  std::vector<Vsos> sets_;
};

/// All C(t,2) pairs.
VerificationStructure pairwise_structure(std::size_t threshold);
/// The single set {1..t}.
VerificationStructure full_structure(std::size_t threshold);
/// One set per non-empty line, indices separated by commas, '+' or spaces.
/// '#' starts a comment.
VerificationStructure parse_structure(std::string_view text, std::size_t threshold);

/// Pools the given shares and runs the check-digit decode tests on the
/// combined colored graph.
VerifyOutcome verify_round(std::span<const ColoredShare> subset, std::uint32_t modulus);

enum class DealStrategy {
  // Redraw all t-1 random shares until every set verifies.
  Rejection,
  // Fix shares one at a time; the color part of each share is solved by
  // enumerating the proper colorings of a set that becomes decidable.
  Sequential,
};

std::string_view strategy_name(DealStrategy strategy) noexcept;
std::optional<DealStrategy> parse_strategy(std::string_view name) noexcept;

struct DealOptions {
  std::uint64_t max_retries = 1'000'000;
  DealStrategy strategy = DealStrategy::Rejection;
  unsigned jobs = 1;
  std::size_t extension = 0;
  bool uniform_modulus = false;
};

struct DealResult {
  std::vector<ColoredShare> shares;
  std::uint64_t attempts = 0;  // 1-based number of the successful attempt
};

/// Builds t shares whose full combination is the secret and whose every
/// verification set passes. Attempt a draws from derive_seed(seed, ..., a);
/// the lowest successful attempt wins regardless of `jobs`.
DealResult deal(const Graph& graph, const Coloring& coloring, std::size_t threshold,
                std::uint32_t modulus, const VerificationStructure& structure,
                std::uint64_t seed, const DealOptions& options = {});

enum class ShareTamperKind { FlipStructureDigit, ReplaceStructureUniform, FlipColorDigit };

std::string_view share_tamper_name(ShareTamperKind kind) noexcept;

/// Modifies one uniformly chosen share in place. Returns its index.
std::size_t tamper_shares(std::vector<ColoredShare>& shares, ShareTamperKind kind,
                          UniformSource& rng);

struct RoundEntry {
  std::size_t round = 1;
  Vsos set;
  VerifyOutcome outcome = VerifyOutcome::Positive;
};

struct RoundReport {
  std::vector<RoundEntry> entries;
  std::size_t rounds = 1;
  // Repeating rounds over fixed shares reruns the same deterministic checks.
  bool fixed_shares = true;

  bool positive() const;
  std::vector<Vsos> failing_sets() const;
  /// "round,vsos,outcome" rows with a header.
  std::string to_csv() const;
  std::string verdict_line() const;
};

/// Runs verify_round over every set, `rounds` times. With a tamper model each
/// round tampers a fresh copy of the shares.
RoundReport verify_structure(std::span<const ColoredShare> shares,
                             const VerificationStructure& structure, std::size_t rounds = 1,
                             std::optional<ShareTamperKind> tamper = std::nullopt,
                             UniformSource* rng = nullptr);

/// Re-deals the secret each round (seeded per round) and verifies.
RoundReport simulate_rounds(const Graph& graph, const Coloring& coloring, std::size_t threshold,
                            std::uint32_t modulus, const VerificationStructure& structure,
                            std::size_t rounds, std::uint64_t seed,
                            const DealOptions& options = {});

/// Combines the full set and checks the result is properly colored.
CombinedGraph recover_secret(std::span<const ColoredShare> shares, std::uint32_t modulus);

struct DetectionStats {
  std::uint64_t trials = 0;
  std::uint64_t detected = 0;
  double rate() const { return trials ? static_cast<double>(detected) / trials : 0.0; }
};

/// Fresh deal per trial, tamper one share, count trials in which at least one
/// set reports non-Positive.
DetectionStats estimate_share_tamper_detection(const Graph& graph, const Coloring& coloring,
                                               std::size_t threshold, std::uint32_t modulus,
                                               const VerificationStructure& structure,
                                               std::uint64_t trials, ShareTamperKind kind,
                                               std::uint64_t seed, const DealOptions& options = {});

// Number verification: the shared secret is G(D) with its minimal coloring.
struct NumberDeal {
  DealResult deal;
  PaddingInfo padding;
  Envelope envelope;  // the encoded secret
};

NumberDeal number_deal(std::string_view bits, std::size_t threshold, std::uint32_t modulus,
                       const VerificationStructure& structure, std::uint64_t seed,
                       const DealOptions& options = {});

RoundReport number_verify(std::span<const ColoredShare> shares,
                          const VerificationStructure& structure);

/// Recovers D of the given bit length from the full share set.
std::string number_recover(std::span<const ColoredShare> shares, std::uint32_t modulus,
                           std::size_t bit_length);

}  // namespace gcvs

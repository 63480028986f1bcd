#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gcvs {

// Source of uniform digits. Sharing and tampering draw all of their
// randomness through this interface so tests can script the stream.
class UniformSource {
 public:
  virtual ~UniformSource() = default;

  /// Uniform value in [0, bound). bound must be >= 1.
  virtual std::uint32_t below(std::uint32_t bound) = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives an independent sub-seed from (seed, label, index). The label keeps
/// unrelated consumers of one user seed apart; the index addresses trial or
/// attempt number so that appending work never perturbs earlier streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index) noexcept;

// Reproducible stream backed by mt19937_64. Bounded draws use rejection on
// the raw 64-bit output so results do not depend on the standard library's
// distribution implementation.
class SeededStream final : public UniformSource {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}
  SeededStream(std::uint64_t seed, std::string_view label, std::uint64_t index)
      : engine_(derive_seed(seed, label, index)) {}

  std::uint32_t below(std::uint32_t bound) override;
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gcvs

#include "gcvs/rng.hpp"

#include <limits>

#include "gcvs/error.hpp"

namespace gcvs {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index) noexcept {
  // FNV-1a over the label, then chained finalizers.
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001B3ull;
  }
  return mix64(mix64(mix64(seed) ^ h) ^ index);
}

std::uint32_t SeededStream::below(std::uint32_t bound) {
  if (bound == 0) fail(ErrorCode::InvalidArgument, "uniform draw with bound 0");
  if (bound == 1) return 0;
  const std::uint64_t range = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::uint32_t>(x % range);
}

}  // namespace gcvs

#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>

#include "gcvs/rng.hpp"

namespace gcvs::testing {

// Replays a fixed list of draws; each must be below the requested bound.
class ScriptedSource final : public UniformSource {
 public:
  ScriptedSource(std::initializer_list<std::uint32_t> draws) : draws_(draws) {}

  std::uint32_t below(std::uint32_t bound) override {
    if (draws_.empty()) throw std::logic_error("scripted source exhausted");
    const std::uint32_t v = draws_.front();
    draws_.pop_front();
    if (v >= bound) throw std::logic_error("scripted draw out of range");
    return v;
  }

  std::size_t remaining() const { return draws_.size(); }

 private:
  std::deque<std::uint32_t> draws_;
};

}  // namespace gcvs::testing

#pragma once

#include <cstdint>
#include <random>

namespace balviz::rng {

// Generator identifier recorded in generated-output metadata. mt19937_64 is
// fully specified by the standard, so a seed reproduces the same stream on
// any conforming implementation; index draws below avoid the
// implementation-defined std distributions for the same reason.
inline constexpr char kRngId[] = "mt19937_64";

// Unbiased draw from [0, bound) via rejection sampling.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace balviz::rng

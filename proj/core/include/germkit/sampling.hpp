#pragma once

#include <cstdint>
#include <random>

#include "germkit/semigroup.hpp"

namespace germkit {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform on [lo, hi] \ {0}.
std::int64_t uniform_nonzero(Rng& rng, std::int64_t lo, std::int64_t hi);

struct WordShape {
  std::size_t max_length = 6;
  std::int64_t max_modulus = 9;  // |m| for s, s^*, e
  std::int64_t max_shift = 12;   // |n| for u
};

Word random_word(Rng& rng, const WordShape& shape = {});

/// normalize(random_word) conditioned on a nonzero result.
Element random_element(Rng& rng, const WordShape& shape = {});

}  // namespace germkit

#include "germkit/sampling.hpp"

namespace germkit {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t uniform_nonzero(Rng& rng, std::int64_t lo, std::int64_t hi) {
  for (;;) {
    std::int64_t v = uniform(rng, lo, hi);
    if (v != 0) return v;
  }
}

Word random_word(Rng& rng, const WordShape& shape) {
  auto length = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(shape.max_length)));
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        w.push_back(Token::s(uniform_nonzero(rng, -shape.max_modulus, shape.max_modulus)));
        break;
      case 1:
        w.push_back(Token::s_star(uniform_nonzero(rng, -shape.max_modulus, shape.max_modulus)));
        break;
      case 2:
        w.push_back(Token::u(uniform(rng, -shape.max_shift, shape.max_shift)));
        break;
      default:
        w.push_back(Token::e(uniform_nonzero(rng, -shape.max_modulus, shape.max_modulus)));
        break;
    }
  }
  return w;
}

Element random_element(Rng& rng, const WordShape& shape) {
  for (;;) {
    Element v = normalize(random_word(rng, shape));
    if (!v.is_zero()) return v;
  }
}

}  // namespace germkit

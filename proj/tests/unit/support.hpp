#pragma once

#include <random>
#include <vector>

#include "hsp/rational.hpp"

namespace hsp::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Random rational p/q with |p| <= span and 1 <= q <= den.
inline Rat random_rat(long span, long den) { return make_rat(uniform(-span, span), uniform(1, den)); }

inline Rat random_positive(long span, long den) { return make_rat(uniform(1, span), uniform(1, den)); }

inline std::vector<Rat> random_positive_point(std::size_t d) {
  std::vector<Rat> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(random_positive(20, 7));
  return x;
}

}  // namespace hsp::testing

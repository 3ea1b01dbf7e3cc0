#ifndef LAGNET_RNG_HPP
#define LAGNET_RNG_HPP

#include <cstdint>

#include "lagnet/rational.hpp"

namespace lagnet {

// splitmix64; fixed algorithm so seeded corpora are reproducible across
// platforms and standard-library versions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, bound); modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Positive rational with numerator and denominator in 1..9.
  Rat small_positive_rat() {
    auto p = 1 + below(9);
    auto q = 1 + below(9);
    return Rat(Int(p), Int(q));
  }

  // Nonzero rational with |numerator|, denominator in 1..9.
  Rat small_nonzero_rat() {
    Rat r = small_positive_rat();
    return below(2) ? r : Rat(-r);
  }
};

}  // namespace lagnet

#endif

#pragma once

#include <cstdint>

namespace phit {

// Deterministic splittable generator (splitmix64 core).  Every random draw in
// the project flows from one user-visible seed through fork(), so identical
// seeds give identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.  Rejection sampling keeps it unbiased.
  uint64_t below(uint64_t bound) {
    uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Independent child stream identified by a tag; the parent is not advanced.
  Rng fork(uint64_t tag) const {
    Rng child(state_ ^ (0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace phit

#ifndef PECC_RNG_HPP
#define PECC_RNG_HPP

#include <cstdint>
#include <random>

namespace pecc {

// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix_seed(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

// Seed for the i-th independent run derived from a base seed. Derivation is
// a pure function of (base, index) so fan-out order does not matter.
inline std::uint64_t run_seed(std::uint64_t base, std::uint64_t index) {
  return mix_seed(base + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// Seedable random source. All draws go through explicit integer-to-double
// mappings on top of mt19937_64, so sequences are identical across standard
// library implementations for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (a, b). Requires a < b.
  double uniform(double a, double b) {
    for (;;) {
      double v = a + unit() * (b - a);
      if (v > a && v < b) return v;  // endpoints excluded (u == 0, rounding)
    }
  }

  // Uniform integer in [0, n). Requires n > 0. Rejection sampling, no
  // modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % n;
    }
  }

  // Child stream seeded from this one. Advances the parent by one draw.
  Rng fork() { return Rng(mix_seed(next_u64())); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pecc

#endif

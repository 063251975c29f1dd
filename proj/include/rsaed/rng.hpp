#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>

#include <gmpxx.h>

namespace rsaed {

// Seeded deterministic PRNG. mt19937_64 output is fixed by the C++ standard,
// so the same seed replays the same stream on any platform; bounded draws use
// mask rejection rather than std::uniform_int_distribution (whose mapping is
// implementation-defined).
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      const std::uint64_t r = gen_() & mask;
      if (r < bound) return r;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  void fill(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
      std::uint64_t w = gen_();
      for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
        out[i] = static_cast<std::uint8_t>(w >> (8 * b));
      }
    }
  }

  // Uniform scalar in [1, n-1], n >= 2. Top-byte mask rejection.
  mpz_class scalar_in(const mpz_class& n) {
    const mpz_class m = n - 2;  // draw in [0, m], return +1
    if (m == 0) return 1;
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    const std::size_t octets = (bits + 7) / 8;
    const std::uint8_t top_mask =
        static_cast<std::uint8_t>(0xFF >> (8 * octets - bits));
    std::vector<std::uint8_t> buf(octets);
    for (;;) {
      fill(buf);
      buf[0] &= top_mask;
      mpz_class r;
      mpz_import(r.get_mpz_t(), buf.size(), 1, 1, 0, 0, buf.data());
      if (r <= m) return r + 1;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rsaed

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsaed/ec.hpp"
#include "rsaed/rng.hpp"

// Additive-homomorphic EC-ElGamal: readings are mapped to points as m*G,
// encrypted as C = (kG, kY + mG), combined by componentwise point addition
// and decrypted at the base station as M = S - xR followed by a bounded
// discrete-log recovery of m from M = m*G.

namespace rsaed::eceg {

struct KeyPair {
  ec::Int x;    // private scalar in [1, n-1]
  ec::Point Y;  // public point x*G
};

// Ciphertext (R, S) held in compressed form; 2 * (1 + field octets) on the
// wire, 42 octets for secp160r1.
struct Ciphertext {
  ec::CompressedPoint R;
  ec::CompressedPoint S;

  std::vector<std::uint8_t> to_octets(const ec::CurveParams& curve) const;
  static Ciphertext from_octets(std::span<const std::uint8_t> octets,
                                const ec::CurveParams& curve);

  friend bool operator==(const Ciphertext& a, const Ciphertext& b) {
    return a.R == b.R && a.S == b.S;
  }
};

// Recovery bounds: max_sum must stay below the group order so the reverse
// mapping is unambiguous.
struct PlaintextBound {
  std::uint64_t max_single = 0;
  std::uint64_t max_sum = 0;
};

void validate_bound(const PlaintextBound& bound, const ec::CurveParams& curve);

KeyPair keygen(const ec::CurveParams& curve, Prng& rng);
KeyPair keypair_from_secret(const ec::CurveParams& curve, const ec::Int& x);

// Plain-path encryption with an injected ephemeral scalar k in [1, n-1].
Ciphertext encrypt(std::uint64_t m, const ec::Point& Y,
                   const ec::CurveParams& curve, const ec::Int& k,
                   const PlaintextBound& bound);

// Fixed-base tables for G and a public key Y; the fast path used by the
// protocol layer. Agrees with the plain path above.
class Encryptor {
 public:
  Encryptor(const ec::CurveParams& curve, const ec::Point& Y);

  Ciphertext encrypt(std::uint64_t m, const ec::Int& k,
                     const PlaintextBound& bound) const;
  Ciphertext encrypt(std::uint64_t m, Prng& rng,
                     const PlaintextBound& bound) const;

  const ec::CurveParams& curve() const { return *curve_; }
  const ec::Point& public_key() const { return y_table_.base(); }
  const ec::FixedBaseTable& g_table() const { return g_table_; }

 private:
  const ec::CurveParams* curve_;
  ec::FixedBaseTable g_table_;
  ec::FixedBaseTable y_table_;
};

// Componentwise point addition after decompression, recompressed.
Ciphertext hom_add(const Ciphertext& c1, const Ciphertext& c2,
                   const ec::CurveParams& curve);

// M = S - xR; the aggregate message point (sum m_i) * G.
ec::Point decrypt(const Ciphertext& c, const ec::Int& x,
                  const ec::CurveParams& curve);

// Baby-step/giant-step discrete log of M base G restricted to
// [0, bound.max_sum]. Throws NotFoundError when no such m exists.
class ReverseMapper {
 public:
  ReverseMapper(const ec::CurveParams& curve, const PlaintextBound& bound);

  std::uint64_t map(const ec::Point& M) const;

 private:
  const ec::CurveParams* curve_;
  std::uint64_t max_sum_;
  std::uint64_t stride_;
  ec::Point giant_step_;  // -stride * G
  std::unordered_map<std::string, std::uint64_t> baby_;
};

std::uint64_t reverse_map(const ec::Point& M, const ec::CurveParams& curve,
                          const PlaintextBound& bound);

}  // namespace rsaed::eceg

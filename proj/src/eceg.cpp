#include "rsaed/eceg.hpp"

#include <cmath>

namespace rsaed::eceg {

namespace {

std::string point_key(const ec::Point& P, const ec::CurveParams& curve) {
  const auto oct = ec::compress(P, curve).to_octets(curve);
  return std::string(oct.begin(), oct.end());
}

void require_scalar(const ec::Int& k, const ec::CurveParams& curve,
                    const char* who) {
  if (k < 1 || k >= curve.n) {
    throw Error(std::string(who) + ": scalar outside [1, n-1]");
  }
}

}  // namespace

std::vector<std::uint8_t> Ciphertext::to_octets(
    const ec::CurveParams& curve) const {
  auto out = R.to_octets(curve);
  const auto s = S.to_octets(curve);
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

Ciphertext Ciphertext::from_octets(std::span<const std::uint8_t> octets,
                                   const ec::CurveParams& curve) {
  const std::size_t w = curve.compressed_octets();
  if (octets.size() != 2 * w) {
    throw LengthMismatchError("ciphertext: wrong octet count");
  }
  Ciphertext c;
  c.R = ec::CompressedPoint::from_octets(octets.first(w), curve);
  c.S = ec::CompressedPoint::from_octets(octets.subspan(w), curve);
  return c;
}

void validate_bound(const PlaintextBound& bound, const ec::CurveParams& curve) {
  if (bound.max_single > bound.max_sum) {
    throw ConfigError("bound: max_single exceeds max_sum");
  }
  if (ec::Int(bound.max_sum) >= curve.n) {
    throw ConfigError("bound: max_sum must be below the group order of " +
                      curve.name);
  }
}

KeyPair keygen(const ec::CurveParams& curve, Prng& rng) {
  return keypair_from_secret(curve, rng.scalar_in(curve.n));
}

KeyPair keypair_from_secret(const ec::CurveParams& curve, const ec::Int& x) {
  require_scalar(x, curve, "keypair_from_secret");
  return KeyPair{x, ec::scalar_mult(x, curve.G, curve)};
}

Ciphertext encrypt(std::uint64_t m, const ec::Point& Y,
                   const ec::CurveParams& curve, const ec::Int& k,
                   const PlaintextBound& bound) {
  if (m > bound.max_single) {
    throw RangeError("encrypt: plaintext exceeds max_single");
  }
  require_scalar(k, curve, "encrypt");
  const ec::Point R = ec::scalar_mult(k, curve.G, curve);
  const ec::Point M = ec::scalar_mult(m, curve.G, curve);
  const ec::Point S = ec::point_add(M, ec::scalar_mult(k, Y, curve), curve);
  return Ciphertext{ec::compress(R, curve), ec::compress(S, curve)};
}

Encryptor::Encryptor(const ec::CurveParams& curve, const ec::Point& Y)
    : curve_(&curve), g_table_(curve.G, curve), y_table_(Y, curve) {}

Ciphertext Encryptor::encrypt(std::uint64_t m, const ec::Int& k,
                              const PlaintextBound& bound) const {
  if (m > bound.max_single) {
    throw RangeError("encrypt: plaintext exceeds max_single");
  }
  require_scalar(k, *curve_, "encrypt");
  const ec::Point R = g_table_.mul(k);
  const ec::Point S =
      point_add(g_table_.mul(m), y_table_.mul(k), *curve_);
  return Ciphertext{ec::compress(R, *curve_), ec::compress(S, *curve_)};
}

Ciphertext Encryptor::encrypt(std::uint64_t m, Prng& rng,
                              const PlaintextBound& bound) const {
  return encrypt(m, rng.scalar_in(curve_->n), bound);
}

Ciphertext hom_add(const Ciphertext& c1, const Ciphertext& c2,
                   const ec::CurveParams& curve) {
  const ec::Point r =
      point_add(decompress(c1.R, curve), decompress(c2.R, curve), curve);
  const ec::Point s =
      point_add(decompress(c1.S, curve), decompress(c2.S, curve), curve);
  return Ciphertext{ec::compress(r, curve), ec::compress(s, curve)};
}

ec::Point decrypt(const Ciphertext& c, const ec::Int& x,
                  const ec::CurveParams& curve) {
  const ec::Point R = decompress(c.R, curve);
  const ec::Point S = decompress(c.S, curve);
  const ec::Point xR = ec::scalar_mult(x, R, curve);
  return point_add(S, point_negate(xR, curve), curve);
}

ReverseMapper::ReverseMapper(const ec::CurveParams& curve,
                             const PlaintextBound& bound)
    : curve_(&curve), max_sum_(bound.max_sum) {
  validate_bound(bound, curve);
  stride_ = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(max_sum_ + 1))));
  if (stride_ == 0) stride_ = 1;
  baby_.reserve(stride_);
  ec::Point walk = ec::Point::infinity();
  for (std::uint64_t j = 0; j < stride_; ++j) {
    baby_.emplace(point_key(walk, curve), j);
    walk = point_add(walk, curve.G, curve);
  }
  giant_step_ = ec::point_negate(
      ec::scalar_mult(ec::Int(stride_), curve.G, curve), curve);
}

std::uint64_t ReverseMapper::map(const ec::Point& M) const {
  if (!curve_->contains(M)) throw OffCurveError("reverse_map: point off curve");
  ec::Point walk = M;
  const std::uint64_t giants = max_sum_ / stride_ + 1;
  for (std::uint64_t i = 0; i < giants; ++i) {
    const auto it = baby_.find(point_key(walk, *curve_));
    if (it != baby_.end()) {
      const std::uint64_t m = i * stride_ + it->second;
      if (m <= max_sum_) return m;
    }
    walk = point_add(walk, giant_step_, *curve_);
  }
  throw NotFoundError("reverse_map: no m in [0, max_sum] with m*G = M");
}

std::uint64_t reverse_map(const ec::Point& M, const ec::CurveParams& curve,
                          const PlaintextBound& bound) {
  return ReverseMapper(curve, bound).map(M);
}

}  // namespace rsaed::eceg

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

// Keyed message authentication for hop-by-hop verification. HMAC-SHA1 keeps
// the historical 20-octet tag size of TinyECC-era motes; it is faithful to
// that stack, not a recommendation. Freshness comes from a per-channel
// counter nonce appended to the message before MAC'ing; nonces are never
// transmitted, both endpoints advance them in lockstep.

namespace rsaed::auth {

inline constexpr std::size_t kDigestOctets = 20;
inline constexpr std::size_t kTruncatedOctets = 10;
inline constexpr std::size_t kKeyOctets = 20;

std::array<std::uint8_t, kDigestOctets> sha1(std::span<const std::uint8_t> msg);
std::array<std::uint8_t, kDigestOctets> hmac_sha1(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg);

// Symmetric key shared by exactly the two endpoints named in key_id.
struct AuthKey {
  std::pair<std::uint16_t, std::uint16_t> key_id{0, 0};  // (node, peer)
  std::array<std::uint8_t, kKeyOctets> bytes{};
};

// Per directed channel counter; incremented exactly once per sent message.
struct Nonce {
  std::uint32_t counter = 0;
};

// Full 20-octet HMAC output or its 10-octet truncation (first octets).
struct Tag {
  std::array<std::uint8_t, kDigestOctets> bytes{};
  bool truncated = false;

  std::size_t size() const { return truncated ? kTruncatedOctets : kDigestOctets; }
  std::span<const std::uint8_t> octets() const { return {bytes.data(), size()}; }

  // Fixed-length comparison over the declared width, no early exit.
  friend bool operator==(const Tag& a, const Tag& b) {
    if (a.truncated != b.truncated) return false;
    unsigned diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff |= a.bytes[i] ^ b.bytes[i];
    return diff == 0;
  }
};

// HMAC over message || 4 big-endian nonce octets.
Tag tag_compute(const AuthKey& key, std::span<const std::uint8_t> message,
                Nonce nonce, bool truncate);

// Recomputes the tag under the receiver's expected nonce. On accept the
// expected nonce advances; on reject it does not.
bool tag_verify(const AuthKey& key, std::span<const std::uint8_t> message,
                Nonce& expected, const Tag& tag);

}  // namespace rsaed::auth

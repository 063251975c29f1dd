#include "rsaed/auth.hpp"

#include <bit>
#include <cstring>

namespace rsaed::auth {

namespace {

// SHA-1 (FIPS 180-1).
struct Sha1 {
  std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                        0xC3D2E1F0u};
  std::uint64_t total = 0;
  std::uint8_t block[64];
  std::size_t fill = 0;

  static std::uint32_t rol(std::uint32_t v, int s) {
    return std::rotl(v, s);
  }

  void compress(const std::uint8_t* p) {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i) {
      w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
             (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    }
    for (int i = 16; i < 80; ++i) {
      w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t t = rol(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rol(b, 30);
      b = a;
      a = t;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  void update(std::span<const std::uint8_t> data) {
    total += data.size();
    for (std::uint8_t byte : data) {
      block[fill++] = byte;
      if (fill == 64) {
        compress(block);
        fill = 0;
      }
    }
  }

  std::array<std::uint8_t, kDigestOctets> finish() {
    const std::uint64_t bits = total * 8;
    const std::uint8_t pad = 0x80;
    update({&pad, 1});
    const std::uint8_t zero = 0x00;
    while (fill != 56) update({&zero, 1});
    std::uint8_t len[8];
    for (int i = 0; i < 8; ++i) len[i] = std::uint8_t(bits >> (56 - 8 * i));
    update({len, 8});
    std::array<std::uint8_t, kDigestOctets> out{};
    for (int i = 0; i < 5; ++i) {
      out[4 * i] = std::uint8_t(h[i] >> 24);
      out[4 * i + 1] = std::uint8_t(h[i] >> 16);
      out[4 * i + 2] = std::uint8_t(h[i] >> 8);
      out[4 * i + 3] = std::uint8_t(h[i]);
    }
    return out;
  }
};

constexpr std::size_t kBlockOctets = 64;

}  // namespace

std::array<std::uint8_t, kDigestOctets> sha1(
    std::span<const std::uint8_t> msg) {
  Sha1 ctx;
  ctx.update(msg);
  return ctx.finish();
}

// RFC 2104: H(K ^ opad || H(K ^ ipad || msg)), key hashed first if long.
std::array<std::uint8_t, kDigestOctets> hmac_sha1(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg) {
  std::array<std::uint8_t, kBlockOctets> k{};
  if (key.size() > kBlockOctets) {
    const auto digest = sha1(key);
    std::memcpy(k.data(), digest.data(), digest.size());
  } else {
    std::memcpy(k.data(), key.data(), key.size());
  }
  std::array<std::uint8_t, kBlockOctets> ipad, opad;
  for (std::size_t i = 0; i < kBlockOctets; ++i) {
    ipad[i] = k[i] ^ 0x36;
    opad[i] = k[i] ^ 0x5C;
  }
  Sha1 inner;
  inner.update(ipad);
  inner.update(msg);
  const auto inner_digest = inner.finish();
  Sha1 outer;
  outer.update(opad);
  outer.update(inner_digest);
  return outer.finish();
}

Tag tag_compute(const AuthKey& key, std::span<const std::uint8_t> message,
                Nonce nonce, bool truncate) {
  std::vector<std::uint8_t> buf(message.begin(), message.end());
  buf.push_back(std::uint8_t(nonce.counter >> 24));
  buf.push_back(std::uint8_t(nonce.counter >> 16));
  buf.push_back(std::uint8_t(nonce.counter >> 8));
  buf.push_back(std::uint8_t(nonce.counter));
  Tag tag;
  tag.bytes = hmac_sha1(key.bytes, buf);
  tag.truncated = truncate;
  if (truncate) {  // keep the stored form canonical
    for (std::size_t i = kTruncatedOctets; i < kDigestOctets; ++i) {
      tag.bytes[i] = 0;
    }
  }
  return tag;
}

bool tag_verify(const AuthKey& key, std::span<const std::uint8_t> message,
                Nonce& expected, const Tag& tag) {
  const Tag local = tag_compute(key, message, expected, tag.truncated);
  if (!(local == tag)) return false;
  expected.counter += 1;
  return true;
}

}  // namespace rsaed::auth

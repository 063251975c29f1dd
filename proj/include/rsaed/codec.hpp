#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rsaed/auth.hpp"
#include "rsaed/ec.hpp"

// Bit-exact wire formats. Every frame starts with a 5-octet TinyOS-style
// header (dest:2 BE, length:1, group:1, type:1); length counts the octets
// after the header. Multi-octet integers are big-endian.
//
//   data packet (0x01):    header | src:1 | part:1+F | tag:10      = 37 for F=20
//   verification (0x02):   header | sender:1 | nlp:1 | len:1 | ids | tag:10
//   aggregate (0x03):      header | sender:1 | part:1+F | tag:10   = 37 for F=20
//   fragment (0x04):       header | index:1 | chunk (<= 33)
//
// F = field octets of the curve (20 for secp160r1). The S-ECEG packet is the
// 62-octet logical payload R | S | tag:20; it travels as exactly two
// fragments, the first carrying 33 payload octets (filling the 39-octet
// frame cap), the second the remaining 29.

namespace rsaed::codec {

inline constexpr std::uint8_t kTypeData = 0x01;
inline constexpr std::uint8_t kTypeVerification = 0x02;
inline constexpr std::uint8_t kTypeAggregate = 0x03;
inline constexpr std::uint8_t kTypeFragment = 0x04;
inline constexpr std::uint8_t kDefaultGroup = 0x22;

inline constexpr std::size_t kHeaderOctets = 5;
inline constexpr std::size_t kMaxFrameOctets = 39;  // TinyOS frame cap
inline constexpr std::size_t kMaxFragmentPayload =
    kMaxFrameOctets - kHeaderOctets - 1;  // 33

struct RsaedDataPacket {
  std::uint16_t dest = 0;
  std::uint8_t group = kDefaultGroup;
  std::uint16_t src = 0;  // widened so overflow is detectable at encode time
  std::vector<std::uint8_t> part;  // one compressed point, R or S
  auth::Tag tag;                   // truncated

  friend bool operator==(const RsaedDataPacket&,
                         const RsaedDataPacket&) = default;
};

// Logical S-ECEG packet; headerless, fragments carry the framing.
struct SecegPacket {
  std::vector<std::uint8_t> r;
  std::vector<std::uint8_t> s;
  auth::Tag tag;  // full 20 octets

  friend bool operator==(const SecegPacket&, const SecegPacket&) = default;
};

struct VerificationMessage {
  std::uint16_t dest = 0;
  std::uint8_t group = kDefaultGroup;
  std::uint16_t sender_id = 0;
  std::uint8_t nlp = 0;                // number of legitimate packets
  std::vector<std::uint16_t> accused;  // node ids, length-prefixed on the wire
  auth::Tag tag;                       // truncated

  friend bool operator==(const VerificationMessage&,
                         const VerificationMessage&) = default;
};

struct AggregateReport {
  std::uint16_t dest = 0;
  std::uint8_t group = kDefaultGroup;
  std::uint16_t sender_id = 0;
  std::vector<std::uint8_t> part;  // compressed aggregated point
  auth::Tag tag;                   // truncated

  friend bool operator==(const AggregateReport&,
                         const AggregateReport&) = default;
};

std::vector<std::uint8_t> encode(const RsaedDataPacket& pkt,
                                 const ec::CurveParams& curve);
RsaedDataPacket decode_data(std::span<const std::uint8_t> bytes,
                            const ec::CurveParams& curve);

std::vector<std::uint8_t> encode(const VerificationMessage& msg);
VerificationMessage decode_verification(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode(const AggregateReport& rep,
                                 const ec::CurveParams& curve);
AggregateReport decode_aggregate(std::span<const std::uint8_t> bytes,
                                 const ec::CurveParams& curve);

// 62-octet logical form (secp160r1) and back.
std::vector<std::uint8_t> seceg_payload(const SecegPacket& pkt,
                                        const ec::CurveParams& curve);
SecegPacket seceg_from_payload(std::span<const std::uint8_t> payload,
                               const ec::CurveParams& curve);

// Exactly two fragment frames, each within the 39-octet cap.
std::array<std::vector<std::uint8_t>, 2> fragment_seceg(
    const SecegPacket& pkt, const ec::CurveParams& curve,
    std::uint16_t dest = 0);

// Requires both fragments (indices 0 and 1, any order); throws
// MissingFragmentError otherwise.
SecegPacket reassemble_seceg(std::span<const std::vector<std::uint8_t>> frags,
                             const ec::CurveParams& curve);

}  // namespace rsaed::codec

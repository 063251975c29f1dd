#include "rsaed/codec.hpp"

#include <algorithm>

namespace rsaed::codec {

namespace {

std::uint8_t narrow_id(std::uint16_t id, const char* field) {
  if (id > 0xFF) {
    throw FieldOverflowError(std::string(field) + " exceeds one octet");
  }
  return static_cast<std::uint8_t>(id);
}

void check_part(std::span<const std::uint8_t> part,
                const ec::CurveParams& curve) {
  if (part.size() != curve.compressed_octets()) {
    throw LengthMismatchError("part: wrong compressed-point width");
  }
  if (part[0] != 0x00 && part[0] != 0x02 && part[0] != 0x03) {
    throw MalformedError("part: bad compression format octet");
  }
}

void put_header(std::vector<std::uint8_t>& out, std::uint16_t dest,
                std::size_t payload_len, std::uint8_t group,
                std::uint8_t type) {
  if (payload_len > 0xFF) throw FieldOverflowError("payload too long");
  out.push_back(std::uint8_t(dest >> 8));
  out.push_back(std::uint8_t(dest));
  out.push_back(std::uint8_t(payload_len));
  out.push_back(group);
  out.push_back(type);
}

struct Header {
  std::uint16_t dest;
  std::uint8_t length;
  std::uint8_t group;
  std::uint8_t type;
};

Header take_header(std::span<const std::uint8_t> bytes,
                   std::uint8_t expected_type) {
  if (bytes.size() < kHeaderOctets) {
    throw LengthMismatchError("frame shorter than header");
  }
  Header h{std::uint16_t((bytes[0] << 8) | bytes[1]), bytes[2], bytes[3],
           bytes[4]};
  if (h.type != expected_type) {
    throw MalformedError("unexpected message type octet");
  }
  if (h.length != bytes.size() - kHeaderOctets) {
    throw LengthMismatchError("header length disagrees with frame size");
  }
  return h;
}

void put_tag(std::vector<std::uint8_t>& out, const auth::Tag& tag,
             bool truncated) {
  if (tag.truncated != truncated) {
    throw MalformedError("tag truncation does not match message type");
  }
  const auto t = tag.octets();
  out.insert(out.end(), t.begin(), t.end());
}

auth::Tag take_tag(std::span<const std::uint8_t> bytes, bool truncated) {
  auth::Tag tag;
  tag.truncated = truncated;
  std::copy(bytes.begin(), bytes.end(), tag.bytes.begin());
  return tag;
}

}  // namespace

std::vector<std::uint8_t> encode(const RsaedDataPacket& pkt,
                                 const ec::CurveParams& curve) {
  check_part(pkt.part, curve);
  std::vector<std::uint8_t> out;
  const std::size_t payload = 1 + pkt.part.size() + auth::kTruncatedOctets;
  out.reserve(kHeaderOctets + payload);
  put_header(out, pkt.dest, payload, pkt.group, kTypeData);
  out.push_back(narrow_id(pkt.src, "src"));
  out.insert(out.end(), pkt.part.begin(), pkt.part.end());
  put_tag(out, pkt.tag, true);
  return out;
}

RsaedDataPacket decode_data(std::span<const std::uint8_t> bytes,
                            const ec::CurveParams& curve) {
  const std::size_t w = curve.compressed_octets();
  const Header h = take_header(bytes, kTypeData);
  if (bytes.size() != kHeaderOctets + 1 + w + auth::kTruncatedOctets) {
    throw LengthMismatchError("data packet: wrong total length");
  }
  RsaedDataPacket pkt;
  pkt.dest = h.dest;
  pkt.group = h.group;
  pkt.src = bytes[kHeaderOctets];
  pkt.part.assign(bytes.begin() + kHeaderOctets + 1,
                  bytes.begin() + kHeaderOctets + 1 + w);
  check_part(pkt.part, curve);
  pkt.tag = take_tag(bytes.subspan(kHeaderOctets + 1 + w), true);
  return pkt;
}

std::vector<std::uint8_t> encode(const VerificationMessage& msg) {
  if (msg.accused.size() > 0xFF) {
    throw FieldOverflowError("accused list exceeds 255 entries");
  }
  std::vector<std::uint8_t> out;
  const std::size_t payload = 3 + msg.accused.size() + auth::kTruncatedOctets;
  out.reserve(kHeaderOctets + payload);
  put_header(out, msg.dest, payload, msg.group, kTypeVerification);
  out.push_back(narrow_id(msg.sender_id, "sender_id"));
  out.push_back(msg.nlp);
  out.push_back(std::uint8_t(msg.accused.size()));
  for (std::uint16_t id : msg.accused) out.push_back(narrow_id(id, "accused id"));
  put_tag(out, msg.tag, true);
  return out;
}

VerificationMessage decode_verification(std::span<const std::uint8_t> bytes) {
  const Header h = take_header(bytes, kTypeVerification);
  if (bytes.size() < kHeaderOctets + 3 + auth::kTruncatedOctets) {
    throw LengthMismatchError("verification message too short");
  }
  VerificationMessage msg;
  msg.dest = h.dest;
  msg.group = h.group;
  msg.sender_id = bytes[kHeaderOctets];
  msg.nlp = bytes[kHeaderOctets + 1];
  const std::size_t count = bytes[kHeaderOctets + 2];
  if (bytes.size() !=
      kHeaderOctets + 3 + count + auth::kTruncatedOctets) {
    throw LengthMismatchError("verification message: wrong list length");
  }
  msg.accused.assign(bytes.begin() + kHeaderOctets + 3,
                     bytes.begin() + kHeaderOctets + 3 + count);
  msg.tag = take_tag(bytes.subspan(kHeaderOctets + 3 + count), true);
  return msg;
}

std::vector<std::uint8_t> encode(const AggregateReport& rep,
                                 const ec::CurveParams& curve) {
  check_part(rep.part, curve);
  std::vector<std::uint8_t> out;
  const std::size_t payload = 1 + rep.part.size() + auth::kTruncatedOctets;
  out.reserve(kHeaderOctets + payload);
  put_header(out, rep.dest, payload, rep.group, kTypeAggregate);
  out.push_back(narrow_id(rep.sender_id, "sender_id"));
  out.insert(out.end(), rep.part.begin(), rep.part.end());
  put_tag(out, rep.tag, true);
  return out;
}

AggregateReport decode_aggregate(std::span<const std::uint8_t> bytes,
                                 const ec::CurveParams& curve) {
  const std::size_t w = curve.compressed_octets();
  const Header h = take_header(bytes, kTypeAggregate);
  if (bytes.size() != kHeaderOctets + 1 + w + auth::kTruncatedOctets) {
    throw LengthMismatchError("aggregate report: wrong total length");
  }
  AggregateReport rep;
  rep.dest = h.dest;
  rep.group = h.group;
  rep.sender_id = bytes[kHeaderOctets];
  rep.part.assign(bytes.begin() + kHeaderOctets + 1,
                  bytes.begin() + kHeaderOctets + 1 + w);
  check_part(rep.part, curve);
  rep.tag = take_tag(bytes.subspan(kHeaderOctets + 1 + w), true);
  return rep;
}

std::vector<std::uint8_t> seceg_payload(const SecegPacket& pkt,
                                        const ec::CurveParams& curve) {
  check_part(pkt.r, curve);
  check_part(pkt.s, curve);
  if (pkt.tag.truncated) {
    throw MalformedError("S-ECEG packets carry the full 20-octet tag");
  }
  std::vector<std::uint8_t> out;
  out.reserve(pkt.r.size() + pkt.s.size() + auth::kDigestOctets);
  out.insert(out.end(), pkt.r.begin(), pkt.r.end());
  out.insert(out.end(), pkt.s.begin(), pkt.s.end());
  put_tag(out, pkt.tag, false);
  return out;
}

SecegPacket seceg_from_payload(std::span<const std::uint8_t> payload,
                               const ec::CurveParams& curve) {
  const std::size_t w = curve.compressed_octets();
  if (payload.size() != 2 * w + auth::kDigestOctets) {
    throw LengthMismatchError("S-ECEG payload: wrong total length");
  }
  SecegPacket pkt;
  pkt.r.assign(payload.begin(), payload.begin() + w);
  pkt.s.assign(payload.begin() + w, payload.begin() + 2 * w);
  check_part(pkt.r, curve);
  check_part(pkt.s, curve);
  pkt.tag = take_tag(payload.subspan(2 * w), false);
  return pkt;
}

std::array<std::vector<std::uint8_t>, 2> fragment_seceg(
    const SecegPacket& pkt, const ec::CurveParams& curve,
    std::uint16_t dest) {
  const auto payload = seceg_payload(pkt, curve);
  if (payload.size() > 2 * kMaxFragmentPayload) {
    throw CodecError("S-ECEG payload does not fit in two fragments");
  }
  const std::size_t first = std::min(payload.size(), kMaxFragmentPayload);
  std::array<std::vector<std::uint8_t>, 2> frags;
  for (int i = 0; i < 2; ++i) {
    const std::size_t lo = i == 0 ? 0 : first;
    const std::size_t hi = i == 0 ? first : payload.size();
    auto& f = frags[i];
    put_header(f, dest, 1 + (hi - lo), kDefaultGroup, kTypeFragment);
    f.push_back(std::uint8_t(i));
    f.insert(f.end(), payload.begin() + lo, payload.begin() + hi);
  }
  return frags;
}

SecegPacket reassemble_seceg(std::span<const std::vector<std::uint8_t>> frags,
                             const ec::CurveParams& curve) {
  if (frags.size() != 2) {
    throw MissingFragmentError("reassemble: need exactly two fragments");
  }
  std::array<const std::vector<std::uint8_t>*, 2> ordered{nullptr, nullptr};
  for (const auto& f : frags) {
    take_header(f, kTypeFragment);
    if (f.size() < kHeaderOctets + 1) {
      throw LengthMismatchError("fragment shorter than index octet");
    }
    const std::uint8_t index = f[kHeaderOctets];
    if (index > 1 || ordered[index] != nullptr) {
      throw MissingFragmentError("reassemble: fragment indices must be {0, 1}");
    }
    ordered[index] = &f;
  }
  if (ordered[0] == nullptr || ordered[1] == nullptr) {
    throw MissingFragmentError("reassemble: fragment indices must be {0, 1}");
  }
  std::vector<std::uint8_t> payload;
  for (const auto* f : ordered) {
    payload.insert(payload.end(), f->begin() + kHeaderOctets + 1, f->end());
  }
  return seceg_from_payload(payload, curve);
}

}  // namespace rsaed::codec

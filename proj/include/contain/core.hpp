#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "contain/encoding.hpp"

namespace contain {

// Magic constant carried inside every plaintext beacon ("CONT"). Successful
// authenticated decryption plus this tag is what makes "I can decrypt it" a
// sound exposure signal.
inline constexpr std::uint32_t kBeaconMagic = 0x434F4E54u;

inline constexpr std::size_t kDeviceIdMaxBytes = 64;
inline constexpr std::size_t kSaltBytes = 16;
inline constexpr std::size_t kTokenBytes = 16;
inline constexpr int kSlotsPerDay = 24;
inline constexpr std::int64_t kSecondsPerDay = 86400;
inline constexpr std::int64_t kSecondsPerSlot = 3600;

// Opaque device/user identifier. Never appears in a Protocol 2 payload and
// only inside the encrypted payload in Protocol 1.
struct DeviceId {
  std::string id;

  DeviceId() = default;
  explicit DeviceId(std::string value) : id(std::move(value)) {
    if (id.empty() || id.size() > kDeviceIdMaxBytes) {
      throw std::invalid_argument("DeviceId must be 1..64 bytes");
    }
  }

  auto operator<=>(const DeviceId&) const = default;
};

struct Timestamp {
  std::int64_t seconds = 0;

  Timestamp() = default;
  explicit Timestamp(std::int64_t s) : seconds(s) {
    if (s < 0) {
      throw std::invalid_argument("Timestamp must be non-negative");
    }
  }

  auto operator<=>(const Timestamp&) const = default;
};

// Hour-of-day slot in [0,24). Days fold at midnight UTC.
inline int slot_of(Timestamp t) {
  return static_cast<int>((t.seconds % kSecondsPerDay) / kSecondsPerSlot);
}

using Salt = std::array<std::uint8_t, kSaltBytes>;

// Protocol 1 plaintext message: id, timestamp, per-emission salt, and the
// protocol magic. `extension` is an opaque application field (e.g. an
// encrypted-at-rest GPS fix) that the library never interprets.
struct PlainBeacon {
  std::uint32_t magic = kBeaconMagic;
  DeviceId user_id;
  Timestamp timestamp;
  Salt salt{};
  Bytes extension;

  bool operator==(const PlainBeacon&) const = default;
};

// Layout: magic(4) || id_len(1) || id || timestamp(8, big-endian) || salt(16)
// || extension bytes (remainder, possibly empty).
inline Bytes encode_plain_beacon(const PlainBeacon& pb) {
  Bytes out;
  out.reserve(4 + 1 + pb.user_id.id.size() + 8 + kSaltBytes + pb.extension.size());
  put_u32_be(out, pb.magic);
  put_u8(out, static_cast<std::uint8_t>(pb.user_id.id.size()));
  out.insert(out.end(), pb.user_id.id.begin(), pb.user_id.id.end());
  put_u64_be(out, static_cast<std::uint64_t>(pb.timestamp.seconds));
  out.insert(out.end(), pb.salt.begin(), pb.salt.end());
  out.insert(out.end(), pb.extension.begin(), pb.extension.end());
  return out;
}

// Returns nullopt for any malformed buffer (wrong magic, bad id length,
// truncation). Never throws on garbage input.
inline std::optional<PlainBeacon> decode_plain_beacon(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  auto magic = r.u32_be();
  if (!magic || *magic != kBeaconMagic) return std::nullopt;
  auto id_len = r.u8();
  if (!id_len || *id_len == 0 || *id_len > kDeviceIdMaxBytes) return std::nullopt;
  auto id_bytes = r.take(*id_len);
  if (!id_bytes) return std::nullopt;
  auto tsec = r.u64_be();
  if (!tsec || *tsec > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
  auto salt_bytes = r.take(kSaltBytes);
  if (!salt_bytes) return std::nullopt;

  PlainBeacon pb;
  pb.magic = *magic;
  pb.user_id = DeviceId(std::string(id_bytes->begin(), id_bytes->end()));
  pb.timestamp = Timestamp(static_cast<std::int64_t>(*tsec));
  std::copy(salt_bytes->begin(), salt_bytes->end(), pb.salt.begin());
  pb.extension = r.rest();
  return pb;
}

// Authenticated ciphertext of a PlainBeacon. The nonce length is fixed by
// the AEAD scheme, so nonce || ciphertext is self-delimiting.
struct EncryptedBeacon {
  Bytes nonce;
  Bytes ciphertext;

  bool operator==(const EncryptedBeacon&) const = default;
};

inline Bytes encode_encrypted_beacon(const EncryptedBeacon& eb) {
  Bytes out;
  out.reserve(eb.nonce.size() + eb.ciphertext.size());
  out.insert(out.end(), eb.nonce.begin(), eb.nonce.end());
  out.insert(out.end(), eb.ciphertext.begin(), eb.ciphertext.end());
  return out;
}

inline std::string encrypted_beacon_to_text(const EncryptedBeacon& eb) {
  return to_base64(encode_encrypted_beacon(eb));
}

// Protocol 2 beacon payload: 128 bits drawn from a CSPRNG.
struct RandomToken {
  std::array<std::uint8_t, kTokenBytes> value{};

  auto operator<=>(const RandomToken&) const = default;
};

inline Bytes encode_token(const RandomToken& t) {
  return Bytes(t.value.begin(), t.value.end());
}

inline std::optional<RandomToken> decode_token(std::span<const std::uint8_t> data) {
  if (data.size() != kTokenBytes) return std::nullopt;
  RandomToken t;
  std::copy(data.begin(), data.end(), t.value.begin());
  return t;
}

// Text form: 32 lowercase hex characters.
inline std::string token_to_text(const RandomToken& t) { return to_hex(t.value); }

inline std::optional<RandomToken> token_from_text(std::string_view text) {
  if (text.size() != kTokenBytes * 2) return std::nullopt;
  auto bin = from_hex(text);
  if (!bin) return std::nullopt;
  return decode_token(*bin);
}

using BeaconPayload = std::variant<EncryptedBeacon, RandomToken>;

// Local receive-side log entry. Stores what was heard and when; never the
// sender's identity.
struct HeardRecord {
  BeaconPayload payload;
  Timestamp heard_at;

  bool operator==(const HeardRecord&) const = default;
};

// Local send-side log entry, one per emission.
struct SentRecord {
  BeaconPayload payload;
  Timestamp sent_at;

  bool operator==(const SentRecord&) const = default;
};

namespace detail {

inline Bytes encode_payload_record(const BeaconPayload& payload, Timestamp t) {
  Bytes out;
  if (const auto* eb = std::get_if<EncryptedBeacon>(&payload)) {
    put_u8(out, 0x01);
    Bytes body = encode_encrypted_beacon(*eb);
    put_u32_be(out, static_cast<std::uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
  } else {
    put_u8(out, 0x02);
    const auto& tok = std::get<RandomToken>(payload);
    put_u32_be(out, kTokenBytes);
    out.insert(out.end(), tok.value.begin(), tok.value.end());
  }
  put_u64_be(out, static_cast<std::uint64_t>(t.seconds));
  return out;
}

std::optional<std::pair<BeaconPayload, Timestamp>> decode_payload_record(
    std::span<const std::uint8_t> data, std::size_t nonce_bytes);

}  // namespace detail

}  // namespace contain

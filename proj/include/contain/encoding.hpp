#pragma once

#include <sodium.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contain {

using Bytes = std::vector<std::uint8_t>;

// Initializes libsodium once per process. Every crypto entry point calls
// this before touching a primitive.
inline void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) {
    throw std::runtime_error("libsodium initialization failed");
  }
}

inline std::string to_base64(std::span<const std::uint8_t> bin) {
  ensure_sodium();
  std::string out(sodium_base64_ENCODED_LEN(bin.size(), sodium_base64_VARIANT_ORIGINAL), '\0');
  sodium_bin2base64(out.data(), out.size(), bin.data(), bin.size(),
                    sodium_base64_VARIANT_ORIGINAL);
  out.resize(out.find('\0') == std::string::npos ? out.size() : out.find('\0'));
  return out;
}

inline std::optional<Bytes> from_base64(std::string_view text) {
  ensure_sodium();
  Bytes out(text.size() / 4 * 3 + 3);
  std::size_t written = 0;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                        nullptr, &written, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0) {
    return std::nullopt;
  }
  out.resize(written);
  return out;
}

inline std::string to_hex(std::span<const std::uint8_t> bin) {
  ensure_sodium();
  std::string out(bin.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), bin.data(), bin.size());
  out.resize(bin.size() * 2);
  return out;
}

inline std::optional<Bytes> from_hex(std::string_view text) {
  ensure_sodium();
  Bytes out(text.size() / 2 + 1);
  std::size_t written = 0;
  if (sodium_hex2bin(out.data(), out.size(), text.data(), text.size(), nullptr,
                     &written, nullptr) != 0 ||
      written * 2 != text.size()) {
    return std::nullopt;
  }
  out.resize(written);
  return out;
}

inline void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void put_u32_be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_u64_be(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

// Cursor-style reader over an immutable byte buffer. All getters return
// nullopt past the end instead of throwing, so parsers can treat truncated
// input as a value-level no-match.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::optional<std::uint8_t> u8() {
    if (pos_ + 1 > data_.size()) return std::nullopt;
    return data_[pos_++];
  }

  std::optional<std::uint32_t> u32_be() {
    if (pos_ + 4 > data_.size()) return std::nullopt;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }

  std::optional<std::uint64_t> u64_be() {
    if (pos_ + 8 > data_.size()) return std::nullopt;
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
    return v;
  }

  std::optional<Bytes> take(std::size_t n) {
    if (pos_ + n > data_.size()) return std::nullopt;
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
  }

  Bytes rest() {
    Bytes out(data_.begin() + pos_, data_.end());
    pos_ = data_.size();
    return out;
  }

  bool done() const { return pos_ == data_.size(); }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace contain

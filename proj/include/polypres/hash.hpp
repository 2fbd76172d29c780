#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace polypres {

// FNV-1a, 64 bit. Content hashes only; never used for security.
class Fnv1a {
public:
  Fnv1a& bytes(const void* data, size_t n) {
    auto p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ull;
    }
    return *this;
  }

  Fnv1a& u32(uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    return bytes(b, 4);
  }

  Fnv1a& u64(uint64_t v) {
    u32(static_cast<uint32_t>(v));
    return u32(static_cast<uint32_t>(v >> 32));
  }

  Fnv1a& str(std::string_view s) {
    bytes(s.data(), s.size());
    return u32(0xffffffffu); // terminator so "ab","c" != "a","bc"
  }

  uint64_t value() const { return h_; }

private:
  uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string hash_hex(uint64_t h);
uint64_t parse_hash_hex(const std::string& s); // throws Errc::parse_error

} // namespace polypres

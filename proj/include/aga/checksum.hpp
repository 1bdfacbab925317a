#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace aga {

// Incremental FNV-1a over 64-bit words; used for content digests in result files.
class Fnv1a64 {
  public:
    Fnv1a64& mix(std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            hash_ ^= (word >> (8 * i)) & 0xff;
            hash_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    Fnv1a64& mix(double value) { return mix(std::bit_cast<std::uint64_t>(value)); }

    Fnv1a64& mix(std::string_view text) {
        for (unsigned char c : text) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    std::uint64_t digest() const { return hash_; }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace aga

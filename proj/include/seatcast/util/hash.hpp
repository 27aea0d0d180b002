#ifndef SEATCAST_UTIL_HASH_HPP
#define SEATCAST_UTIL_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace seatcast {

// FNV-1a 64-bit. Used for content ids and run-manifest input digests;
// deterministic and dependency-free, not cryptographic.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

std::string hash_hex(std::string_view data);

}  // namespace seatcast

#endif

#ifndef ANONCROWD_COMMON_BYTES_HPP_
#define ANONCROWD_COMMON_BYTES_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace anoncrowd {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(ByteView v) { return Bytes(v.begin(), v.end()); }

inline Bytes to_bytes(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

template <size_t N>
Bytes to_bytes(const std::array<uint8_t, N>& a) {
    return Bytes(a.begin(), a.end());
}

inline void append(Bytes& out, ByteView v) {
    out.insert(out.end(), v.begin(), v.end());
}

inline std::string to_hex(ByteView v) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(v.size() * 2);
    for (uint8_t b : v) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0f]);
    }
    return s;
}

// True iff any contiguous `window`-byte substring of `needle` occurs in
// `haystack`. Used by the structural leakage scans.
inline bool contains_window_of(ByteView haystack, ByteView needle, size_t window) {
    if (needle.size() < window || haystack.size() < window) return false;
    for (size_t i = 0; i + window <= needle.size(); ++i) {
        for (size_t j = 0; j + window <= haystack.size(); ++j) {
            if (std::equal(needle.begin() + i, needle.begin() + i + window,
                           haystack.begin() + j)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace anoncrowd

#endif

#include "glotto/unicode.hpp"

#include <algorithm>
#include <cstdint>

#include "glotto/errors.hpp"

namespace glotto::unicode {

namespace {

struct CodepointRange {
    std::uint32_t lo;
    std::uint32_t hi;
};

struct CodepointPair {
    std::uint32_t from;
    std::uint32_t to;
};

#include "unicode_tables.inc"

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        std::uint32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw input_error("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > n)
            throw input_error("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(bytes[i + k]);
            if ((b & 0xC0) != 0x80)
                throw input_error("invalid UTF-8 continuation byte at offset " +
                                  std::to_string(i + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr std::uint32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMinByLen[len])
            throw input_error("overlong UTF-8 encoding at offset " + std::to_string(i));
        if (cp >= 0xD800 && cp <= 0xDFFF)
            throw input_error("UTF-8 encoded surrogate at offset " + std::to_string(i));
        if (cp > 0x10FFFF)
            throw input_error("codepoint out of range at offset " + std::to_string(i));
        out.push_back(static_cast<char32_t>(cp));
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t c : cps) {
        const auto cp = static_cast<std::uint32_t>(c);
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

bool is_letter(char32_t cp) {
    const auto v = static_cast<std::uint32_t>(cp);
    auto it = std::upper_bound(std::begin(kLetterRanges), std::end(kLetterRanges), v,
                               [](std::uint32_t x, const CodepointRange& r) { return x < r.lo; });
    if (it == std::begin(kLetterRanges)) return false;
    --it;
    return v >= it->lo && v <= it->hi;
}

char32_t simple_lower(char32_t cp) {
    const auto v = static_cast<std::uint32_t>(cp);
    auto it = std::lower_bound(std::begin(kSimpleLowerMap), std::end(kSimpleLowerMap), v,
                               [](const CodepointPair& p, std::uint32_t x) { return p.from < x; });
    if (it != std::end(kSimpleLowerMap) && it->from == v) return static_cast<char32_t>(it->to);
    return cp;
}

}  // namespace glotto::unicode

// Bit-parallel Levenshtein after Myers (JACM 1999) in the form given by
// Hyyro (2003): one 64-bit vertical-delta pair per pattern, one step per
// text character.

#include <cstdint>

#include "glotto/edit_distance.hpp"

namespace glotto::kernel_detail {

namespace {

// Pattern-character bitmasks. Patterns are at most 64 chars, so a flat
// array with linear lookup beats any hash for the word lengths seen here.
struct PatternEq {
    char32_t keys[64];
    std::uint64_t bits[64];
    std::uint32_t count = 0;

    void build(std::u32string_view pattern) {
        count = 0;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            const char32_t c = pattern[i];
            std::uint32_t k = 0;
            while (k < count && keys[k] != c) ++k;
            if (k == count) {
                keys[k] = c;
                bits[k] = 0;
                ++count;
            }
            bits[k] |= std::uint64_t{1} << i;
        }
    }

    std::uint64_t lookup(char32_t c) const {
        for (std::uint32_t k = 0; k < count; ++k)
            if (keys[k] == c) return bits[k];
        return 0;
    }
};

}  // namespace

std::uint32_t lev_myers64(std::u32string_view pattern, std::u32string_view text) {
    const std::size_t m = pattern.size();
    if (m == 0) return static_cast<std::uint32_t>(text.size());

    PatternEq peq;
    peq.build(pattern);

    std::uint64_t vp = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    std::uint64_t vn = 0;
    const std::uint64_t top = std::uint64_t{1} << (m - 1);
    auto score = static_cast<std::uint32_t>(m);

    for (const char32_t c : text) {
        const std::uint64_t x = peq.lookup(c);
        const std::uint64_t d0 = (((x & vp) + vp) ^ vp) | x | vn;
        std::uint64_t hp = vn | ~(d0 | vp);
        std::uint64_t hn = d0 & vp;
        score += (hp & top) ? 1 : 0;
        score -= (hn & top) ? 1 : 0;
        hp = (hp << 1) | 1;
        hn <<= 1;
        vp = hn | ~(d0 | hp);
        vn = hp & d0;
    }
    return score;
}

void lev_batch_myers(std::span<const PairView> pairs, std::uint32_t* out) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        std::u32string_view a{pairs[k].a, pairs[k].alen};
        std::u32string_view b{pairs[k].b, pairs[k].blen};
        if (a.size() > b.size()) std::swap(a, b);
        out[k] = a.size() <= 64 ? lev_myers64(a, b) : lev_two_row(a, b);
    }
}

}  // namespace glotto::kernel_detail

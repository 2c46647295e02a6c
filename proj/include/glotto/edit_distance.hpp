#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "glotto/corpus.hpp"

namespace glotto {

/// Which edit-distance kernel to run. All kernels compute identical values;
/// they differ only in throughput. Auto picks the fastest supported one.
enum class Kernel {
    Auto,
    Scalar,       // two-row dynamic programming
    BitParallel,  // Myers/Hyyrö 64-bit bit-vectors (shorter word <= 64 chars)
    Avx2,         // four bit-parallel lanes per 256-bit vector
};

/// True when the kernel can run on this machine.
bool kernel_available(Kernel k);

const char* kernel_name(Kernel k);
Kernel kernel_by_name(std::string_view name);  // throws input_error

/// Minimum number of single-character insertions, deletions, or
/// substitutions transforming one word into the other.
std::uint32_t levenshtein(std::u32string_view a, std::u32string_view b);
inline std::uint32_t levenshtein(const Word& a, const Word& b) {
    return levenshtein(a.cps, b.cps);
}

/// Plain full-matrix dynamic program. Slow; kept as the reference the
/// optimized kernels are equivalence-tested against.
std::uint32_t levenshtein_reference(std::u32string_view a, std::u32string_view b);

/// Levenshtein distance divided by the length of the longer word.
/// Always in [0,1]; 0 iff the words are equal.
double word_distance(const Word& a, const Word& b);

/// Elementwise word_distance over a pair sequence, routed through the
/// selected kernel. Output order and values match the sequential map.
std::vector<double> batch_word_distances(
    std::span<const std::pair<const Word*, const Word*>> pairs, Kernel kernel = Kernel::Auto);

std::vector<double> batch_word_distances(std::span<const std::pair<Word, Word>> pairs,
                                         Kernel kernel = Kernel::Auto);

namespace kernel_detail {

// Raw integer-distance entry points, exposed for the equivalence tests.
std::uint32_t lev_two_row(std::u32string_view a, std::u32string_view b);
std::uint32_t lev_myers64(std::u32string_view pattern, std::u32string_view text);

struct PairView {
    const char32_t* a;
    std::uint32_t alen;
    const char32_t* b;
    std::uint32_t blen;
};

// Batched distances; `out` must hold pairs.size() results.
void lev_batch_scalar(std::span<const PairView> pairs, std::uint32_t* out);
void lev_batch_myers(std::span<const PairView> pairs, std::uint32_t* out);
#if defined(GLOTTO_HAVE_AVX2)
void lev_batch_avx2(std::span<const PairView> pairs, std::uint32_t* out);
#endif

}  // namespace kernel_detail

}  // namespace glotto

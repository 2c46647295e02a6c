#include <algorithm>
#include <numeric>
#include <vector>

#include "glotto/edit_distance.hpp"

namespace glotto {

std::uint32_t levenshtein_reference(std::u32string_view a, std::u32string_view b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::uint32_t> dp((n + 1) * (m + 1));
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return dp[i * (m + 1) + j]; };
    for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint32_t sub = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
            at(i, j) = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1, sub});
        }
    return at(n, m);
}

namespace kernel_detail {

std::uint32_t lev_two_row(std::u32string_view a, std::u32string_view b) {
    if (a.size() > b.size()) std::swap(a, b);  // keep the short word in the row
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<std::uint32_t>(m);

    std::vector<std::uint32_t> row(n + 1);
    std::iota(row.begin(), row.end(), 0u);
    for (std::size_t j = 1; j <= m; ++j) {
        std::uint32_t diag = row[0];
        row[0] = static_cast<std::uint32_t>(j);
        for (std::size_t i = 1; i <= n; ++i) {
            const std::uint32_t saved = row[i];
            const std::uint32_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[i] = std::min({row[i] + 1, row[i - 1] + 1, sub});
            diag = saved;
        }
    }
    return row[n];
}

void lev_batch_scalar(std::span<const PairView> pairs, std::uint32_t* out) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
        out[k] = lev_two_row({pairs[k].a, pairs[k].alen}, {pairs[k].b, pairs[k].blen});
}

}  // namespace kernel_detail

}  // namespace glotto

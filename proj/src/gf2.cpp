#include "lch/gf2.hpp"

#include <algorithm>
#include <bit>

namespace lch {

std::size_t gf2_rank(const std::vector<SparseRow>& rows, std::size_t ncols) {
    const std::size_t nwords = (ncols + 63) / 64;
    if (nwords == 0) return 0;
    // pivots[c] holds a reduced row whose leading (lowest) set bit is c.
    std::vector<std::vector<std::uint64_t>> pivots(ncols);
    std::vector<bool> has_pivot(ncols, false);
    std::size_t rank = 0;
    std::vector<std::uint64_t> bits(nwords);
    for (const auto& row : rows) {
        std::fill(bits.begin(), bits.end(), 0);
        for (auto c : row) bits[c / 64] ^= std::uint64_t{1} << (c % 64);
        std::size_t w = 0;
        while (true) {
            while (w < nwords && bits[w] == 0) ++w;
            if (w == nwords) break;
            const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
            if (!has_pivot[c]) {
                pivots[c] = bits;
                has_pivot[c] = true;
                ++rank;
                break;
            }
            const auto& p = pivots[c];
            for (std::size_t k = w; k < nwords; ++k) bits[k] ^= p[k];
        }
    }
    return rank;
}

}  // namespace lch

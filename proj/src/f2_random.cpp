#include "dnet/f2_random.hpp"

#include <array>
#include <bit>

namespace dnet {

namespace {

std::uint64_t draw_bits(int m, std::mt19937_64& rng) {
    const std::uint64_t mask =
        m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    return rng() & mask;
}

} // namespace

F2Matrix random_nonsingular(int m, std::mt19937_64& rng) {
    F2Matrix a(m);
    // Reduced basis of the rows accepted so far, keyed by leading bit.
    std::array<std::uint64_t, F2Matrix::kMaxDim> basis{};
    for (int i = 1; i <= m; ++i) {
        for (;;) {
            const std::uint64_t cand = draw_bits(m, rng);
            std::uint64_t v = cand;
            while (v) {
                const int p = 63 - std::countl_zero(v);
                if (!basis[p])
                    break;
                v ^= basis[p];
            }
            if (!v)
                continue; // in the span of earlier rows (or zero): redraw
            basis[63 - std::countl_zero(v)] = v;
            a.set_row(i, cand);
            break;
        }
    }
    return a;
}

F2Matrix random_lower(int m, std::mt19937_64& rng) {
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t strict = i == 1 ? 0 : draw_bits(i - 1, rng);
        a.set_row(i, strict | (std::uint64_t{1} << (i - 1)));
    }
    return a;
}

F2Matrix random_upper(int m, std::mt19937_64& rng) {
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t strict =
            i == m ? 0 : draw_bits(m - i, rng) << i;
        a.set_row(i, strict | (std::uint64_t{1} << (i - 1)));
    }
    return a;
}

} // namespace dnet

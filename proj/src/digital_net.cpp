#include "dnet/digital_net.hpp"

#include <cmath>
#include <stdexcept>

namespace dnet {

namespace {

constexpr int kMaxPointSetBits = 24;

// Reverse the low k bits of x; bits at or above k must be zero.
std::uint64_t reverse_low_bits(std::uint64_t x, int k) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

} // namespace

GeneratorTuple::GeneratorTuple(std::vector<F2Matrix> matrices)
    : matrices_(std::move(matrices)) {
    if (matrices_.empty())
        throw std::invalid_argument("GeneratorTuple: need at least one matrix");
    const int m = matrices_[0].dim();
    for (const auto& c : matrices_)
        if (c.dim() != m)
            throw std::invalid_argument("GeneratorTuple: unequal dimensions");
}

const F2Matrix& GeneratorTuple::matrix(int j) const {
    if (j < 1 || j > s())
        throw std::out_of_range("GeneratorTuple: coordinate index out of range");
    return matrices_[j - 1];
}

double DyadicCoord::value() const {
    return std::ldexp(static_cast<double>(numerator), -precision);
}

DyadicPoint NetPoints::point(std::uint64_t n) const {
    if (n >= count())
        throw std::out_of_range("NetPoints: point index out of range");
    DyadicPoint p;
    p.coords.reserve(axes.size());
    for (const auto& axis : axes)
        p.coords.push_back({axis[n], m});
    return p;
}

std::uint64_t digits(std::uint64_t n, int m) {
    if (m < 1 || m > 64)
        throw std::out_of_range("digits: length must be in 1..64");
    if (m < 64 && (n >> m) != 0)
        throw std::out_of_range("digits: index needs more digits than requested");
    return n;
}

DyadicCoord phi(std::uint64_t y, int k) {
    if (k < 1 || k > 64)
        throw std::out_of_range("phi: precision must be in 1..64");
    return {reverse_low_bits(y, k), k};
}

NetPoints net_points(const GeneratorTuple& gen) {
    const int m = gen.m();
    if (m > kMaxPointSetBits)
        throw std::length_error("net_points: point set too large to materialize (m > 24)");
    const std::uint64_t n_points = std::uint64_t{1} << m;
    NetPoints pts;
    pts.m = m;
    pts.s = gen.s();
    pts.axes.resize(gen.s());
    for (int j = 1; j <= gen.s(); ++j) {
        const F2Matrix& c = gen.matrix(j);
        auto& axis = pts.axes[j - 1];
        axis.resize(n_points);
        for (std::uint64_t n = 0; n < n_points; ++n)
            axis[n] = static_cast<std::uint32_t>(reverse_low_bits(c.apply(n), m));
    }
    return pts;
}

std::vector<DyadicPoint> sequence_points(const std::vector<MatrixPrefix>& gens,
                                         std::uint64_t count, int precision) {
    if (gens.empty())
        throw std::invalid_argument("sequence_points: need at least one generator");
    int depth = gens[0].depth();
    for (const auto& g : gens)
        depth = std::min(depth, g.depth());
    if (precision < 1 || precision > depth)
        throw std::out_of_range("sequence_points: precision exceeds window depth");
    if (depth < 64 && count > (std::uint64_t{1} << depth))
        throw std::out_of_range("sequence_points: index range exceeds window depth");

    const std::uint64_t keep = precision == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << precision) - 1;
    std::vector<DyadicPoint> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        DyadicPoint p;
        p.coords.reserve(gens.size());
        for (const auto& g : gens) {
            // Truncation keeps digits 1..precision, i.e. the low bits.
            const std::uint64_t y = g.window.apply(n) & keep;
            p.coords.push_back(phi(y, precision));
        }
        out.push_back(std::move(p));
    }
    return out;
}

GeneratorTuple extend_with_index_coordinate(const GeneratorTuple& gen) {
    std::vector<F2Matrix> mats;
    mats.reserve(gen.s() + 1);
    mats.push_back(anti_diagonal(gen.m()));
    for (const auto& c : gen.matrices())
        mats.push_back(c);
    return GeneratorTuple(std::move(mats));
}

} // namespace dnet

// Digital nets and digital-sequence prefixes in base 2.
//
// A tuple of s generator matrices of dimension m produces the net point
// x_n = (phi_m(C_1 d(n)), ..., phi_m(C_s d(n))) for n = 0..2^m-1, where
// d(n) is the vector of base-2 digits of n and phi_k maps a digit vector
// to the dyadic fraction sum y_i / 2^i.  Infinite generator matrices are
// handled as finite windows (MatrixPrefix): results are exact for all
// indices and precisions that fit the window.

#ifndef DNET_DIGITAL_NET_HPP
#define DNET_DIGITAL_NET_HPP

#include <cstdint>
#include <vector>

#include "dnet/f2_matrix.hpp"

namespace dnet {

// Ordered list of s >= 1 generator matrices of equal dimension m.
class GeneratorTuple {
  public:
    explicit GeneratorTuple(std::vector<F2Matrix> matrices);

    int m() const { return matrices_[0].dim(); }
    int s() const { return static_cast<int>(matrices_.size()); }

    // Generator for coordinate j, 1-based.
    const F2Matrix& matrix(int j) const;
    const std::vector<F2Matrix>& matrices() const { return matrices_; }

  private:
    std::vector<F2Matrix> matrices_;
};

// numerator / 2^precision, always in [0, 1).
struct DyadicCoord {
    std::uint64_t numerator = 0;
    int precision = 0;

    double value() const;
    friend bool operator==(const DyadicCoord&, const DyadicCoord&) = default;
};

struct DyadicPoint {
    std::vector<DyadicCoord> coords;
    friend bool operator==(const DyadicPoint&, const DyadicPoint&) = default;
};

// The full point set of a generator tuple: 2^m points with s coordinates
// of precision m each.  Stored columnar (one numerator vector per axis)
// so large point sets stay compact.
struct NetPoints {
    int m = 0;
    int s = 0;
    // axes[j][n] = numerator of coordinate j+1 of point n.
    std::vector<std::vector<std::uint32_t>> axes;

    std::uint64_t count() const {
        return axes.empty() ? 0 : axes[0].size();
    }
    DyadicPoint point(std::uint64_t n) const;
};

// Finite window of an infinite generator matrix: the upper-left
// depth x depth block.  Everything computed from a prefix is exact as
// long as indices and precisions stay within the window.
struct MatrixPrefix {
    explicit MatrixPrefix(F2Matrix w) : window(std::move(w)) {}

    int depth() const { return window.dim(); }
    F2Matrix window;
};

// Base-2 digits of n packed into a word: bit i-1 holds the coefficient
// of 2^{i-1}, matching the vector layout F2Matrix::apply expects.
// Throws std::out_of_range unless 0 <= n < 2^m.
std::uint64_t digits(std::uint64_t n, int m);

// phi_k: digit vector y (bit i-1 = y_i) to the fraction sum y_i / 2^i.
// The numerator is the k-bit reversal of y.
DyadicCoord phi(std::uint64_t y, int k);

// Materialize all 2^m points.  Capped at m <= 24; throws
// std::length_error beyond that.
NetPoints net_points(const GeneratorTuple& gen);

// First `count` points of the digital sequence, truncated to the given
// precision.  Requires precision <= depth of every prefix and
// count <= 2^depth; digit-level truncation, no rounding.
std::vector<DyadicPoint> sequence_points(const std::vector<MatrixPrefix>& gens,
                                         std::uint64_t count, int precision);

// Prepend the digit-reversal matrix J_m: the new first coordinate of
// point n is exactly n / 2^m.  Turns the first 2^m sequence points into
// an (s+1)-dimensional net with an explicit index coordinate.
GeneratorTuple extend_with_index_coordinate(const GeneratorTuple& gen);

} // namespace dnet

#endif

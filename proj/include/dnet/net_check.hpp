// Net-quality verification.
//
// Two independent deciders for the (t,m,s)-net property:
//   * strength_by_rank — the rank criterion on stacked row prefixes of
//     the generator matrices (fast path, plus a from-scratch naive
//     variant for differential testing);
//   * is_net_geometric — literal counting of points in every dyadic
//     elementary interval (the definition, used as ground truth).
// Plus a per-depth certifier for sequence prefixes and an exact L2 star
// discrepancy diagnostic.

#ifndef DNET_NET_CHECK_HPP
#define DNET_NET_CHECK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dnet/digital_net.hpp"

namespace dnet {

// Verdict of the rank criterion.  strength is the largest k <= m such
// that for every composition (d_1,...,d_s) of every k' <= k, the first
// d_j rows of each generator stack to a full-rank k' x m matrix;
// t_value = m - strength.  witness is the lexicographically smallest
// composition of strength+1 whose stack is rank deficient (present iff
// strength < m).
struct TReport {
    int m = 0;
    int s = 0;
    int strength = 0;
    int t_value = 0;
    std::optional<std::vector<int>> witness;
};

TReport strength_by_rank(const GeneratorTuple& gen);

// Same contract, implemented the slow obvious way: ascending level
// scan, one fresh elimination per composition.  Exists so the two code
// paths can be tested against each other.
TReport strength_by_rank_naive(const GeneratorTuple& gen);

// Dyadic box  prod_i [a_i/2^{c_i}, (a_i+1)/2^{c_i})  given by per-axis
// shape c_i >= 0 and offsets 0 <= a_i < 2^{c_i}.
struct ElementaryInterval {
    std::vector<int> shape;
    std::vector<std::uint64_t> offsets;
};

struct GeometricReport {
    bool passed = false;
    // Lexicographically smallest failing box (shape first, then
    // offsets) and the number of points it actually contains.
    std::optional<ElementaryInterval> witness;
    std::uint64_t witness_count = 0;
};

// Checks the definition directly: every elementary interval of volume
// 2^{t-m} must contain exactly 2^t points.  Costs grow with the number
// of shapes, so instances with s > 3 or m > 12 are rejected unless
// allow_large is set.
GeometricReport is_net_geometric(const NetPoints& pts, int t,
                                 bool allow_large = false);

struct DepthVerdict {
    int depth = 0;
    bool passed = false;
    TReport report; // rank verdict of (J_depth, C_1^(depth), ...)
};

// Per-depth certification of the (t,s)-sequence property: at each depth
// d = 1..max_depth the extended tuple (J_d, C_1^(d), ..., C_s^(d)) must
// have t-value <= t.  certified means all examined depths passed; the
// property is then established up to max_depth, never beyond.
struct SequencePrefixReport {
    int max_depth = 0;
    int t = 0;
    bool certified = false;
    std::optional<int> first_failing_depth;
    std::vector<DepthVerdict> depths;
};

SequencePrefixReport check_sequence_prefix(const std::vector<MatrixPrefix>& gens,
                                           int max_depth, int t);

// Exact squared L2 star discrepancy (Warnock's formula) evaluated in
// rational arithmetic on the dyadic coordinates, converted to double at
// the end.  O(s * N^2); rejects point sets with more than 2^16 points.
double l2_star_discrepancy_squared(const NetPoints& pts);

} // namespace dnet

#endif

// Uniform random GF(2) matrices.
//
// All generators take a std::mt19937_64 by reference and consume raw
// engine output (masked to the needed width) instead of going through
// std::uniform_int_distribution, whose mapping is implementation
// defined.  Same seed, same sequence of calls => same matrices on
// every platform.

#ifndef DNET_F2_RANDOM_HPP
#define DNET_F2_RANDOM_HPP

#include <random>

#include "dnet/f2_matrix.hpp"

namespace dnet {

// Uniform over all nonsingular m x m matrices (GL(m, 2)).  Each row is
// redrawn until it falls outside the span of the rows above it, which
// keeps the distribution exactly uniform.
F2Matrix random_nonsingular(int m, std::mt19937_64& rng);

// Uniform over unit lower / unit upper triangular m x m matrices: the
// diagonal is fixed to ones and every strictly triangular entry is an
// independent fair bit.
F2Matrix random_lower(int m, std::mt19937_64& rng);
F2Matrix random_upper(int m, std::mt19937_64& rng);

} // namespace dnet

#endif

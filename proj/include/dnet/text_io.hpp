// Text formats.
//
// Matrix: line 1 is the dimension in decimal; the next dim lines hold
// dim characters from {0,1} each, leftmost character = column 1.  LF
// line endings, no trailing whitespace.  Blank lines between matrices
// are ignored on input, so several matrices can share one stream.
//
// Points: one point per line, coordinates space-separated.
//   frac  "numerator/2^m", denominator written out (e.g. "3/4")
//   dec   exact decimal expansion (denominators are powers of two)
//   bin   m binary digits, most significant first.
// Only frac is re-readable.

#ifndef DNET_TEXT_IO_HPP
#define DNET_TEXT_IO_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "dnet/digital_net.hpp"
#include "dnet/f2_matrix.hpp"

namespace dnet {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Next matrix from the stream; throws ParseError on malformed input or
// end of stream.
F2Matrix read_matrix(std::istream& in);

// Like read_matrix, but a clean end of stream yields nullopt.
std::optional<F2Matrix> try_read_matrix(std::istream& in);

void write_matrix(std::ostream& out, const F2Matrix& a);
std::string matrix_to_text(const F2Matrix& a);

enum class PointFormat { Frac, Dec, Bin };

void write_points(std::ostream& out, const NetPoints& pts, PointFormat fmt);

// Parse points in frac format.  Coordinates may carry different
// precisions; they are normalized to the largest one (at most 32).
// The result need not have a power-of-two count: only the verifiers
// that require one enforce it.
NetPoints read_points(std::istream& in);

} // namespace dnet

#endif

// Bit-packed square matrices over GF(2), dimension 1..64.
//
// Rows are stored as 64-bit words with column j in bit position j-1
// (LSB = column 1).  Indices i, j are 1-based everywhere in this API.
// All values are immutable in spirit: operations return fresh matrices
// and never mutate their inputs.

#ifndef DNET_F2_MATRIX_HPP
#define DNET_F2_MATRIX_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

namespace dnet {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

class F2Matrix {
  public:
    static constexpr int kMaxDim = 64;

    // Zero matrix of the given dimension.
    explicit F2Matrix(int dim);

    int dim() const { return dim_; }

    // Entry (i, j), 1-based.
    int at(int i, int j) const {
        check_index(i, j);
        return static_cast<int>((rows_[i - 1] >> (j - 1)) & 1u);
    }

    void set(int i, int j, int value) {
        check_index(i, j);
        const std::uint64_t bit = std::uint64_t{1} << (j - 1);
        if (value & 1)
            rows_[i - 1] |= bit;
        else
            rows_[i - 1] &= ~bit;
    }

    // Row i as a word; bits at positions >= dim are always zero.
    std::uint64_t row(int i) const {
        check_row(i);
        return rows_[i - 1];
    }

    void set_row(int i, std::uint64_t bits) {
        check_row(i);
        rows_[i - 1] = bits & word_mask();
    }

    // Matrix-vector product over GF(2); x holds coordinate i in bit i-1.
    std::uint64_t apply(std::uint64_t x) const;

    std::uint64_t word_mask() const {
        return dim_ == 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << dim_) - 1;
    }

    friend bool operator==(const F2Matrix& a, const F2Matrix& b);
    friend bool operator!=(const F2Matrix& a, const F2Matrix& b) {
        return !(a == b);
    }

  private:
    void check_row(int i) const {
        if (i < 1 || i > dim_)
            throw std::out_of_range("F2Matrix: row index out of range");
    }
    void check_index(int i, int j) const {
        check_row(i);
        if (j < 1 || j > dim_)
            throw std::out_of_range("F2Matrix: column index out of range");
    }

    int dim_;
    std::array<std::uint64_t, kMaxDim> rows_{};
};

// Structural matrices.
F2Matrix identity(int m);
// Anti-diagonal matrix: entry (i, j) = 1 iff i + j = m + 1.  Involution.
F2Matrix anti_diagonal(int m);
// Upper-triangular Pascal matrix: entry (i, j) = binom(j-1, i-1) mod 2.
// Computed with Lucas' rule: the bit set of i-1 must be a subset of the
// bit set of j-1.  Involution over GF(2).
F2Matrix pascal(int m);

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    return multiply(a, b);
}

int rank(const F2Matrix& a);

// Throws SingularMatrixError if a is not invertible.
F2Matrix inverse(const F2Matrix& a);

// Nonsingular triangular over GF(2) forces an all-ones diagonal, so these
// predicates also reject any triangular matrix with a zero diagonal entry.
bool is_lower_triangular_nonsingular(const F2Matrix& a);
bool is_upper_triangular_nonsingular(const F2Matrix& a);

// Unit-triangular LU factorization.  b = lower * upper with both factors
// unit-diagonal; the factorization is unique when it exists, and it exists
// iff every leading principal submatrix of b is nonsingular.  On failure
// failed_minor is the smallest k whose leading k x k minor is singular.
struct LuResult {
    bool ok = false;
    int failed_minor = 0;
    F2Matrix lower;
    F2Matrix upper;
};
LuResult lu_decompose(const F2Matrix& b);

// Upper-left k x k submatrix.
F2Matrix prefix(const F2Matrix& a, int k);

} // namespace dnet

#endif

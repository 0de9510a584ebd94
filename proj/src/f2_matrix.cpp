#include "dnet/f2_matrix.hpp"

#include <bit>

namespace dnet {

namespace {

void check_dim(int m) {
    if (m < 1 || m > F2Matrix::kMaxDim)
        throw std::invalid_argument("matrix dimension must be in 1..64");
}

} // namespace

F2Matrix::F2Matrix(int dim) : dim_(dim) {
    check_dim(dim);
}

bool operator==(const F2Matrix& a, const F2Matrix& b) {
    if (a.dim_ != b.dim_)
        return false;
    for (int i = 0; i < a.dim_; ++i)
        if (a.rows_[i] != b.rows_[i])
            return false;
    return true;
}

std::uint64_t F2Matrix::apply(std::uint64_t x) const {
    x &= word_mask();
    std::uint64_t y = 0;
    for (int i = 0; i < dim_; ++i)
        y |= static_cast<std::uint64_t>(std::popcount(rows_[i] & x) & 1) << i;
    return y;
}

F2Matrix identity(int m) {
    check_dim(m);
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i)
        a.set_row(i, std::uint64_t{1} << (i - 1));
    return a;
}

F2Matrix anti_diagonal(int m) {
    check_dim(m);
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i)
        a.set_row(i, std::uint64_t{1} << (m - i));
    return a;
}

F2Matrix pascal(int m) {
    check_dim(m);
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t need = static_cast<std::uint64_t>(i - 1);
        std::uint64_t bits = 0;
        for (int j = i; j <= m; ++j) {
            const std::uint64_t col = static_cast<std::uint64_t>(j - 1);
            if ((need & col) == need)
                bits |= std::uint64_t{1} << (j - 1);
        }
        a.set_row(i, bits);
    }
    return a;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("multiply: dimension mismatch");
    const int m = a.dim();
    F2Matrix c(m);
    for (int i = 1; i <= m; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t bits = a.row(i);
        while (bits) {
            const int k = std::countr_zero(bits);
            acc ^= b.row(k + 1);
            bits &= bits - 1;
        }
        c.set_row(i, acc);
    }
    return c;
}

int rank(const F2Matrix& a) {
    std::array<std::uint64_t, F2Matrix::kMaxDim> basis{};
    int r = 0;
    for (int i = 1; i <= a.dim(); ++i) {
        std::uint64_t v = a.row(i);
        while (v) {
            const int p = 63 - std::countl_zero(v);
            if (!basis[p]) {
                basis[p] = v;
                ++r;
                break;
            }
            v ^= basis[p];
        }
    }
    return r;
}

F2Matrix inverse(const F2Matrix& a) {
    const int m = a.dim();
    std::array<std::uint64_t, F2Matrix::kMaxDim> work{}, inv{};
    for (int i = 0; i < m; ++i) {
        work[i] = a.row(i + 1);
        inv[i] = std::uint64_t{1} << i;
    }
    for (int col = 0; col < m; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = col; r < m; ++r) {
            if (work[r] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            throw SingularMatrixError("inverse: matrix is singular");
        std::swap(work[col], work[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r != col && (work[r] & bit)) {
                work[r] ^= work[col];
                inv[r] ^= inv[col];
            }
        }
    }
    F2Matrix out(m);
    for (int i = 0; i < m; ++i)
        out.set_row(i + 1, inv[i]);
    return out;
}

bool is_lower_triangular_nonsingular(const F2Matrix& a) {
    for (int i = 1; i <= a.dim(); ++i) {
        const std::uint64_t allowed =
            i == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
        const std::uint64_t r = a.row(i);
        if ((r & ~allowed) != 0 || ((r >> (i - 1)) & 1) == 0)
            return false;
    }
    return true;
}

bool is_upper_triangular_nonsingular(const F2Matrix& a) {
    for (int i = 1; i <= a.dim(); ++i) {
        const std::uint64_t below = (std::uint64_t{1} << (i - 1)) - 1;
        const std::uint64_t r = a.row(i);
        if ((r & below) != 0 || ((r >> (i - 1)) & 1) == 0)
            return false;
    }
    return true;
}

LuResult lu_decompose(const F2Matrix& b) {
    const int m = b.dim();
    LuResult res{false, 0, identity(m), F2Matrix(m)};
    std::array<std::uint64_t, F2Matrix::kMaxDim> u{};
    std::array<std::uint64_t, F2Matrix::kMaxDim> l{};
    for (int i = 0; i < m; ++i) {
        u[i] = b.row(i + 1);
        l[i] = std::uint64_t{1} << i;
    }
    for (int k = 0; k < m; ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        if ((u[k] & bit) == 0) {
            res.failed_minor = k + 1;
            return res;
        }
        for (int i = k + 1; i < m; ++i) {
            if (u[i] & bit) {
                u[i] ^= u[k];
                l[i] |= bit;
            }
        }
    }
    res.ok = true;
    for (int i = 0; i < m; ++i) {
        res.lower.set_row(i + 1, l[i]);
        res.upper.set_row(i + 1, u[i]);
    }
    return res;
}

F2Matrix prefix(const F2Matrix& a, int k) {
    if (k < 1 || k > a.dim())
        throw std::out_of_range("prefix: depth out of range");
    F2Matrix out(k);
    for (int i = 1; i <= k; ++i)
        out.set_row(i, a.row(i));
    return out;
}

} // namespace dnet

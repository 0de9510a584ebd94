#include "dnet/characterize.hpp"

#include <stdexcept>
#include <utility>

#include "dnet/f2_random.hpp"

namespace dnet {

namespace {

// Triangular factors are indexed by their free strictly-triangular
// entries in row-major order, least significant bit first.
F2Matrix decode_lower(std::uint64_t bits, int m) {
    F2Matrix a = identity(m);
    int t = 0;
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < i; ++j, ++t)
            if ((bits >> t) & 1)
                a.set(i, j, 1);
    return a;
}

F2Matrix decode_upper(std::uint64_t bits, int m) {
    F2Matrix a = identity(m);
    int t = 0;
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j, ++t)
            if ((bits >> t) & 1)
                a.set(i, j, 1);
    return a;
}

F2Matrix decode_full(std::uint64_t bits, int m) {
    F2Matrix a(m);
    const std::uint64_t row_mask = (std::uint64_t{1} << m) - 1;
    for (int i = 1; i <= m; ++i)
        a.set_row(i, (bits >> ((i - 1) * m)) & row_mask);
    return a;
}

} // namespace

const char* to_string(DecomposeStatus status) {
    switch (status) {
    case DecomposeStatus::Ok:
        return "Ok";
    case DecomposeStatus::SingularA:
        return "SingularA";
    case DecomposeStatus::NotLU:
        return "NotLU";
    case DecomposeStatus::L2NotLower:
        return "L2NotLower";
    }
    return "Unknown";
}

Decompose3Result decompose_0m3(const F2Matrix& a, const F2Matrix& b,
                               const F2Matrix& c) {
    const int m = a.dim();
    if (b.dim() != m || c.dim() != m)
        throw std::invalid_argument("decompose_0m3: dimension mismatch");
    Decompose3Result res;
    if (rank(a) < m) {
        res.status = DecomposeStatus::SingularA;
        return res;
    }
    const F2Matrix m_factor = multiply(anti_diagonal(m), a); // A = J·M
    const F2Matrix m_inv = inverse(m_factor);
    const LuResult lu = lu_decompose(multiply(b, m_inv));
    if (!lu.ok) {
        res.status = DecomposeStatus::NotLU;
        res.failed_minor = lu.failed_minor;
        return res;
    }
    // C·M^{-1} must be L2·P·U; peel U and P off the right (P is an
    // involution, so multiplying by it is dividing by it).
    const F2Matrix l2 = multiply(
        multiply(multiply(c, m_inv), inverse(lu.upper)), pascal(m));
    if (!is_lower_triangular_nonsingular(l2)) {
        res.status = DecomposeStatus::L2NotLower;
        return res;
    }
    res.factors = NetDecomposition3{lu.lower, l2, lu.upper, m_factor};
    return res;
}

GeneratorTuple compose_0m3(const F2Matrix& l1, const F2Matrix& l2,
                           const F2Matrix& u, const F2Matrix& m_factor) {
    const int m = l1.dim();
    if (l2.dim() != m || u.dim() != m || m_factor.dim() != m)
        throw std::invalid_argument("compose_0m3: dimension mismatch");
    if (!is_lower_triangular_nonsingular(l1) ||
        !is_lower_triangular_nonsingular(l2))
        throw std::invalid_argument("compose_0m3: L factor is not unit lower triangular");
    if (!is_upper_triangular_nonsingular(u))
        throw std::invalid_argument("compose_0m3: U factor is not unit upper triangular");
    if (rank(m_factor) < m)
        throw std::invalid_argument("compose_0m3: M factor is singular");
    const F2Matrix um = multiply(u, m_factor);
    return GeneratorTuple({multiply(anti_diagonal(m), m_factor),
                           multiply(l1, um),
                           multiply(multiply(l2, pascal(m)), um)});
}

Decompose2Result decompose_0m2(const F2Matrix& a, const F2Matrix& b) {
    const int m = a.dim();
    if (b.dim() != m)
        throw std::invalid_argument("decompose_0m2: dimension mismatch");
    Decompose2Result res;
    if (rank(a) < m) {
        res.status = DecomposeStatus::SingularA;
        return res;
    }
    const F2Matrix m_factor = multiply(anti_diagonal(m), a);
    const LuResult lu = lu_decompose(multiply(b, inverse(m_factor)));
    if (!lu.ok) {
        res.status = DecomposeStatus::NotLU;
        res.failed_minor = lu.failed_minor;
        return res;
    }
    res.factors = NetDecomposition2{lu.lower, lu.upper, m_factor};
    return res;
}

GeneratorTuple compose_0m2(const F2Matrix& l, const F2Matrix& u,
                           const F2Matrix& m_factor) {
    const int m = l.dim();
    if (u.dim() != m || m_factor.dim() != m)
        throw std::invalid_argument("compose_0m2: dimension mismatch");
    if (!is_lower_triangular_nonsingular(l))
        throw std::invalid_argument("compose_0m2: L factor is not unit lower triangular");
    if (!is_upper_triangular_nonsingular(u))
        throw std::invalid_argument("compose_0m2: U factor is not unit upper triangular");
    if (rank(m_factor) < m)
        throw std::invalid_argument("compose_0m2: M factor is singular");
    return GeneratorTuple({multiply(anti_diagonal(m), m_factor),
                           multiply(l, multiply(u, m_factor))});
}

bool check_upper_pair(const F2Matrix& u1, const F2Matrix& u2) {
    if (u1.dim() != u2.dim())
        throw std::invalid_argument("check_upper_pair: dimension mismatch");
    if (!is_upper_triangular_nonsingular(u1) ||
        !is_upper_triangular_nonsingular(u2))
        throw std::invalid_argument("check_upper_pair: inputs must be unit upper triangular");
    return u2 == multiply(pascal(u1.dim()), u1);
}

PrefixVerdict decide_01_sequence_prefix(const MatrixPrefix& b) {
    const LuResult lu = lu_decompose(b.window);
    if (!lu.ok)
        return {false, lu.failed_minor};
    return {true, b.depth()};
}

PrefixVerdict decide_02_sequence_prefix(const MatrixPrefix& b,
                                        const MatrixPrefix& c) {
    if (b.depth() != c.depth())
        throw std::invalid_argument("decide_02_sequence_prefix: window depths differ");
    const int d = b.depth();
    const LuResult lu = lu_decompose(b.window);
    // Depth where the B-condition first breaks (d+1: never).  The
    // C-condition can still fail earlier, so it must be examined on the
    // largest window where B factors before that depth wins.
    const int b_fail = lu.ok ? d + 1 : lu.failed_minor;
    const int reach = b_fail - 1;
    if (reach > 0) {
        const F2Matrix upper =
            lu.ok ? lu.upper : lu_decompose(prefix(b.window, reach)).upper;
        const F2Matrix residual = multiply(
            multiply(prefix(c.window, reach), inverse(upper)), pascal(reach));
        // The depth-k view of the residual is determined by the depth-k
        // windows of B and C alone (both right factors are upper
        // triangular), so the smallest k whose view breaks lower
        // unitriangularity is the definitive failure depth.
        for (int k = 1; k <= reach; ++k)
            if (!is_lower_triangular_nonsingular(prefix(residual, k)))
                return {false, k};
    }
    if (!lu.ok)
        return {false, b_fail};
    return {true, d};
}

Enumerate0m3::Enumerate0m3(int m) : m_(m) {
    if (m < 1)
        throw std::invalid_argument("Enumerate0m3: m must be positive");
    if (m > 3)
        throw std::length_error("Enumerate0m3: full enumeration is only feasible for m <= 3");
    tri_count_ = std::uint64_t{1} << (m * (m - 1) / 2);
    mat_count_ = std::uint64_t{1} << (m * m);
    std::uint64_t gl = 1;
    for (int i = 0; i < m; ++i)
        gl *= (std::uint64_t{1} << m) - (std::uint64_t{1} << i);
    total_ = gl * tri_count_ * tri_count_ * tri_count_;
}

std::optional<GeneratorTuple> Enumerate0m3::next() {
    while (!done_) {
        const std::uint64_t l1 = l1_, l2 = l2_, u = u_, cand = mat_;
        if (++mat_ == mat_count_) {
            mat_ = 0;
            if (++u_ == tri_count_) {
                u_ = 0;
                if (++l2_ == tri_count_) {
                    l2_ = 0;
                    if (++l1_ == tri_count_)
                        done_ = true;
                }
            }
        }
        const F2Matrix m_cand = decode_full(cand, m_);
        if (rank(m_cand) == m_)
            return compose_0m3(decode_lower(l1, m_), decode_lower(l2, m_),
                               decode_upper(u, m_), m_cand);
    }
    return std::nullopt;
}

NetDecomposition3 random_0m3_factors(int m, std::mt19937_64& rng) {
    F2Matrix l1 = random_lower(m, rng);
    F2Matrix l2 = random_lower(m, rng);
    F2Matrix u = random_upper(m, rng);
    F2Matrix m_factor = random_nonsingular(m, rng);
    return {std::move(l1), std::move(l2), std::move(u), std::move(m_factor)};
}

GeneratorTuple random_0m3(int m, std::mt19937_64& rng) {
    const NetDecomposition3 f = random_0m3_factors(m, rng);
    return compose_0m3(f.l1, f.l2, f.u, f.m_factor);
}

} // namespace dnet

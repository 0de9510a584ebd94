#include <doctest.h>

#include <random>
#include <set>

#include "dnet/f2_matrix.hpp"
#include "dnet/f2_random.hpp"
#include "oracles.hpp"

using namespace dnet;
using oracle::mat_from_rows;

namespace {

F2Matrix random_bits(int m, std::mt19937_64& rng) {
    F2Matrix a(m);
    for (int i = 1; i <= m; ++i)
        a.set_row(i, rng());
    return a;
}

} // namespace

TEST_CASE("construction and entry access") {
    F2Matrix a(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(a.at(i, j) == 0);
    a.set(2, 3, 1);
    CHECK(a.at(2, 3) == 1);
    CHECK(a.row(2) == 0b100);
    a.set(2, 3, 0);
    CHECK(a.row(2) == 0);

    CHECK_THROWS_AS(F2Matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(F2Matrix(65), std::invalid_argument);
    CHECK_THROWS_AS(a.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(a.at(1, 4), std::out_of_range);
    CHECK_THROWS_AS(a.row(4), std::out_of_range);
}

TEST_CASE("set_row masks to the dimension") {
    F2Matrix a(3);
    a.set_row(1, ~std::uint64_t{0});
    CHECK(a.row(1) == 0b111);
    F2Matrix b(64);
    b.set_row(64, ~std::uint64_t{0});
    CHECK(b.row(64) == ~std::uint64_t{0});
}

TEST_CASE("structural matrices") {
    CHECK(identity(2) == mat_from_rows({"10", "01"}));
    CHECK(anti_diagonal(3) == mat_from_rows({"001", "010", "100"}));
    // binomial parity triangles of sizes 2..4
    CHECK(pascal(2) == mat_from_rows({"11", "01"}));
    CHECK(pascal(3) == mat_from_rows({"111", "010", "001"}));
    CHECK(pascal(4) == mat_from_rows({"1111", "0101", "0011", "0001"}));
    CHECK(pascal(1) == identity(1));

    for (int m : {1, 2, 3, 5, 8, 31, 64}) {
        CHECK(rank(anti_diagonal(m)) == m);
        CHECK(is_upper_triangular_nonsingular(pascal(m)));
        // involutions
        CHECK(multiply(anti_diagonal(m), anti_diagonal(m)) == identity(m));
        CHECK(multiply(pascal(m), pascal(m)) == identity(m));
    }
}

TEST_CASE("pascal windows are consistent") {
    for (int m : {4, 7, 16, 64})
        for (int k = 1; k <= m; k = k * 2 + 1)
            CHECK(prefix(pascal(m), k) == pascal(k));
}

TEST_CASE("multiply matches the entry-level definition") {
    CHECK(multiply(mat_from_rows({"10", "11"}), mat_from_rows({"11", "01"})) ==
          mat_from_rows({"11", "10"}));
    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 50; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 10);
        const F2Matrix x = random_bits(m, rng), y = random_bits(m, rng);
        CHECK(multiply(x, y) == oracle::multiply(x, y));
        CHECK(x * y == multiply(x, y));
    }
    CHECK_THROWS_AS(multiply(F2Matrix(2), F2Matrix(3)), std::invalid_argument);
}

TEST_CASE("apply is the matrix-vector product") {
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 30; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const F2Matrix a = random_bits(m, rng);
        const std::uint64_t x = rng() & ((std::uint64_t{1} << m) - 1);
        std::uint64_t want = 0;
        for (int i = 1; i <= m; ++i) {
            int acc = 0;
            for (int j = 1; j <= m; ++j)
                acc ^= a.at(i, j) & static_cast<int>((x >> (j - 1)) & 1);
            want |= static_cast<std::uint64_t>(acc) << (i - 1);
        }
        CHECK(a.apply(x) == want);
    }
}

TEST_CASE("rank agrees with grid elimination") {
    CHECK(rank(F2Matrix(4)) == 0);
    CHECK(rank(identity(7)) == 7);
    CHECK(rank(mat_from_rows({"11", "11"})) == 1);
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const F2Matrix a = random_bits(m, rng);
        CHECK(rank(a) == oracle::rank(a));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(identity(3)) == identity(3));
    CHECK(inverse(anti_diagonal(4)) == anti_diagonal(4));
    CHECK(inverse(pascal(3)) == pascal(3)); // involution, checked via multiply below
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 12);
        const F2Matrix a = random_nonsingular(m, rng);
        const F2Matrix ainv = inverse(a);
        CHECK(multiply(a, ainv) == identity(m));
        CHECK(multiply(ainv, a) == identity(m));
        CHECK(inverse(ainv) == a);
    }
    CHECK_THROWS_AS(inverse(F2Matrix(3)), SingularMatrixError);
    CHECK_THROWS_AS(inverse(mat_from_rows({"11", "11"})), SingularMatrixError);
}

TEST_CASE("triangular predicates") {
    CHECK(is_lower_triangular_nonsingular(identity(5)));
    CHECK(is_upper_triangular_nonsingular(identity(5)));
    CHECK(is_lower_triangular_nonsingular(mat_from_rows({"10", "11"})));
    CHECK_FALSE(is_upper_triangular_nonsingular(mat_from_rows({"10", "11"})));
    CHECK_FALSE(is_lower_triangular_nonsingular(anti_diagonal(2)));
    CHECK_FALSE(is_upper_triangular_nonsingular(anti_diagonal(2)));
    // zero diagonal entry disqualifies even a structurally triangular matrix
    CHECK_FALSE(is_lower_triangular_nonsingular(mat_from_rows({"10", "10"})));

    // the only matrix that is both unit lower and unit upper is I
    for (const auto& a : oracle::all_matrices(2)) {
        const bool both = is_lower_triangular_nonsingular(a) &&
                          is_upper_triangular_nonsingular(a);
        CHECK(both == (a == identity(2)));
    }
}

TEST_CASE("lu_decompose on fixed inputs") {
    const LuResult id = lu_decompose(identity(3));
    CHECK(id.ok);
    CHECK(id.lower == identity(3));
    CHECK(id.upper == identity(3));

    const LuResult r = lu_decompose(mat_from_rows({"11", "10"}));
    CHECK(r.ok);
    CHECK(r.lower == mat_from_rows({"10", "11"}));
    CHECK(r.upper == mat_from_rows({"11", "01"}));
    CHECK(multiply(r.lower, r.upper) == mat_from_rows({"11", "10"}));

    const LuResult bad = lu_decompose(anti_diagonal(2));
    CHECK_FALSE(bad.ok);
    CHECK(bad.failed_minor == 1);
}

TEST_CASE("lu_decompose: existence, uniqueness and failed minors by exhaustion") {
    for (int m = 1; m <= 3; ++m) {
        for (const auto& b : oracle::all_matrices(m)) {
            // reference: all leading minors nonsingular?
            int first_bad = 0;
            for (int k = 1; k <= m && !first_bad; ++k)
                if (oracle::rank(prefix(b, k)) < k)
                    first_bad = k;
            const auto pairs = oracle::lu_by_exhaustion(b);
            const LuResult r = lu_decompose(b);
            if (first_bad == 0) {
                REQUIRE(r.ok);
                REQUIRE(pairs.size() == 1); // unique unit factorization
                CHECK(r.lower == pairs[0].first);
                CHECK(r.upper == pairs[0].second);
                CHECK(is_lower_triangular_nonsingular(r.lower));
                CHECK(is_upper_triangular_nonsingular(r.upper));
                CHECK(multiply(r.lower, r.upper) == b);
            } else {
                CHECK_FALSE(r.ok);
                CHECK(pairs.empty());
                CHECK(r.failed_minor == first_bad);
            }
        }
    }
}

TEST_CASE("prefix") {
    CHECK(prefix(pascal(4), 2) == pascal(2));
    const F2Matrix j4 = anti_diagonal(4);
    CHECK(prefix(j4, 4) == j4);
    CHECK(prefix(j4, 2) == F2Matrix(2)); // upper-left corner of J is zero
    CHECK_THROWS_AS(prefix(j4, 0), std::out_of_range);
    CHECK_THROWS_AS(prefix(j4, 5), std::out_of_range);
}

TEST_CASE("random samplers hit only their target sets") {
    std::mt19937_64 rng(5);
    CHECK(random_lower(1, rng) == identity(1));

    for (int iter = 0; iter < 100; ++iter) {
        const F2Matrix u = random_upper(2, rng);
        CHECK((u == identity(2) || u == mat_from_rows({"11", "01"})));
    }
    for (int iter = 0; iter < 100; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 16);
        CHECK(rank(random_nonsingular(m, rng)) == m);
        CHECK(is_lower_triangular_nonsingular(random_lower(m, rng)));
        CHECK(is_upper_triangular_nonsingular(random_upper(m, rng)));
    }
}

TEST_CASE("random_nonsingular(2) covers all of GL(2)") {
    int nonsingular_2x2 = 0;
    for (const auto& a : oracle::all_matrices(2))
        if (oracle::rank(a) == 2)
            ++nonsingular_2x2;
    CHECK(nonsingular_2x2 == 6);

    std::mt19937_64 rng(6);
    std::set<std::uint64_t> seen;
    for (int iter = 0; iter < 600; ++iter) {
        const F2Matrix a = random_nonsingular(2, rng);
        seen.insert(a.row(1) | (a.row(2) << 2));
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("samplers are deterministic for a fixed seed") {
    std::mt19937_64 a(99), b(99);
    for (int iter = 0; iter < 20; ++iter) {
        CHECK(random_nonsingular(9, a) == random_nonsingular(9, b));
        CHECK(random_lower(9, a) == random_lower(9, b));
        CHECK(random_upper(9, a) == random_upper(9, b));
    }
}

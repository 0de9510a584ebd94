#include "dnet/net_check.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace dnet {

namespace {

// XOR basis over row words.  insert() writes at most one slot and never
// rewrites existing ones, so erasing that slot restores the previous
// state exactly — which is what the backtracking scan below relies on.
class RowBasis {
  public:
    // Slot index the reduced row was stored in, or -1 if the row lies
    // in the span of the rows already present.
    int insert(std::uint64_t v) {
        while (v) {
            const int p = 63 - std::countl_zero(v);
            if (!slots_[p]) {
                slots_[p] = v;
                return p;
            }
            v ^= slots_[p];
        }
        return -1;
    }
    void erase(int slot) { slots_[slot] = 0; }

  private:
    std::array<std::uint64_t, 64> slots_{};
};

// One rank level of the criterion: every composition (d_1,...,d_s) of k
// must stack the first d_j rows of each generator into a full-rank
// matrix.  Compositions are walked in lexicographic order by a DFS that
// keeps a shared incremental basis, so each row is inserted once per
// branch instead of once per composition.  A failed insert means every
// completion of the current branch is rank deficient; the lex-least of
// those completions puts the whole remainder into the final axis, which
// makes the first failure encountered the lex-smallest failing
// composition overall.
class LevelScan {
  public:
    explicit LevelScan(const GeneratorTuple& gen) : gen_(gen) {}

    // True when all compositions of k pass; otherwise fills witness.
    bool run(int k, std::vector<int>& witness) {
        witness.clear();
        path_.clear();
        witness_ = &witness;
        return axis(1, k);
    }

  private:
    bool axis(int j, int remaining) {
        const int s = gen_.s();
        std::vector<int> slots;
        if (j == s) {
            // Final part is forced to `remaining`.
            for (int r = 1; r <= remaining; ++r) {
                const int slot = basis_.insert(gen_.matrix(j).row(r));
                if (slot < 0) {
                    *witness_ = path_;
                    witness_->push_back(remaining);
                    unwind(slots);
                    return false;
                }
                slots.push_back(slot);
            }
            unwind(slots);
            return true;
        }
        bool ok = true;
        for (int d = 0; d <= remaining; ++d) {
            path_.push_back(d);
            ok = axis(j + 1, remaining - d);
            path_.pop_back();
            if (!ok)
                break;
            if (d < remaining) {
                const int slot = basis_.insert(gen_.matrix(j).row(d + 1));
                if (slot < 0) {
                    *witness_ = path_;
                    witness_->push_back(d + 1);
                    for (int rest = j + 1; rest < s; ++rest)
                        witness_->push_back(0);
                    witness_->push_back(remaining - d - 1);
                    ok = false;
                    break;
                }
                slots.push_back(slot);
            }
        }
        unwind(slots);
        return ok;
    }

    void unwind(const std::vector<int>& slots) {
        for (const int slot : slots)
            basis_.erase(slot);
    }

    const GeneratorTuple& gen_;
    RowBasis basis_;
    std::vector<int> path_;
    std::vector<int>* witness_ = nullptr;
};

// Visit compositions of k into s nonnegative parts in lexicographic
// order; the visitor returns false to stop.  Returns false if stopped.
template <typename F>
bool visit_compositions(int k, int s, std::vector<int>& parts, F&& f) {
    if (static_cast<int>(parts.size()) == s - 1) {
        parts.push_back(k);
        const bool keep_going = f(parts);
        parts.pop_back();
        return keep_going;
    }
    for (int d = 0; d <= k; ++d) {
        parts.push_back(d);
        const bool keep_going = visit_compositions(k - d, s, parts, f);
        parts.pop_back();
        if (!keep_going)
            return false;
    }
    return true;
}

int rank_of_rows(const std::vector<std::uint64_t>& rows) {
    std::array<std::uint64_t, 64> basis{};
    int r = 0;
    for (std::uint64_t v : rows) {
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

} // namespace

TReport strength_by_rank(const GeneratorTuple& gen) {
    TReport rep;
    rep.m = gen.m();
    rep.s = gen.s();
    LevelScan scan(gen);
    // A full-rank stack stays full rank when rows are removed, and any
    // composition of k' < k extends to one of k, so a passing level
    // implies all lower levels pass.  Scan downward and stop at the
    // first passing level; the previous (failing) level supplies the
    // witness.
    std::vector<int> witness_above;
    for (int k = rep.m; k >= 1; --k) {
        std::vector<int> w;
        if (scan.run(k, w)) {
            rep.strength = k;
            rep.t_value = rep.m - k;
            if (k < rep.m)
                rep.witness = std::move(witness_above);
            return rep;
        }
        witness_above = std::move(w);
    }
    rep.strength = 0;
    rep.t_value = rep.m;
    rep.witness = std::move(witness_above);
    return rep;
}

TReport strength_by_rank_naive(const GeneratorTuple& gen) {
    TReport rep;
    rep.m = gen.m();
    rep.s = gen.s();
    for (int k = 1; k <= rep.m; ++k) {
        std::vector<int> parts;
        std::vector<int> failing;
        const bool all_pass =
            visit_compositions(k, rep.s, parts, [&](const std::vector<int>& comp) {
                std::vector<std::uint64_t> rows;
                rows.reserve(k);
                for (int j = 1; j <= rep.s; ++j)
                    for (int r = 1; r <= comp[j - 1]; ++r)
                        rows.push_back(gen.matrix(j).row(r));
                if (rank_of_rows(rows) == k)
                    return true;
                failing = comp;
                return false;
            });
        if (!all_pass) {
            rep.strength = k - 1;
            rep.t_value = rep.m - rep.strength;
            rep.witness = std::move(failing);
            return rep;
        }
    }
    rep.strength = rep.m;
    rep.t_value = 0;
    return rep;
}

GeometricReport is_net_geometric(const NetPoints& pts, int t, bool allow_large) {
    if (pts.m < 0 || pts.m > 32 || pts.s < 1 ||
        pts.count() != (std::uint64_t{1} << pts.m))
        throw std::invalid_argument("is_net_geometric: malformed point set");
    if (t < 0 || t > pts.m)
        throw std::invalid_argument("is_net_geometric: t out of range");
    if (!allow_large && (pts.s > 3 || pts.m > 12))
        throw std::length_error(
            "is_net_geometric: instance above the default cap (s <= 3, m <= 12)");

    const int volume_bits = pts.m - t; // boxes of volume 2^{t-m}
    const std::uint64_t want = std::uint64_t{1} << t;
    GeometricReport rep;
    rep.passed = true;

    std::vector<std::uint32_t> counts;
    std::vector<int> parts;
    visit_compositions(volume_bits, pts.s, parts, [&](const std::vector<int>& shape) {
        counts.assign(std::uint64_t{1} << volume_bits, 0);
        // Box index of a point: per-axis top c_j digits, packed with
        // axis 1 most significant, so ascending key = lexicographic
        // order on offset tuples.
        for (std::uint64_t n = 0; n < pts.count(); ++n) {
            std::uint64_t key = 0;
            for (int j = 0; j < pts.s; ++j)
                key = (key << shape[j]) |
                      (std::uint64_t{pts.axes[j][n]} >> (pts.m - shape[j]));
            ++counts[key];
        }
        for (std::uint64_t key = 0; key < counts.size(); ++key) {
            if (counts[key] != want) {
                ElementaryInterval box;
                box.shape = shape;
                box.offsets.assign(pts.s, 0);
                std::uint64_t rest = key;
                for (int j = pts.s - 1; j >= 0; --j) {
                    box.offsets[j] = rest & ((std::uint64_t{1} << shape[j]) - 1);
                    rest >>= shape[j];
                }
                rep.passed = false;
                rep.witness = std::move(box);
                rep.witness_count = counts[key];
                return false;
            }
        }
        return true;
    });
    return rep;
}

SequencePrefixReport check_sequence_prefix(const std::vector<MatrixPrefix>& gens,
                                           int max_depth, int t) {
    if (gens.empty())
        throw std::invalid_argument("check_sequence_prefix: need at least one generator");
    if (t < 0)
        throw std::invalid_argument("check_sequence_prefix: t must be nonnegative");
    int window = gens[0].depth();
    for (const auto& g : gens)
        window = std::min(window, g.depth());
    if (max_depth < 1 || max_depth > window)
        throw std::out_of_range("check_sequence_prefix: depth exceeds the available window");

    SequencePrefixReport rep;
    rep.max_depth = max_depth;
    rep.t = t;
    rep.certified = true;
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<F2Matrix> mats;
        mats.reserve(gens.size() + 1);
        mats.push_back(anti_diagonal(d));
        for (const auto& g : gens)
            mats.push_back(prefix(g.window, d));
        TReport r = strength_by_rank(GeneratorTuple(std::move(mats)));
        const bool pass = r.t_value <= t;
        if (!pass && rep.certified) {
            rep.certified = false;
            rep.first_failing_depth = d;
        }
        rep.depths.push_back({d, pass, std::move(r)});
    }
    return rep;
}

namespace {

using u128 = unsigned __int128;

boost::multiprecision::cpp_int to_cpp_int(u128 v) {
    boost::multiprecision::cpp_int hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

} // namespace

double l2_star_discrepancy_squared(const NetPoints& pts) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;

    const std::uint64_t n_points = pts.count();
    if (pts.s < 1 || n_points == 0)
        throw std::invalid_argument("discrepancy: empty point set");
    if (n_points > (std::uint64_t{1} << 16))
        throw std::length_error("discrepancy: more than 2^16 points");

    const int m = pts.m;
    const int s = pts.s;
    const std::uint64_t q = std::uint64_t{1} << m; // coordinate denominator

    // S1 = sum_n prod_i (q^2 - a_{n,i}^2): the middle Warnock term with
    // x = a/q, (1 - x^2)/2 = (q^2 - a^2) / (2 q^2).
    cpp_int s1 = 0;
    for (std::uint64_t n = 0; n < n_points; ++n) {
        cpp_int prod = 1;
        for (int j = 0; j < s; ++j) {
            const std::uint64_t a = pts.axes[j][n];
            prod *= q * q - a * a;
        }
        s1 += prod;
    }

    // S2 = sum over ordered pairs (n,n') of prod_i (q - max(a, a')),
    // folded to unordered pairs by symmetry.  Each term is < 2^{ms}, so
    // for moderate ms a 128-bit accumulator takes a whole chunk of
    // terms before spilling into the big integer.
    cpp_int s2 = 0;
    if (m * s <= 120) {
        const int headroom = 126 - m * s; // doubled off-diagonal terms included
        const std::uint64_t chunk_cap =
            std::uint64_t{1} << std::min(headroom, 24);
        u128 acc = 0;
        std::uint64_t used = 0;
        auto add_term = [&](std::uint64_t a, std::uint64_t b, unsigned mult) {
            u128 prod = mult;
            for (int j = 0; j < s; ++j)
                prod *= q - std::max(pts.axes[j][a], pts.axes[j][b]);
            acc += prod;
            if (++used == chunk_cap) {
                s2 += to_cpp_int(acc);
                acc = 0;
                used = 0;
            }
        };
        for (std::uint64_t n = 0; n < n_points; ++n) {
            add_term(n, n, 1);
            for (std::uint64_t n2 = n + 1; n2 < n_points; ++n2)
                add_term(n, n2, 2);
        }
        s2 += to_cpp_int(acc);
    } else {
        for (std::uint64_t n = 0; n < n_points; ++n) {
            for (std::uint64_t n2 = n; n2 < n_points; ++n2) {
                cpp_int prod = n2 == n ? 1 : 2;
                for (int j = 0; j < s; ++j)
                    prod *= q - std::max(pts.axes[j][n], pts.axes[j][n2]);
                s2 += prod;
            }
        }
    }

    cpp_int three_s = 1, two_q2_s = 1, q_s = 1;
    for (int j = 0; j < s; ++j) {
        three_s *= 3;
        two_q2_s *= 2 * cpp_int(q) * q;
        q_s *= q;
    }
    const cpp_int big_n = n_points;
    const cpp_rational exact = cpp_rational(cpp_int(1), three_s)
                             - cpp_rational(2 * s1, big_n * two_q2_s)
                             + cpp_rational(s2, big_n * big_n * q_s);
    return exact.convert_to<double>();
}

} // namespace dnet

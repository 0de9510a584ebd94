// Structure theory of optimal base-2 digital nets in dimensions 2 and 3,
// as decision procedures and generators.
//
//   * (A,B,C) generates a (0,m,3)-net  iff  (A,B,C) = (JM, L1·U·M, L2·P·U·M)
//     for unit lower triangular L1, L2, unit upper triangular U and
//     nonsingular M (J = anti-diagonal, P = Pascal).
//   * (A,B)  generates a (0,m,2)-net  iff  (A,B) = (JM, L·U·M).
//   * Infinite generator pairs, observed through depth-d windows:
//     a (0,1)-sequence needs B = L·U; a (0,2)-sequence needs B = L1·U
//     and C = L2·P·U, checked here window-exactly.
//
// decompose_* recover the factors or return a machine-readable reason
// certifying the input is NOT a net; compose_* rebuild tuples from
// factors; enumerate/sample walk the parametrized family.

#ifndef DNET_CHARACTERIZE_HPP
#define DNET_CHARACTERIZE_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "dnet/digital_net.hpp"
#include "dnet/f2_matrix.hpp"

namespace dnet {

// Factors of an accepted (0,m,3) triple: recomposition
// (J*m_factor, l1*u*m_factor, l2*pascal*u*m_factor) reproduces the
// input exactly, and the factorization is unique.
struct NetDecomposition3 {
    F2Matrix l1;
    F2Matrix l2;
    F2Matrix u;
    F2Matrix m_factor;
};

// Factors of an accepted (0,m,2) pair: (J*m_factor, l*u*m_factor).
struct NetDecomposition2 {
    F2Matrix l;
    F2Matrix u;
    F2Matrix m_factor;
};

enum class DecomposeStatus {
    Ok,
    SingularA,   // first matrix singular: cannot be a 0-net
    NotLU,       // reduced second matrix has a singular leading minor
    L2NotLower,  // triangular residual of the third matrix is not lower
};

const char* to_string(DecomposeStatus status);

struct Decompose3Result {
    DecomposeStatus status = DecomposeStatus::Ok;
    int failed_minor = 0; // set when status == NotLU
    std::optional<NetDecomposition3> factors;

    bool ok() const { return status == DecomposeStatus::Ok; }
};

struct Decompose2Result {
    DecomposeStatus status = DecomposeStatus::Ok;
    int failed_minor = 0; // set when status == NotLU
    std::optional<NetDecomposition2> factors;

    bool ok() const { return status == DecomposeStatus::Ok; }
};

// Classify a triple: extracts the unique factors when (A,B,C) generates
// a (0,m,3)-net, otherwise reports which structural condition failed.
// Both outcomes are definitive certificates.
Decompose3Result decompose_0m3(const F2Matrix& a, const F2Matrix& b,
                               const F2Matrix& c);

// Build (J·M, L1·U·M, L2·P·U·M); the result always generates a
// (0,m,3)-net.  Throws std::invalid_argument if a factor is not of the
// required shape.
GeneratorTuple compose_0m3(const F2Matrix& l1, const F2Matrix& l2,
                           const F2Matrix& u, const F2Matrix& m_factor);

// Two-dimensional analogues.
Decompose2Result decompose_0m2(const F2Matrix& a, const F2Matrix& b);
GeneratorTuple compose_0m2(const F2Matrix& l, const F2Matrix& u,
                           const F2Matrix& m_factor);

// For unit upper triangular U1, U2: true iff U2 = P·U1, which holds
// exactly when (J, U1, U2) generates a (0,m,3)-net.
bool check_upper_pair(const F2Matrix& u1, const F2Matrix& u2);

// Window-level verdict about an infinite-matrix property.  Rejection is
// definitive (the property fails at `depth` already); acceptance only
// certifies the property through `depth`, never beyond.
struct PrefixVerdict {
    bool certified = false;
    int depth = 0; // certified depth on success, smallest failing depth on rejection
};

// (0,1)-sequence test: B must factor as L·U at every depth; rejects at
// the smallest singular leading minor.
PrefixVerdict decide_01_sequence_prefix(const MatrixPrefix& b);

// (0,2)-sequence test at the common window depth d: factors
// B^(d) = L1·U, then requires C^(d)·U^{-1}·P^{-1} to be lower
// unitriangular; rejects at the smallest depth where either condition
// breaks.  Depths must match.
PrefixVerdict decide_02_sequence_prefix(const MatrixPrefix& b,
                                        const MatrixPrefix& c);

// Streams every (0,m,3)-net-generating triple exactly once, ordered by
// the factor parametrization: L1 outermost, then L2, U, M, each factor
// iterated in row-major bit order (M skips singular candidates).
// Injectivity of the parametrization guarantees no duplicates.
// Full enumeration is only feasible for m <= 3.
class Enumerate0m3 {
  public:
    explicit Enumerate0m3(int m); // throws std::length_error for m > 3

    // Next triple, or nullopt when the family is exhausted.
    std::optional<GeneratorTuple> next();

    // |GL(m,2)| * 2^{3m(m-1)/2}, the exact stream length.
    std::uint64_t total() const { return total_; }

  private:
    int m_;
    std::uint64_t tri_count_;  // 2^{m(m-1)/2} per triangular factor
    std::uint64_t mat_count_;  // 2^{m*m} raw candidates for M
    std::uint64_t l1_ = 0, l2_ = 0, u_ = 0, mat_ = 0;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

// Uniform draw from the (0,m,3) family via uniform factors
// (L1, L2, U, M drawn in that order).
NetDecomposition3 random_0m3_factors(int m, std::mt19937_64& rng);
GeneratorTuple random_0m3(int m, std::mt19937_64& rng);

} // namespace dnet

#endif

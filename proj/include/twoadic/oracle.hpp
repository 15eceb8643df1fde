#pragma once

// Exact Stirling numbers of both kinds and their exact 2-adic valuations.
//
// Valuations are computed by running the triangle recurrence modulo 2^T.
// A nonzero final residue gives the valuation exactly; a zero residue
// doubles T and recomputes, and past kMaxResiduePrecision the full
// arbitrary-precision value is used instead.

#include "twoadic/exact.hpp"
#include "twoadic/residue.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace twoadic::oracle {

enum class Kind { first = 1, second = 2 };

inline constexpr unsigned kDefaultPrecision = 64;
inline constexpr unsigned kMaxResiduePrecision = 4096;

/// S(n, k), 0 <= k <= n.
ExactInt stirling2(unsigned n, unsigned k);
/// Signed s(n, k), 0 <= k <= n.
ExactInt stirling1(unsigned n, unsigned k);
ExactInt stirling(Kind kind, unsigned n, unsigned k);

/// S(n, k) (second kind) or |s(n, k)| (first kind) reduced modulo 2^precision.
TruncatedResidue stirling_residue(Kind kind, unsigned n, unsigned k, unsigned precision);

/// How a single valuation was obtained.
struct ValuationTrace {
    unsigned nu = 0;
    unsigned precision_used = 0;  // 0 when the exact fallback was taken
    bool exact_fallback = false;
};

ValuationTrace nu_stirling_traced(Kind kind, unsigned n, unsigned k,
                                  unsigned initial_precision = kDefaultPrecision);

/// Exact nu(S(n, k)) for 1 <= k <= n.
unsigned nu_stirling2(unsigned n, unsigned k, unsigned initial_precision = kDefaultPrecision);
/// Exact nu(s(n, k)) for 1 <= k <= n; the sign is irrelevant.
unsigned nu_stirling1(unsigned n, unsigned k, unsigned initial_precision = kDefaultPrecision);
unsigned nu_stirling(Kind kind, unsigned n, unsigned k,
                     unsigned initial_precision = kDefaultPrecision);

/**
 * Row-at-a-time valuation memo for one worker. Rows are extended lazily;
 * a query past the current column span restarts the triangle with a wider
 * span. Not thread-safe: give each worker its own instance.
 */
class ValuationOracle {
public:
    explicit ValuationOracle(Kind kind, unsigned precision = kDefaultPrecision);

    Kind kind() const noexcept { return kind_; }
    unsigned precision() const noexcept { return precision_; }

    unsigned nu(unsigned n, unsigned k);
    /// Valuations of row n for columns k_lo..k_hi (clamped to 1..n).
    std::vector<unsigned> row(unsigned n, unsigned k_lo, unsigned k_hi);

    /// Number of entries that needed a wider precision so far.
    std::size_t escalations() const noexcept { return escalated_.size(); }

private:
    static constexpr std::uint8_t kUnresolved = 0xff;

    void restart(unsigned span);
    void extend_to(unsigned n);
    unsigned lookup(unsigned n, unsigned k);

    Kind kind_;
    unsigned precision_;
    unsigned span_ = 0;
    unsigned rows_done_ = 0;
    ResidueRow current_;
    std::vector<std::vector<std::uint8_t>> vals_;  // vals_[n][k-1], k <= min(n, span_)
    std::map<std::pair<unsigned, unsigned>, unsigned> escalated_;
};

/// Immutable triangle of valuations for all 1 <= k <= n <= n_max. Safe to
/// read from any number of threads.
class ValuationTriangle {
public:
    ValuationTriangle(Kind kind, unsigned n_max, unsigned precision = kDefaultPrecision);

    Kind kind() const noexcept { return kind_; }
    unsigned n_max() const noexcept { return n_max_; }
    /// Throws std::out_of_range outside the triangle.
    unsigned nu(unsigned n, unsigned k) const;

private:
    Kind kind_;
    unsigned n_max_;
    std::vector<std::uint16_t> data_;  // row-major, row n starts at n(n-1)/2
};

}  // namespace twoadic::oracle

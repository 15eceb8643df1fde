#include "twoadic/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twoadic::oracle {

namespace {

void check_domain(unsigned n, unsigned k, bool positive) {
    if (k > n)
        throw std::domain_error("Stirling index out of range: k=" + std::to_string(k) +
                                " > n=" + std::to_string(n));
    if (positive && k == 0) throw std::domain_error("valuation needs 1 <= k <= n");
}

// Multiplier of row[col] when passing from row r-1 to row r. The first
// kind uses the unsigned numbers |s(n,k)|, which share the valuation.
std::uint64_t factor(Kind kind, unsigned r, unsigned col) {
    return kind == Kind::second ? col : r - 1;
}

// Row n of the triangle restricted to columns <= k, evaluated exactly.
ExactInt exact_entry(Kind kind, unsigned n, unsigned k) {
    std::vector<ExactInt> row(k + 1, 0);
    row[0] = 1;
    for (unsigned r = 1; r <= n; ++r) {
        const unsigned lo = k + r > n ? k + r - n : 0;
        for (unsigned j = std::min(r, k) + 1; j-- > lo;) {
            if (kind == Kind::second) {
                row[j] *= j;
                if (j > 0) row[j] += row[j - 1];
            } else {
                // s(r,j) = s(r-1,j-1) - (r-1) s(r-1,j)
                row[j] *= -static_cast<long>(r - 1);
                if (j > 0) row[j] += row[j - 1];
            }
        }
    }
    return row[k];
}

}  // namespace

ExactInt stirling2(unsigned n, unsigned k) {
    check_domain(n, k, false);
    return exact_entry(Kind::second, n, k);
}

ExactInt stirling1(unsigned n, unsigned k) {
    check_domain(n, k, false);
    return exact_entry(Kind::first, n, k);
}

ExactInt stirling(Kind kind, unsigned n, unsigned k) {
    return kind == Kind::second ? stirling2(n, k) : stirling1(n, k);
}

TruncatedResidue stirling_residue(Kind kind, unsigned n, unsigned k, unsigned precision) {
    check_domain(n, k, false);
    ResidueRow row(k + 1, precision);
    row.set_one(0);
    for (unsigned r = 1; r <= n; ++r) {
        // only columns feeding (n, k) are kept current
        const unsigned lo = k + r > n ? k + r - n : 0;
        for (unsigned j = std::min(r, k) + 1; j-- > lo;) row.mul_add_prev(j, factor(kind, r, j));
    }
    return row.at(k);
}

ValuationTrace nu_stirling_traced(Kind kind, unsigned n, unsigned k, unsigned initial_precision) {
    check_domain(n, k, true);
    if (initial_precision == 0) throw std::invalid_argument("precision must be positive");
    for (unsigned t = initial_precision; t <= kMaxResiduePrecision; t *= 2) {
        const TruncatedResidue r = stirling_residue(kind, n, k, t);
        if (!r.is_zero()) return {r.valuation(), t, false};
    }
    const ExactInt value = stirling(kind, n, k);
    return {static_cast<unsigned>(nu2(value)), 0, true};
}

unsigned nu_stirling2(unsigned n, unsigned k, unsigned initial_precision) {
    return nu_stirling_traced(Kind::second, n, k, initial_precision).nu;
}

unsigned nu_stirling1(unsigned n, unsigned k, unsigned initial_precision) {
    return nu_stirling_traced(Kind::first, n, k, initial_precision).nu;
}

unsigned nu_stirling(Kind kind, unsigned n, unsigned k, unsigned initial_precision) {
    return nu_stirling_traced(kind, n, k, initial_precision).nu;
}

ValuationOracle::ValuationOracle(Kind kind, unsigned precision)
    : kind_(kind), precision_(precision), current_(1, precision) {
    restart(1);
}

void ValuationOracle::restart(unsigned span) {
    span_ = span;
    rows_done_ = 0;
    current_ = ResidueRow(span + 1, precision_);
    current_.set_one(0);
    vals_.assign(1, {});
}

void ValuationOracle::extend_to(unsigned n) {
    vals_.reserve(n + 1);
    for (unsigned r = rows_done_ + 1; r <= n; ++r) {
        const unsigned top = std::min(r, span_);
        for (unsigned j = top + 1; j-- > 0;) current_.mul_add_prev(j, factor(kind_, r, j));
        std::vector<std::uint8_t> vals(top);
        for (unsigned j = 1; j <= top; ++j) {
            if (current_.is_zero(j)) {
                vals[j - 1] = kUnresolved;
            } else {
                const unsigned v = current_.valuation(j);
                // residues are at most 2^precision wide, so v < precision
                vals[j - 1] = v < kUnresolved ? static_cast<std::uint8_t>(v) : kUnresolved;
            }
        }
        vals_.push_back(std::move(vals));
    }
    rows_done_ = std::max(rows_done_, n);
}

unsigned ValuationOracle::lookup(unsigned n, unsigned k) {
    const std::uint8_t v = vals_[n][k - 1];
    if (v != kUnresolved) return v;
    const auto key = std::make_pair(n, k);
    if (auto it = escalated_.find(key); it != escalated_.end()) return it->second;
    const unsigned exact = nu_stirling(kind_, n, k, std::min(precision_ * 2, kMaxResiduePrecision));
    escalated_.emplace(key, exact);
    return exact;
}

unsigned ValuationOracle::nu(unsigned n, unsigned k) {
    check_domain(n, k, true);
    if (k > span_) restart(std::max(k, 2 * span_));
    if (n > rows_done_) extend_to(n);
    return lookup(n, k);
}

std::vector<unsigned> ValuationOracle::row(unsigned n, unsigned k_lo, unsigned k_hi) {
    k_lo = std::max(k_lo, 1u);
    k_hi = std::min(k_hi, n);
    std::vector<unsigned> out;
    if (n == 0 || k_lo > k_hi) return out;
    if (k_hi > span_) restart(std::max(k_hi, 2 * span_));
    if (n > rows_done_) extend_to(n);
    out.reserve(k_hi - k_lo + 1);
    for (unsigned k = k_lo; k <= k_hi; ++k) out.push_back(lookup(n, k));
    return out;
}

ValuationTriangle::ValuationTriangle(Kind kind, unsigned n_max, unsigned precision)
    : kind_(kind), n_max_(n_max) {
    data_.reserve(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
    ValuationOracle oracle(kind, precision);
    if (n_max > 0) oracle.row(n_max, n_max, n_max);  // size the span once
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned v : oracle.row(n, 1, n)) data_.push_back(static_cast<std::uint16_t>(v));
}

unsigned ValuationTriangle::nu(unsigned n, unsigned k) const {
    if (k == 0 || k > n || n > n_max_)
        throw std::out_of_range("ValuationTriangle: (" + std::to_string(n) + "," +
                                std::to_string(k) + ") outside table of size " +
                                std::to_string(n_max_));
    return data_[static_cast<std::size_t>(n) * (n - 1) / 2 + (k - 1)];
}

}  // namespace twoadic::oracle

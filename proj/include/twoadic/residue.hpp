#pragma once

// Fixed-precision residues modulo 2^T. A nonzero residue determines the
// 2-adic valuation of the value it was reduced from exactly; a zero
// residue only says the valuation is at least T.

#include "twoadic/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twoadic {

/// Value reduced modulo 2^precision, stored as little-endian 64-bit limbs.
class TruncatedResidue {
public:
    explicit TruncatedResidue(unsigned precision_bits);
    TruncatedResidue(const ExactInt& value, unsigned precision_bits);

    unsigned precision() const noexcept { return precision_; }
    std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }

    bool is_zero() const noexcept;
    /// Valuation of the residue; only meaningful (and only allowed) when nonzero.
    unsigned valuation() const;
    ExactInt to_exact() const;

    TruncatedResidue& operator+=(const TruncatedResidue& rhs);
    TruncatedResidue& mul_small(std::uint64_t factor);

    friend bool operator==(const TruncatedResidue&, const TruncatedResidue&) = default;

private:
    void mask_top() noexcept;

    unsigned precision_;
    std::vector<std::uint64_t> limbs_;
};

/**
 * A row of residues sharing one precision, laid out contiguously. The
 * in-place step `row[c] = factor * row[c] + row[c-1]` is the kernel of both
 * Stirling triangle recurrences when columns are visited in descending order.
 */
class ResidueRow {
public:
    ResidueRow(std::size_t columns, unsigned precision_bits);

    std::size_t columns() const noexcept { return columns_; }
    unsigned precision() const noexcept { return precision_; }
    std::size_t limbs_per_entry() const noexcept { return limbs_; }

    void clear() noexcept;
    void set_one(std::size_t col);

    bool is_zero(std::size_t col) const noexcept;
    unsigned valuation(std::size_t col) const;
    TruncatedResidue at(std::size_t col) const;

    /// row[col] = factor * row[col] + row[col - 1]; col == 0 drops the second term.
    void mul_add_prev(std::size_t col, std::uint64_t factor) noexcept;

private:
    std::uint64_t* entry(std::size_t col) noexcept { return data_.data() + col * limbs_; }
    const std::uint64_t* entry(std::size_t col) const noexcept { return data_.data() + col * limbs_; }

    std::size_t columns_;
    unsigned precision_;
    std::size_t limbs_;
    std::uint64_t top_mask_;
    std::vector<std::uint64_t> data_;
};

}  // namespace twoadic

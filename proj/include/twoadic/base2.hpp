#pragma once

// Base-2 digit arithmetic: valuations, digit sums, two-power sets and
// carry profiles of binary additions.

#include <bit>
#include <cstdint>
#include <vector>

namespace twoadic::base2 {

using natural = std::uint64_t;

/// Exponent of the largest power of two dividing n. Throws
/// std::domain_error for n == 0.
unsigned nu(natural n);

/// Number of one-digits of n in base two.
constexpr unsigned sigma(natural n) noexcept { return static_cast<unsigned>(std::popcount(n)); }

/**
 * The set of powers of two occurring in the base-2 expansion of a natural
 * number. The set is stored as that number, so member 2^i is bit i and the
 * set algebra is bitwise.
 */
class TwoPowerSet {
public:
    constexpr TwoPowerSet() noexcept = default;
    constexpr explicit TwoPowerSet(natural bits) noexcept : bits_(bits) {}

    constexpr natural value() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr unsigned size() const noexcept { return sigma(bits_); }

    constexpr bool contains_exponent(unsigned i) const noexcept {
        return i < 64 && ((bits_ >> i) & 1u) != 0;
    }
    /// True when the power of two p is a member; p must itself be a power of two.
    constexpr bool contains(natural p) const noexcept {
        return std::has_single_bit(p) && (bits_ & p) != 0;
    }

    /// Smallest member, 2^nu(n). Throws on the empty set.
    natural min() const;
    /// Largest member, 2^floor(log2 n). Throws on the empty set.
    natural max() const;
    /// Smallest exponent i >= 1 with 2^i a member, or -1 if there is none.
    int least_positive_exponent() const noexcept;

    /// Members in increasing order.
    std::vector<natural> members() const;

    friend constexpr TwoPowerSet operator&(TwoPowerSet a, TwoPowerSet b) noexcept {
        return TwoPowerSet(a.bits_ & b.bits_);
    }
    friend constexpr TwoPowerSet operator|(TwoPowerSet a, TwoPowerSet b) noexcept {
        return TwoPowerSet(a.bits_ | b.bits_);
    }
    /// Set difference.
    friend constexpr TwoPowerSet operator-(TwoPowerSet a, TwoPowerSet b) noexcept {
        return TwoPowerSet(a.bits_ & ~b.bits_);
    }
    friend constexpr bool operator==(TwoPowerSet, TwoPowerSet) noexcept = default;

private:
    natural bits_ = 0;
};

constexpr TwoPowerSet two_power_set(natural n) noexcept { return TwoPowerSet(n); }

/// #([a] ∩ [b]).
constexpr unsigned common_count(natural a, natural b) noexcept { return sigma(a & b); }

/// Carries of the binary addition a + b, split into forced carries (both
/// digits one) and unforced carries (propagated into a single one-digit or
/// into a zero column).
struct CarryProfile {
    unsigned total = 0;
    unsigned forced = 0;
    unsigned unforced = 0;

    friend bool operator==(const CarryProfile&, const CarryProfile&) = default;
};

/// Carry profile of a + b; total is the 2-adic valuation of C(a+b, a).
/// Throws std::overflow_error if a + b does not fit in 64 bits.
CarryProfile nu_binom(natural a, natural b);

/// True when a + b has no unforced carries.
bool no_unforced_carries(natural a, natural b);

/// Parity of the binomial coefficient C(top, bottom) for any integer top,
/// with C(top, bottom) taken as falling factorial over factorial.
bool is_odd_binom(std::int64_t top, natural bottom);

/// No two consecutive one-digits.
constexpr bool is_fibbinary(natural n) noexcept { return (n & (n >> 1)) == 0; }

}  // namespace twoadic::base2

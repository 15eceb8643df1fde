#include "twoadic/base2.hpp"

#include <limits>
#include <stdexcept>

namespace twoadic::base2 {

unsigned nu(natural n) {
    if (n == 0) throw std::domain_error("nu: the valuation of 0 is undefined");
    return static_cast<unsigned>(std::countr_zero(n));
}

natural TwoPowerSet::min() const {
    if (bits_ == 0) throw std::domain_error("TwoPowerSet::min of empty set");
    return bits_ & (~bits_ + 1);
}

natural TwoPowerSet::max() const {
    if (bits_ == 0) throw std::domain_error("TwoPowerSet::max of empty set");
    return std::bit_floor(bits_);
}

int TwoPowerSet::least_positive_exponent() const noexcept {
    const natural high = bits_ >> 1;
    if (high == 0) return -1;
    return std::countr_zero(high) + 1;
}

std::vector<natural> TwoPowerSet::members() const {
    std::vector<natural> out;
    out.reserve(size());
    for (natural rest = bits_; rest != 0; rest &= rest - 1) out.push_back(rest & (~rest + 1));
    return out;
}

CarryProfile nu_binom(natural a, natural b) {
    if (a > std::numeric_limits<natural>::max() - b)
        throw std::overflow_error("nu_binom: a + b exceeds 64 bits");
    CarryProfile c;
    c.total = sigma(a) + sigma(b) - sigma(a + b);
    c.forced = common_count(a, b);
    c.unforced = c.total - c.forced;
    return c;
}

bool no_unforced_carries(natural a, natural b) { return nu_binom(a, b).unforced == 0; }

bool is_odd_binom(std::int64_t top, natural bottom) {
    natural upper = 0;
    if (top >= 0) {
        upper = static_cast<natural>(top);
        if (bottom > upper) return false;
    } else {
        // C(-m, d) = (-1)^d C(m+d-1, d)
        const natural m = static_cast<natural>(-(top + 1)) + 1;
        if (bottom > std::numeric_limits<natural>::max() - m)
            throw std::overflow_error("is_odd_binom: reflected top exceeds 64 bits");
        if (bottom == 0) return true;
        upper = m + bottom - 1;
    }
    // Lucas: odd iff every digit of bottom is dominated by top.
    return (bottom & ~upper) == 0;
}

}  // namespace twoadic::base2

#include "twoadic/residue.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twoadic {

namespace {

using u128 = unsigned __int128;

std::size_t limb_count(unsigned precision) {
    if (precision == 0) throw std::invalid_argument("residue precision must be positive");
    return (precision + 63) / 64;
}

std::uint64_t top_mask_for(unsigned precision) {
    const unsigned rem = precision % 64;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

bool all_zero(const std::uint64_t* p, std::size_t n) {
    return std::all_of(p, p + n, [](std::uint64_t x) { return x == 0; });
}

unsigned low_zero_bits(const std::uint64_t* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] != 0) return static_cast<unsigned>(i * 64 + std::countr_zero(p[i]));
    throw std::domain_error("valuation of a zero residue is not determined");
}

}  // namespace

TruncatedResidue::TruncatedResidue(unsigned precision_bits)
    : precision_(precision_bits), limbs_(limb_count(precision_bits), 0) {}

TruncatedResidue::TruncatedResidue(const ExactInt& value, unsigned precision_bits)
    : TruncatedResidue(precision_bits) {
    ExactInt r;
    // floor remainder: non-negative for negative values too
    mpz_fdiv_r_2exp(r.get_mpz_t(), value.get_mpz_t(), precision_bits);
    std::size_t written = 0;
    mpz_export(limbs_.data(), &written, -1, sizeof(std::uint64_t), 0, 0, r.get_mpz_t());
    mask_top();
}

bool TruncatedResidue::is_zero() const noexcept { return all_zero(limbs_.data(), limbs_.size()); }

unsigned TruncatedResidue::valuation() const { return low_zero_bits(limbs_.data(), limbs_.size()); }

ExactInt TruncatedResidue::to_exact() const {
    ExactInt out;
    mpz_import(out.get_mpz_t(), limbs_.size(), -1, sizeof(std::uint64_t), 0, 0, limbs_.data());
    return out;
}

TruncatedResidue& TruncatedResidue::operator+=(const TruncatedResidue& rhs) {
    if (rhs.precision_ != precision_) throw std::invalid_argument("residue precision mismatch");
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const u128 t = static_cast<u128>(limbs_[i]) + rhs.limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint64_t>(t);
        carry = static_cast<std::uint64_t>(t >> 64);
    }
    mask_top();
    return *this;
}

TruncatedResidue& TruncatedResidue::mul_small(std::uint64_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const u128 t = static_cast<u128>(limb) * factor + carry;
        limb = static_cast<std::uint64_t>(t);
        carry = static_cast<std::uint64_t>(t >> 64);
    }
    mask_top();
    return *this;
}

void TruncatedResidue::mask_top() noexcept { limbs_.back() &= top_mask_for(precision_); }

ResidueRow::ResidueRow(std::size_t columns, unsigned precision_bits)
    : columns_(columns),
      precision_(precision_bits),
      limbs_(limb_count(precision_bits)),
      top_mask_(top_mask_for(precision_bits)),
      data_(columns * limbs_, 0) {}

void ResidueRow::clear() noexcept { std::fill(data_.begin(), data_.end(), 0); }

void ResidueRow::set_one(std::size_t col) {
    std::uint64_t* e = entry(col);
    std::fill(e, e + limbs_, 0);
    e[0] = 1;
}

bool ResidueRow::is_zero(std::size_t col) const noexcept { return all_zero(entry(col), limbs_); }

unsigned ResidueRow::valuation(std::size_t col) const { return low_zero_bits(entry(col), limbs_); }

TruncatedResidue ResidueRow::at(std::size_t col) const {
    ExactInt v;
    mpz_import(v.get_mpz_t(), limbs_, -1, sizeof(std::uint64_t), 0, 0, entry(col));
    return TruncatedResidue(v, precision_);
}

void ResidueRow::mul_add_prev(std::size_t col, std::uint64_t factor) noexcept {
    std::uint64_t* dst = entry(col);
    if (limbs_ == 1) {
        std::uint64_t v = dst[0] * factor;
        if (col > 0) v += entry(col - 1)[0];
        dst[0] = v & top_mask_;
        return;
    }
    const std::uint64_t* prev = col > 0 ? entry(col - 1) : nullptr;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_; ++i) {
        u128 t = static_cast<u128>(dst[i]) * factor + carry;
        if (prev) t += prev[i];
        dst[i] = static_cast<std::uint64_t>(t);
        carry = static_cast<std::uint64_t>(t >> 64);
    }
    dst[limbs_ - 1] &= top_mask_;
}

}  // namespace twoadic

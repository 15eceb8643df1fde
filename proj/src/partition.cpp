#include "twoadic/partition.hpp"

#include "twoadic/base2.hpp"

#include <stdexcept>

namespace twoadic::bernoulli {

PartitionU::PartitionU(std::vector<std::uint32_t> mult) : mult_(std::move(mult)) { trim(); }

PartitionU::PartitionU(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> parts) {
    for (auto [part, count] : parts) {
        if (part == 0) throw std::invalid_argument("PartitionU: parts start at 1");
        if (mult_.size() < part) mult_.resize(part, 0);
        mult_[part - 1] += count;
    }
    trim();
}

void PartitionU::trim() {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

std::uint32_t PartitionU::operator[](std::uint32_t part) const noexcept {
    return part >= 1 && part <= mult_.size() ? mult_[part - 1] : 0;
}

std::uint64_t PartitionU::weight() const noexcept {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) w += (i + 1) * std::uint64_t{mult_[i]};
    return w;
}

std::uint64_t PartitionU::length() const noexcept {
    std::uint64_t d = 0;
    for (auto m : mult_) d += m;
    return d;
}

ExactInt PartitionU::lambda() const {
    ExactInt out = 1;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0) continue;
        ExactInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), i + 2, mult_[i]);
        out *= p;
    }
    return out;
}

std::uint64_t PartitionU::lambda_valuation() const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) v += std::uint64_t{mult_[i]} * base2::nu(i + 2);
    return v;
}

ExactInt PartitionU::multinomial() const {
    // product of binomials C(u_1 + ... + u_i, u_i)
    ExactInt out = 1;
    std::uint64_t running = 0;
    for (auto m : mult_) {
        running += m;
        ExactInt b;
        mpz_bin_uiui(b.get_mpz_t(), running, m);
        out *= b;
    }
    return out;
}

bool PartitionU::concentrated_in_one_and_three() const noexcept {
    for (std::size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] != 0 && i != 0 && i != 2) return false;
    return true;
}

PartitionU PartitionU::transfer_to_one(std::uint32_t part) const {
    if (part == 0) throw std::invalid_argument("transfer_to_one: parts start at 1");
    std::vector<std::uint32_t> m = mult_;
    if (part <= m.size() && part != 1) {
        m[0] += m[part - 1];
        m[part - 1] = 0;
    }
    return PartitionU(std::move(m));
}

std::string PartitionU::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0) continue;
        if (!first) s += ", ";
        s += std::to_string(i + 1) + ":" + std::to_string(mult_[i]);
        first = false;
    }
    return s + "}";
}

PartitionEnumerator::PartitionEnumerator(std::uint32_t weight) : weight_(weight), u_(weight + 1, 0) {}

std::optional<PartitionU> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (weight_ > 0) u_[weight_] = 1;
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return PartitionU(std::vector<std::uint32_t>(u_.begin() + 1, u_.end()));
}

bool PartitionEnumerator::advance() {
    // Raise the rightmost position that still admits a completion by larger
    // parts, by as little as possible; the lex-smallest completion of a
    // remainder r by parts > i is the single part r.
    const std::int64_t w = weight_;
    for (std::int64_t i = w - 1; i >= 1; --i) {
        std::int64_t prefix = 0;
        for (std::int64_t j = 1; j < i; ++j) prefix += j * u_[j];
        for (std::int64_t ui = u_[i] + 1;; ++ui) {
            const std::int64_t r = w - prefix - i * ui;
            if (r < 0) break;
            if (r == 0 || r >= i + 1) {
                u_[i] = static_cast<std::uint32_t>(ui);
                for (std::int64_t j = i + 1; j <= w; ++j) u_[j] = 0;
                if (r > 0) u_[r] = 1;
                return true;
            }
        }
    }
    return false;
}

std::vector<PartitionU> partitions_of(std::uint32_t w, std::uint32_t bound) {
    if (w > bound)
        throw std::length_error("partition weight " + std::to_string(w) + " exceeds bound " +
                                std::to_string(bound));
    std::vector<PartitionU> out;
    PartitionEnumerator e(w);
    while (auto p = e.next()) out.push_back(std::move(*p));
    return out;
}

std::vector<PartitionU> partitions_up_to(std::uint32_t w_max, std::uint32_t bound) {
    std::vector<PartitionU> out;
    for (std::uint32_t w = 0; w <= w_max; ++w) {
        auto part = partitions_of(w, bound);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace twoadic::bernoulli

#pragma once

// Integer partitions in multiplicity form u = (u_1, u_2, ...), where u_i
// is how often the part i occurs.

#include "twoadic/exact.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twoadic::bernoulli {

class PartitionU {
public:
    PartitionU() = default;
    /// mult[i-1] = u_i. Trailing zeros are dropped.
    explicit PartitionU(std::vector<std::uint32_t> mult);
    /// Sparse form, e.g. {{1, 2}, {3, 1}} for u_1 = 2, u_3 = 1.
    PartitionU(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> parts);

    /// u_i, zero when absent.
    std::uint32_t operator[](std::uint32_t part) const noexcept;
    const std::vector<std::uint32_t>& multiplicities() const noexcept { return mult_; }
    std::uint32_t largest_part() const noexcept { return static_cast<std::uint32_t>(mult_.size()); }

    /// w(u) = sum i u_i.
    std::uint64_t weight() const noexcept;
    /// d(u) = sum u_i.
    std::uint64_t length() const noexcept;
    /// Lambda^u = prod (i+1)^{u_i}.
    ExactInt lambda() const;
    /// nu(u) = sum u_i nu(i+1) = nu(Lambda^u).
    std::uint64_t lambda_valuation() const noexcept;
    /// d! / prod u_i!.
    ExactInt multinomial() const;

    /// Every part is 1 or 3.
    bool concentrated_in_one_and_three() const noexcept;

    /// Moves all parts i into place 1 (u_1 += u_i, u_i = 0). Preserves d and
    /// lowers w when i > 1.
    PartitionU transfer_to_one(std::uint32_t part) const;

    std::string to_string() const;

    friend bool operator==(const PartitionU&, const PartitionU&) = default;
    friend auto operator<=>(const PartitionU&, const PartitionU&) = default;

private:
    void trim();

    std::vector<std::uint32_t> mult_;
};

/**
 * Enumerates the partitions of exactly `weight` in lexicographic order of
 * the multiplicity vector (u_1, u_2, ..., u_weight). Each instance carries
 * its own state.
 */
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::uint32_t weight);

    /// Next partition, or nullopt when exhausted.
    std::optional<PartitionU> next();

private:
    bool advance();

    std::uint32_t weight_;
    std::vector<std::uint32_t> u_;  // u_[i] = multiplicity of part i; index 0 unused
    bool started_ = false;
    bool done_ = false;
};

inline constexpr std::uint32_t kDefaultPartitionBound = 30;

/// All partitions with weight exactly w.
std::vector<PartitionU> partitions_of(std::uint32_t w,
                                      std::uint32_t bound = kDefaultPartitionBound);
/// All partitions with weight <= w_max, grouped by increasing weight.
std::vector<PartitionU> partitions_up_to(std::uint32_t w_max,
                                         std::uint32_t bound = kDefaultPartitionBound);

}  // namespace twoadic::bernoulli

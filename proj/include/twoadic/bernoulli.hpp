#pragma once

// Higher-order Bernoulli numbers and polynomials B_n^{(l)}(x), defined by
//   (t / (e^t - 1))^l e^{tx} = sum_n B_n^{(l)}(x) t^n / n!,
// computed exactly, plus their partition-sum representation and the
// 2-adic pole structure of their coefficients.

#include "twoadic/exact.hpp"
#include "twoadic/partition.hpp"

#include <cstdint>
#include <vector>

namespace twoadic::bernoulli {

/// Largest n and |l| accepted by the power-series routines.
inline constexpr std::uint32_t kDefaultSeriesBound = 64;

/// Coefficients c_0..c_n of (t / (e^t - 1))^l truncated after t^n.
std::vector<ExactRational> order_series(std::uint32_t n, std::int64_t l,
                                        std::uint32_t bound = kDefaultSeriesBound);

/// B_j^{(l)} for j = 0..n.
std::vector<ExactRational> bernoulli_numbers(std::uint32_t n, std::int64_t l,
                                             std::uint32_t bound = kDefaultSeriesBound);

/// Coefficients of B_n^{(l)}(x) from x^n down to x^0 (index = codegree).
std::vector<ExactRational> bernoulli_poly(std::uint32_t n, std::int64_t l,
                                          std::uint32_t bound = kDefaultSeriesBound);

/// Evaluates a polynomial given highest degree first.
ExactRational evaluate(const std::vector<ExactRational>& coeffs_high_first, const ExactRational& x);

/// t_u(s) = C(s, d) * multinomial(d; u) / Lambda^u.
ExactRational t_u(const PartitionU& u, std::int64_t s);
/// tau_u(s) = (n)_w * t_u(s), with (n)_w the falling factorial.
ExactRational tau_u(const PartitionU& u, std::int64_t s, std::uint32_t n);

/// B_n^{(l)} = (-1)^n n! sum_{w(u) <= n} t_u(l - n - 1).
ExactRational bernoulli_number_partition(std::uint32_t n, std::int64_t l,
                                         std::uint32_t bound = kDefaultPartitionBound);
/// B_n^{(l)}(1) = (-1)^n n! sum_{w(u) = n} t_u(l - n - 1).
ExactRational bernoulli_at_one_partition(std::uint32_t n, std::int64_t l,
                                         std::uint32_t bound = kDefaultPartitionBound);

/// Maximum pole of B_n^{(l)}(x): #{2^i in [n] : C(l - n - 1, 2^i) odd}.
unsigned max_pole(std::uint32_t n, std::int64_t l);

struct PoleProfile {
    std::vector<unsigned> poles;  // indexed by codegree j = 0..n
    unsigned max_pole = 0;
    std::vector<std::uint32_t> argmax_codegrees;
    bool constant_attains_max = false;
    bool constant_uniquely_attains_max = false;
};

PoleProfile pole_profile(std::uint32_t n, std::int64_t l, std::uint32_t bound = kDefaultSeriesBound);
PoleProfile pole_profile_of(const std::vector<ExactRational>& coeffs_high_first);

/// One of the three partition shapes that can carry the maximum pole of
/// B_{n-k}^{(-k)} (or of B_{n-k}^{(-k+1)}(1) in the shifted reading).
struct DominantTerm {
    enum class Shape { all_ones, all_ones_less_one, ones_and_a_three };

    Shape shape;
    PartitionU u;
    ExactRational t;           // t_u(s)
    long nu_t = 0;             // nu(t_u(s))
    long nu_scaled = 0;        // nu((n-k)! t_u(s)), the term's valuation inside the sum
    bool in_sum = true;        // w(u) admitted by the partition sum in use
    bool attains_max_pole = false;
};

/// Candidate terms for the Stirling pair (n_row, k): s = l - (n_row - k) - 1
/// with l = -k, or l = -k + 1 when `shifted`.
std::vector<DominantTerm> dominant_terms(std::uint32_t n_row, std::uint32_t k, bool shifted);

}  // namespace twoadic::bernoulli

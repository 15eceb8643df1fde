#pragma once

// Lower-bound estimates for nu(S(n,k)) and nu(s(n,k)), the carry criteria
// deciding when they are sharp, and the consequences: an odd criterion,
// the Hong-Amdeberhan test, central Stirling numbers and the limit of
// nu(S(2^h n, 2^h k)).

#include "twoadic/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twoadic::analysis {

using oracle::Kind;

/// The four estimates. For the second kind:
///   mz   = sigma(k) - sigma(n)
///   smz  = sigma(k-1) - sigma(n-1)
///   amz  = mz + #([n] ∩ [n-k])
///   samz = smz + #([n-1] ∩ [n-k])
/// For the first kind:
///   mz   = sigma(k-1) - sigma(n-1)
///   smz  = sigma(k) - sigma(n)
///   amz  = mz + #([n-k] - [k-1])
///   samz = smz + #([n-k] - [k])
struct EstimateBundle {
    int mz = 0;
    int smz = 0;
    int amz = 0;
    int samz = 0;
    Kind kind = Kind::second;

    int max() const noexcept;
    friend bool operator==(const EstimateBundle&, const EstimateBundle&) = default;
};

EstimateBundle estimates_second(unsigned n, unsigned k);
EstimateBundle estimates_first(unsigned n, unsigned k);
EstimateBundle estimates(Kind kind, unsigned n, unsigned k);

enum class Case { MZC, SMZC, AMZC, SAMZC };
enum class SubCriterion : char { none = 0, a = 'a', b = 'b', c = 'c' };

struct CaseLabel {
    Case which;
    SubCriterion sub = SubCriterion::none;  // set for AMZC / SAMZC

    /// MZC, SMZC, AMZC(a|b|c) or SAMZC(a|c).
    std::string token() const;
    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

/// Raw truth values of the sharpness sub-criteria, before the "exactly one"
/// rule is applied.
struct CriteriaDetail {
    bool mzc = false;
    bool smzc = false;
    bool amz_common = false;   // [n-k] ∩ [n] nonempty
    bool amz_a = false, amz_b = false, amz_c = false;
    bool samz_common = false;  // [n-k] ∩ [n-1] nonempty
    bool samz_a = false, samz_c = false;
};

CriteriaDetail criteria(unsigned n, unsigned k);

/// Labels in the fixed order MZC, SMZC, AMZC, SAMZC.
std::vector<CaseLabel> classify(unsigned n, unsigned k);
bool has_case(const std::vector<CaseLabel>& labels, Case c);
/// Semicolon-joined tokens.
std::string join_labels(const std::vector<CaseLabel>& labels);

struct OddTest {
    bool via_amz = false;    // #([n]∩[n-k]) = σ(n)-σ(k) and MZC or AMZC
    bool via_samz = false;   // #([n-1]∩[n-k]) = σ(n-1)-σ(k-1) and SMZC or SAMZC
};
OddTest odd_conditions(unsigned n, unsigned k);
/// S(n,k) odd. Evaluates both conditions and throws std::logic_error if
/// they disagree.
bool is_odd(unsigned n, unsigned k);

/// C(2n-k-1, n-1) is odd.
bool hong_amdeberhan(unsigned n, unsigned k);

/// k = 3 + 8k' with k' Fibbinary.
bool central_amzc(std::uint64_t k);

enum class LimitBranch {
    nu_k_below_nu_n,        // nu(k) < nu(n)
    equal_nu_min_diff_in_k, // nu(k) = nu(n), 2^{nu(n-k)} in [k]
    nu_n_below_nu_k,        // nu(n) < nu(k)
    equal_nu_min_diff_in_n, // nu(k) = nu(n), 2^{nu(n-k)} in [n]
};
std::string to_string(LimitBranch b);

struct AsymptoticLimit {
    long limit = 0;
    unsigned threshold_h = 0;
    LimitBranch branch = LimitBranch::nu_k_below_nu_n;
    long unified = 0;  // sigma(k-1) - sigma(n-1) + nu C(2n-k-1, n-1)
};

/// Limit of nu(S(2^h n, 2^h k)) and the smallest h from which it is
/// guaranteed. Requires 1 <= k < n.
AsymptoticLimit asymptotic_limit(unsigned n, unsigned k);

/// Everything known about one (n, k).
struct ValuationReport {
    unsigned n = 0;
    unsigned k = 0;
    Kind kind = Kind::second;
    unsigned exact_nu = 0;
    EstimateBundle estimates;
    std::vector<CaseLabel> labels;  // empty for the first kind
    bool odd = false;
};

ValuationReport make_report(Kind kind, unsigned n, unsigned k, unsigned exact_nu);
ValuationReport make_report(Kind kind, unsigned n, unsigned k);

}  // namespace twoadic::analysis

#pragma once

// Finite-domain checkers for the theorem families. Each sweep forms its
// prediction from the closed formulas only and then compares against the
// exact valuations; disagreements are recorded, never thrown.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twoadic::verify {

struct Failure {
    std::string params;
    std::string predicted;
    std::string actual;
};

struct TheoremReport {
    std::string family;
    std::uint64_t params_tested = 0;
    std::vector<Failure> failures;
    /// Facts reported without being asserted (edge cases outside the
    /// stated hypotheses, counts of boundary behaviour).
    std::vector<std::string> observations;
    std::chrono::duration<double> elapsed{0};

    bool verified() const noexcept { return failures.empty(); }
    void fail(std::string params, std::string predicted, std::string actual);
    /// Appends other's counts and findings after this report's.
    void merge(TheoremReport&& other);
};

/// Execution knobs shared by all sweeps.
struct SweepLimits {
    unsigned row_cap = 512;  // largest Stirling row consulted
    unsigned workers = 1;
};

TheoremReport verify_thm_2_1(unsigned c_max = 511, unsigned h_max = 9, SweepLimits lim = {});
TheoremReport verify_thm_2_2(unsigned c_max = 511, unsigned h_max = 9, unsigned b_max = 512,
                             SweepLimits lim = {});
TheoremReport verify_thm_2_3(unsigned m_max = 9, SweepLimits lim = {});
/// Includes the k = 2^h slice in the form h - 1 - nu(u).
TheoremReport verify_thm_2_5(unsigned c_max = 512, unsigned h_max = 9, SweepLimits lim = {});
/// Includes the central case nu(S(2^{h+1}k, 2^h k)) -> nu C(3k, k).
TheoremReport verify_thm_2_6(unsigned n_max = 8, unsigned h_max = 12,
                             SweepLimits lim = {.row_cap = 4096, .workers = 1});
TheoremReport verify_thm_3_4(unsigned c_max = 511, unsigned h_max = 9, SweepLimits lim = {});
/// nu(S(c 2^h, k)) = sigma(k) - 1 for c in {1, 3, 5}.
TheoremReport verify_dewannemacker(unsigned h_max = 8,
                                   SweepLimits lim = {.row_cap = 1280, .workers = 1});

/// Dominance of all eight estimates and non-negativity of amz/samz.
TheoremReport verify_estimates(unsigned n_max = 400, unsigned workers = 1);
/// Case labels coincide with sharpness; sub-criteria exclusivity.
TheoremReport verify_classifier(unsigned n_max = 400, unsigned workers = 1);
/// Odd criterion against parity, both forms.
TheoremReport verify_odd(unsigned n_max = 400, unsigned workers = 1);
TheoremReport verify_hong_amdeberhan(unsigned n_max = 400, unsigned workers = 1);
TheoremReport verify_central(unsigned k_max = 200);
/// Invariance under adding a Delta whose powers of two exceed those of n.
TheoremReport verify_invariance(unsigned n_max = 64, unsigned j_max = 10, unsigned workers = 1);
/// The partition estimate n - nu(u) >= n - w + (w - d)/2, its corollary and
/// the transfer argument.
TheoremReport verify_partition_estimate(unsigned w_max = 25);
/// Partition sums vs power series, the recursions, the maximum-pole formula
/// and the key formulas linking Stirling and Bernoulli numbers.
TheoremReport verify_bernoulli_appendix(unsigned n_max = 12, int l_max = 12,
                                        unsigned stirling_n_max = 30);

struct FamilyOptions {
    std::optional<unsigned> n_max;
    std::optional<unsigned> h_max;
    unsigned workers = 1;
};

/// Names accepted by run_family.
const std::vector<std::string>& family_names();
/// Runs a family by name; nullopt for an unknown name.
std::optional<TheoremReport> run_family(std::string_view name, const FamilyOptions& opts);

}  // namespace twoadic::verify

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include "twoadic/analysis.hpp"
#include "twoadic/base2.hpp"
#include "twoadic/oracle.hpp"
#include "twoadic/scan.hpp"
#include "twoadic/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace twoadic;
using namespace twoadic::verify;

namespace {

// All checks are exact; only the wall-clock budgets are tolerances.
constexpr double kDominanceBudgetS = 120.0;
constexpr double kDeWannemackerBudgetS = 60.0;
constexpr double kPartitionBudgetS = 60.0;
constexpr unsigned kMaxFailuresShown = 3;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome from_reports(const std::vector<TheoremReport>& reports, double budget_s = 0) {
    Outcome o{true, ""};
    double elapsed = 0;
    for (const auto& r : reports) {
        elapsed += r.elapsed.count();
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += r.family + ": " + std::to_string(r.params_tested) + " checked, " +
                    std::to_string(r.failures.size()) + " failed";
        for (unsigned i = 0; i < r.failures.size() && i < kMaxFailuresShown; ++i)
            o.detail += " [" + r.failures[i].params + " predicted " + r.failures[i].predicted + " actual " +
                        r.failures[i].actual + "]";
        if (!r.verified()) o.pass = false;
    }
    if (budget_s > 0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "; %.2fs of %.0fs", elapsed, budget_s);
        o.detail += buf;
        if (elapsed > budget_s) o.pass = false;
    }
    return o;
}

Outcome criterion_nonnegative() {
    std::uint64_t bad = 0, tested = 0;
    for (unsigned n = 1; n <= 400; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const auto e = analysis::estimates_second(n, k);
            ++tested;
            if (e.amz < 0 || e.samz < 0) ++bad;
        }
    return {bad == 0, std::to_string(tested) + " pairs, " + std::to_string(bad) + " negative"};
}

Outcome criterion_limit() {
    auto o = from_reports({verify_thm_2_6()});
    const unsigned spot = oracle::nu_stirling2(24, 12);
    const long binom = base2::nu_binom(6, 3).total;
    o.detail += "; nu(S(24,12))=" + std::to_string(spot) + " nu C(9,3)=" + std::to_string(binom);
    o.pass = o.pass && spot == 2 && binom == 2;
    return o;
}

Outcome criterion_determinism() {
    scan::ScanConfig c;
    c.n = {1, 200};
    std::ostringstream one, many;
    c.workers = 1;
    scan::run_scan(c, one);
    c.workers = 7;
    scan::run_scan(c, many);
    const bool same = one.str() == many.str();
    return {same, std::to_string(one.str().size()) + " bytes, workers 1 vs 7 " + (same ? "identical" : "differ")};
}

}  // namespace

int main() {
    const SweepLimits cap512{512, 1};
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"estimate dominance, both kinds, n <= 400",
         [] { return from_reports({verify_estimates(400, 1)}, kDominanceBudgetS); }},
        {"amz and samz non-negative, n <= 400", criterion_nonnegative},
        {"odd criterion matches parity, n <= 400", [] { return from_reports({verify_odd(400)}); }},
        {"classifier labels coincide with sharpness, n <= 400",
         [] { return from_reports({verify_classifier(400)}); }},
        {"nu(S(c 2^h, k)) = sigma(k) - 1, c in {1,3,5}, h <= 8",
         [] { return from_reports({verify_dewannemacker(8, {1280, 1})}, kDeWannemackerBudgetS); }},
        {"families 2.1, 2.2, 2.3, 2.5 (with 2.4), 3.4 at row cap 512",
         [&] {
             return from_reports({verify_thm_2_1(511, 9, cap512), verify_thm_2_2(511, 9, 512, cap512),
                                  verify_thm_2_3(9, cap512), verify_thm_2_5(512, 9, cap512),
                                  verify_thm_3_4(511, 9, cap512)});
         }},
        {"limit of nu(S(2^h n, 2^h k)), 1 <= k < n <= 8, rows <= 4096", criterion_limit},
        {"partition sums, recursions and maximum pole against the series",
         [] { return from_reports({verify_bernoulli_appendix(12, 12, 30)}); }},
        {"partition estimate and corollary, w <= 25",
         [] { return from_reports({verify_partition_estimate(25)}, kPartitionBudgetS); }},
        {"central Stirling numbers, k <= 200", [] { return from_reports({verify_central(200)}); }},
        {"scan output identical across worker counts, n <= 200", criterion_determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

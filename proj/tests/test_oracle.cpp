#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twoadic/oracle.hpp"

#include <functional>
#include <stdexcept>

using namespace twoadic;
using namespace twoadic::oracle;

namespace {

// Counts set partitions of {1..n} into k blocks via restricted growth strings.
std::uint64_t count_set_partitions(unsigned n, unsigned k) {
    std::uint64_t count = 0;
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
        if (i == n) {
            if (blocks == k) ++count;
            return;
        }
        for (unsigned b = 0; b <= blocks && b < k; ++b) rec(i + 1, std::max(blocks, b + 1));
    };
    if (n == 0) return k == 0 ? 1 : 0;
    rec(0, 0);
    return count;
}

// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
ExactInt stirling2_explicit(unsigned n, unsigned k) {
    ExactInt sum = 0, kf = 1;
    for (unsigned j = 0; j <= k; ++j) {
        ExactInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), k - j, n);
        term *= binomial(k, j);
        sum += (j % 2 ? -term : term);
    }
    for (unsigned i = 2; i <= k; ++i) kf *= i;
    return sum / kf;
}

// Coefficients of x(x-1)...(x-n+1).
std::vector<ExactInt> falling_poly(unsigned n) {
    std::vector<ExactInt> c{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<ExactInt> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * i;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

TEST_CASE("stirling2 examples") {
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(6, 5) == 15);
    CHECK(stirling2(6, 4) == 65);
    CHECK(stirling2(5, 0) == 0);
    CHECK_THROWS(stirling2(3, 4));
}

TEST_CASE("stirling1 examples") {
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(4, 1) == -6);
    for (unsigned n = 0; n <= 20; ++n) CHECK(stirling1(n, n) == 1);
    CHECK_THROWS(stirling1(3, 4));
}

TEST_CASE("stirling2 against set partition counts and the explicit sum") {
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(stirling2(n, k) == count_set_partitions(n, k));
    for (unsigned n = 1; n <= 80; n += 7)
        for (unsigned k = 1; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_explicit(n, k));
}

TEST_CASE("stirling1 against the falling factorial expansion") {
    for (unsigned n = 0; n <= 40; ++n) {
        const auto poly = falling_poly(n);
        for (unsigned k = 0; k <= n; ++k) CHECK(stirling1(n, k) == poly[k]);
    }
}

TEST_CASE("row sums reproduce x^n") {
    for (unsigned n = 0; n <= 8; ++n) {
        for (long x = -5; x <= 9; ++x) {
            ExactInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) {
                ExactInt ff = 1;
                for (unsigned i = 0; i < k; ++i) ff *= x - static_cast<long>(i);
                sum += stirling2(n, k) * ff;
            }
            ExactInt power;
            mpz_pow_ui(power.get_mpz_t(), ExactInt(x).get_mpz_t(), n);
            CHECK(sum == power);
        }
    }
}

TEST_CASE("valuation examples") {
    CHECK(nu_stirling2(6, 3) == 1);
    CHECK(nu_stirling2(6, 5) == 0);
    CHECK(nu_stirling2(4, 3) == 1);
    CHECK(nu_stirling1(4, 2) == 0);
    CHECK(nu_stirling1(4, 1) == 1);
    for (unsigned n = 1; n <= 30; ++n) CHECK(nu_stirling1(n, n) == 0);
    CHECK_THROWS(nu_stirling2(0, 0));
    CHECK_THROWS(nu_stirling2(3, 4));
    CHECK_THROWS(nu_stirling1(3, 0));
}

TEST_CASE("truncated residues agree with the exact path") {
    for (Kind kind : {Kind::second, Kind::first}) {
        for (unsigned n = 1; n <= 150; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                const long exact = nu2(stirling(kind, n, k));
                CHECK(nu_stirling(kind, n, k) == exact);
                // tiny starting precisions force escalation
                const auto t1 = nu_stirling_traced(kind, n, k, 1);
                CHECK(t1.nu == exact);
                CHECK(nu_stirling(kind, n, k, 3) == exact);
                if (k % 17 == 0) {
                    const auto r = stirling_residue(kind, n, k, 64);
                    ExactInt v = abs(stirling(kind, n, k)), red;
                    mpz_fdiv_r_2exp(red.get_mpz_t(), v.get_mpz_t(), 64);
                    CHECK(r.to_exact() == red);
                }
            }
        }
    }
}

TEST_CASE("escalation reports precision") {
    // S(6,3) = 90 is even, so T = 1 has to escalate
    const auto t = nu_stirling_traced(Kind::second, 6, 3, 1);
    CHECK(t.nu == 1);
    CHECK(t.precision_used >= 2);
    CHECK_FALSE(t.exact_fallback);
    const auto odd = nu_stirling_traced(Kind::second, 6, 5, 1);
    CHECK(odd.nu == 0);
    CHECK(odd.precision_used == 1);
}

TEST_CASE("memo oracle and triangle agree with the direct path") {
    for (Kind kind : {Kind::second, Kind::first}) {
        ValuationOracle memo(kind, 2);
        const ValuationTriangle tri(kind, 120, 2);
        // queries out of order, including spans that force restarts
        for (unsigned n : {5u, 120u, 7u, 64u, 100u, 1u}) {
            for (unsigned k = 1; k <= n; ++k) {
                const unsigned expect = nu_stirling(kind, n, k);
                CHECK(memo.nu(n, k) == expect);
                CHECK(tri.nu(n, k) == expect);
            }
        }
        const auto row = memo.row(50, 10, 20);
        REQUIRE(row.size() == 11);
        for (unsigned k = 10; k <= 20; ++k) CHECK(row[k - 10] == nu_stirling(kind, 50, k));
        CHECK_THROWS_AS(tri.nu(121, 1), std::out_of_range);
        CHECK_THROWS_AS(tri.nu(5, 6), std::out_of_range);
    }
}

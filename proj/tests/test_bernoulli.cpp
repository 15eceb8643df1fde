#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twoadic/base2.hpp"
#include "twoadic/bernoulli.hpp"
#include "twoadic/oracle.hpp"

#include <stdexcept>

using namespace twoadic;
using namespace twoadic::bernoulli;

namespace {

ExactRational q(const char* s) {
    ExactRational r(s);
    r.canonicalize();
    return r;
}

ExactRational sum(const std::vector<ExactRational>& c) {
    ExactRational acc = 0;
    for (const auto& x : c) acc += x;
    return acc;
}

// Classical Bernoulli numbers from sum_{j<=m} C(m+1,j) B_j = 0 with B_1 = -1/2.
std::vector<ExactRational> classical(unsigned n) {
    std::vector<ExactRational> b(n + 1, 0);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        ExactRational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += ExactRational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / (m + 1);
    }
    return b;
}

}  // namespace

TEST_CASE("polynomial examples") {
    CHECK(bernoulli_poly(1, -1) == std::vector<ExactRational>{1, q("1/2")});
    CHECK(bernoulli_poly(2, -2) == std::vector<ExactRational>{1, 2, q("7/6")});
    for (std::int64_t l = -6; l <= 6; ++l) CHECK(bernoulli_poly(0, l) == std::vector<ExactRational>{1});
    CHECK(evaluate(bernoulli_poly(2, -2), 1) == q("25/6"));
    CHECK_THROWS_AS(bernoulli_poly(65, 1), std::length_error);
    CHECK_THROWS_AS(bernoulli_poly(3, -70), std::length_error);
}

TEST_CASE("order one gives the classical numbers") {
    const auto b = classical(20);
    const auto ours = bernoulli_numbers(20, 1);
    for (unsigned i = 0; i <= 20; ++i) CHECK(ours[i] == b[i]);
    // order 0 is x^n
    const auto p = bernoulli_poly(7, 0);
    CHECK(p[0] == 1);
    for (unsigned j = 1; j <= 7; ++j) CHECK(p[j] == 0);
}

TEST_CASE("orders add under multiplication of generating functions") {
    // B^{(a+b)}_n = sum C(n,j) B^{(a)}_j B^{(b)}_{n-j}
    for (std::int64_t a = -4; a <= 4; ++a) {
        for (std::int64_t b = -4; b <= 4; ++b) {
            const auto ba = bernoulli_numbers(10, a), bb = bernoulli_numbers(10, b), bab = bernoulli_numbers(10, a + b);
            for (unsigned n = 0; n <= 10; ++n) {
                ExactRational acc = 0;
                for (unsigned j = 0; j <= n; ++j) acc += ExactRational(binomial(n, j)) * ba[j] * bb[n - j];
                CHECK(acc == bab[n]);
            }
        }
    }
}

TEST_CASE("t_u examples") {
    CHECK(t_u(PartitionU{{1, 2}}, -5) == q("15/4"));
    CHECK(t_u(PartitionU{}, -5) == 1);
    CHECK(t_u(PartitionU{}, 17) == 1);
    CHECK(t_u(PartitionU{{2, 1}}, -5) == q("-5/3"));
    CHECK(tau_u(PartitionU{{1, 2}}, -5, 4) == q("15/4") * 12);
    CHECK(tau_u(PartitionU{{1, 3}}, -5, 2) == 0);
}

TEST_CASE("partition sums") {
    CHECK(bernoulli_number_partition(2, -2) == q("7/6"));
    CHECK(bernoulli_number_partition(1, -1) == q("1/2"));
    for (std::int64_t l = -5; l <= 5; ++l) {
        CHECK(bernoulli_number_partition(0, l) == 1);
        CHECK(bernoulli_at_one_partition(0, l) == 1);
    }
    // S(4,2) = C(3,1) B_2^{(-1)}(1)
    CHECK(bernoulli_at_one_partition(2, -1) == q("7/3"));
    CHECK(ExactRational(3) * bernoulli_at_one_partition(2, -1) == oracle::stirling2(4, 2));
    // B_2^{(-2)} = (-2/(-4)) B_2^{(-1)}(1)
    CHECK(q("1/2") * bernoulli_at_one_partition(2, -1) == q("7/6"));
}

TEST_CASE("partition sums equal the series for small n and l") {
    for (unsigned n = 0; n <= 9; ++n) {
        for (std::int64_t l = -9; l <= 9; ++l) {
            const auto poly = bernoulli_poly(n, l);
            CHECK(bernoulli_number_partition(n, l) == poly.back());
            CHECK(bernoulli_at_one_partition(n, l) == sum(poly));
        }
    }
}

TEST_CASE("max pole") {
    CHECK(max_pole(2, -2) == 1);
    CHECK(max_pole(1, -5) == 1);
    for (std::int64_t l = -8; l <= 8; ++l) CHECK(max_pole(0, l) == 0);
    for (unsigned n = 0; n <= 12; ++n)
        for (std::int64_t l = -12; l <= 12; ++l) CHECK(max_pole(n, l) == pole_profile(n, l).max_pole);
    for (unsigned m = 0; m <= 10; ++m)
        for (unsigned k = 1; k <= 10; ++k)
            CHECK(max_pole(m, -static_cast<std::int64_t>(k)) ==
                  (base2::two_power_set(m) - base2::two_power_set(m + k)).size());
}

TEST_CASE("pole profiles") {
    const auto p = pole_profile(2, -2);
    CHECK(p.poles == std::vector<unsigned>{0, 0, 1});
    CHECK(p.max_pole == 1);
    CHECK(p.argmax_codegrees == std::vector<std::uint32_t>{2});
    CHECK(p.constant_attains_max);
    CHECK(p.constant_uniquely_attains_max);

    const auto c = pole_profile(0, 3);
    CHECK(c.poles == std::vector<unsigned>{0});
    CHECK(c.max_pole == 0);

    // (6,4): C(6,4) B_2^{(-4)} = S(6,4) = 65
    const auto b = bernoulli_numbers(2, -4);
    CHECK(b[2] == q("13/3"));
    CHECK(pole_profile(2, -4).poles.back() == 0);
    CHECK(max_pole(2, -4) == 0);

    // Stirling specialisation: monic, and the running maximum climbs one
    // step at a time, first reaching 1 at the least element of [n-k]-[n]
    for (unsigned m = 1; m <= 14; ++m) {
        for (unsigned k = 1; k <= 14; ++k) {
            const auto prof = pole_profile(m, -static_cast<std::int64_t>(k));
            CHECK(prof.poles.front() == 0);
            unsigned running = 0;
            for (auto pole : prof.poles) {
                CHECK(pole <= running + 1);
                running = std::max(running, pole);
            }
            const auto diff = base2::two_power_set(m) - base2::two_power_set(m + k);
            if (!diff.empty()) {
                std::uint32_t first = 0;
                while (prof.poles[first] == 0) ++first;
                CHECK(prof.poles[first] == 1);
                CHECK(first == diff.min());
            }
        }
    }
}

TEST_CASE("dominant terms") {
    const auto t64 = dominant_terms(6, 4, false);
    REQUIRE(t64.size() == 2);
    CHECK(t64[0].u == PartitionU{{1, 2}});
    CHECK(abs(t64[0].t) == 7);
    CHECK(t64[0].nu_t == 0);
    CHECK(t64[1].u == PartitionU{{1, 1}});
    CHECK(abs(t64[1].t) == q("7/2"));
    CHECK(t64[1].nu_t == -1);

    const auto t42 = dominant_terms(4, 2, false);
    CHECK(abs(t42[0].t) == q("15/4"));
    CHECK(t42[0].nu_t == -2);

    const auto t63 = dominant_terms(6, 3, false);
    REQUIRE(t63.size() == 3);
    CHECK(t63[2].shape == DominantTerm::Shape::ones_and_a_three);
    CHECK(t63[2].u == PartitionU{{3, 1}});

    // closed forms for the three t values
    for (unsigned n = 2; n <= 24; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            const std::int64_t m = n - k;
            const auto terms = dominant_terms(n, k, false);
            const ExactRational sign = m % 2 ? -1 : 1;
            ExactRational ti = sign * ExactRational(binomial(n + m, n)) / (ExactInt(1) << m);
            ti.canonicalize();
            CHECK(terms[0].t == ti);
            ExactRational tii = -sign * ExactRational(binomial(n + m - 1, n)) / (ExactInt(1) << (m - 1));
            tii.canonicalize();
            CHECK(terms[1].t == tii);
            if (m % 2 == 1 && m > 1) {
                REQUIRE(terms.size() == 3);
                ExactRational tiii = sign * ExactRational(binomial(n + m - 2, n) * (m - 2)) / (ExactInt(1) << (m - 1));
                tiii.canonicalize();
                CHECK(terms[2].t == tiii);
            } else {
                CHECK(terms.size() == 2);
            }
        }
    }
    CHECK_THROWS(dominant_terms(3, 4, false));
    CHECK_THROWS(dominant_terms(3, 0, true));
}

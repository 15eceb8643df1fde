#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twoadic/base2.hpp"
#include "twoadic/partition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

using namespace twoadic;
using namespace twoadic::bernoulli;

namespace {

// p(w) from the usual coin-change recurrence.
std::vector<std::uint64_t> partition_counts(unsigned w_max) {
    std::vector<std::uint64_t> p(w_max + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= w_max; ++part)
        for (unsigned w = part; w <= w_max; ++w) p[w] += p[w - part];
    return p;
}

// Partitions of w as non-increasing part lists, converted to multiplicities.
std::set<std::vector<std::uint32_t>> brute_force(unsigned w) {
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
        if (rest == 0) {
            std::vector<std::uint32_t> mult(w, 0);
            for (auto p : parts) ++mult[p - 1];
            while (!mult.empty() && mult.back() == 0) mult.pop_back();
            out.insert(mult);
            return;
        }
        for (unsigned p = std::min(rest, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(rest - p, p);
            parts.pop_back();
        }
    };
    rec(w, w);
    return out;
}

}  // namespace

TEST_CASE("statistics of a partition") {
    const PartitionU u{{1, 2}, {3, 1}};
    CHECK(u[1] == 2);
    CHECK(u[2] == 0);
    CHECK(u[3] == 1);
    CHECK(u[7] == 0);
    CHECK(u.weight() == 5);
    CHECK(u.length() == 3);
    CHECK(u.largest_part() == 3);
    CHECK(u.lambda() == 2 * 2 * 4);
    CHECK(u.lambda_valuation() == 4);
    CHECK(u.multinomial() == 3);
    CHECK(u.concentrated_in_one_and_three());
    CHECK(u.to_string() == "{1:2, 3:1}");

    const PartitionU v(std::vector<std::uint32_t>{0, 1, 0, 0});
    CHECK(v.largest_part() == 2);
    CHECK(v.lambda() == 3);
    CHECK(v.lambda_valuation() == 0);
    CHECK_FALSE(v.concentrated_in_one_and_three());
    CHECK(v == PartitionU{{2, 1}});

    const PartitionU empty;
    CHECK(empty.weight() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.lambda() == 1);
    CHECK(empty.multinomial() == 1);
    CHECK(empty.to_string() == "{}");
}

TEST_CASE("multinomial and lambda against direct products") {
    for (unsigned w = 1; w <= 14; ++w) {
        for (const auto& u : partitions_of(w)) {
            ExactInt lambda = 1, denom = 1, dfact = 1;
            std::uint64_t nu_l = 0;
            for (std::uint32_t i = 1; i <= u.largest_part(); ++i) {
                for (std::uint32_t j = 0; j < u[i]; ++j) {
                    lambda *= i + 1;
                    nu_l += base2::nu(i + 1);
                    denom *= j + 1;
                }
            }
            for (std::uint64_t j = 2; j <= u.length(); ++j) dfact *= static_cast<unsigned long>(j);
            CHECK(u.lambda() == lambda);
            CHECK(u.lambda_valuation() == nu_l);
            CHECK(u.multinomial() * denom == dfact);
            CHECK(u.weight() >= u.length());
        }
    }
}

TEST_CASE("enumeration matches p(w) and brute force, in lexicographic order") {
    const auto p = partition_counts(25);
    for (unsigned w = 0; w <= 25; ++w) {
        const auto parts = partitions_of(w);
        CHECK(parts.size() == p[w]);
        CHECK(std::is_sorted(parts.begin(), parts.end()));
        CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
        for (const auto& u : parts) CHECK(u.weight() == w);
        if (w <= 16) {
            std::set<std::vector<std::uint32_t>> got;
            for (const auto& u : parts) got.insert(u.multiplicities());
            CHECK(got == brute_force(w));
        }
    }
}

TEST_CASE("enumerator instances are independent") {
    PartitionEnumerator a(5), b(5);
    auto a1 = a.next();
    auto a2 = a.next();
    auto b1 = b.next();
    REQUIRE(a1);
    REQUIRE(a2);
    REQUIRE(b1);
    CHECK(*a1 == *b1);
    CHECK(*a1 < *a2);
    unsigned rest = 2;
    while (a.next()) ++rest;
    CHECK(rest == 7);
    CHECK_FALSE(a.next());

    PartitionEnumerator zero(0);
    auto only = zero.next();
    REQUIRE(only);
    CHECK(only->weight() == 0);
    CHECK_FALSE(zero.next());
}

TEST_CASE("partitions_up_to groups by weight") {
    const auto all = partitions_up_to(6);
    const auto p = partition_counts(6);
    std::uint64_t total = 0;
    for (auto c : p) total += c;
    CHECK(all.size() == total);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].weight() <= all[i].weight());
}

TEST_CASE("bound and transfers") {
    CHECK_THROWS_AS(partitions_of(31), std::length_error);
    CHECK_NOTHROW(partitions_of(12, 12));
    CHECK_THROWS_AS(partitions_of(13, 12), std::length_error);

    const PartitionU u{{1, 1}, {2, 2}, {4, 1}};
    const auto t = u.transfer_to_one(2);
    CHECK(t == PartitionU{{1, 3}, {4, 1}});
    CHECK(t.length() == u.length());
    CHECK(t.weight() < u.weight());
}

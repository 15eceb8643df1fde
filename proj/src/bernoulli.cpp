#include "twoadic/bernoulli.hpp"

#include "twoadic/base2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twoadic::bernoulli {

namespace {

using Series = std::vector<ExactRational>;

void check_series_bound(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    const std::uint64_t mag = l < 0 ? static_cast<std::uint64_t>(-(l + 1)) + 1 : static_cast<std::uint64_t>(l);
    if (n > bound || mag > bound)
        throw std::length_error("series bound exceeded: n=" + std::to_string(n) +
                                " l=" + std::to_string(l) + " bound=" + std::to_string(bound));
}

ExactInt factorial(std::uint64_t n) {
    ExactInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Series multiply(const Series& a, const Series& b) {
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series power(Series base, std::uint64_t e, std::size_t len) {
    Series acc(len, 0);
    acc[0] = 1;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return acc;
}

// (e^t - 1)/t = sum t^i / (i+1)!
Series exp_quotient(std::size_t len) {
    Series g(len);
    ExactInt f = 1;
    for (std::size_t i = 0; i < len; ++i) {
        f *= static_cast<unsigned long>(i + 1);
        g[i] = ExactRational(1, f);
        g[i].canonicalize();
    }
    return g;
}

// t/(e^t - 1) as the reciprocal of exp_quotient
Series todd_series(std::size_t len) {
    const Series g = exp_quotient(len);
    Series inv(len, 0);
    inv[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        ExactRational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += g[j] * inv[i - j];
        inv[i] = -acc;
    }
    return inv;
}

ExactInt falling_factorial(std::uint64_t n, std::uint64_t w) {
    if (w > n) return 0;
    ExactInt out = 1;
    for (std::uint64_t i = 0; i < w; ++i) out *= static_cast<unsigned long>(n - i);
    return out;
}

}  // namespace

Series order_series(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    check_series_bound(n, l, bound);
    const std::size_t len = n + 1;
    if (l >= 0) return power(todd_series(len), static_cast<std::uint64_t>(l), len);
    return power(exp_quotient(len), static_cast<std::uint64_t>(-l), len);
}

Series bernoulli_numbers(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    Series c = order_series(n, l, bound);
    ExactInt f = 1;
    for (std::uint32_t j = 0; j <= n; ++j) {
        if (j > 0) f *= j;
        c[j] *= f;
    }
    return c;
}

Series bernoulli_poly(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    const Series b = bernoulli_numbers(n, l, bound);
    // Appell: the coefficient of x^{n-j} is C(n, j) B_j
    Series out(n + 1);
    ExactInt binom = 1;
    for (std::uint32_t j = 0; j <= n; ++j) {
        if (j > 0) {
            binom *= n - j + 1;
            binom /= j;
        }
        out[j] = b[j] * binom;
    }
    return out;
}

ExactRational evaluate(const Series& coeffs_high_first, const ExactRational& x) {
    ExactRational acc = 0;
    for (const auto& c : coeffs_high_first) acc = acc * x + c;
    return acc;
}

ExactRational t_u(const PartitionU& u, std::int64_t s) {
    ExactRational out(binomial(s, u.length()) * u.multinomial(), u.lambda());
    out.canonicalize();
    return out;
}

ExactRational tau_u(const PartitionU& u, std::int64_t s, std::uint32_t n) {
    return t_u(u, s) * falling_factorial(n, u.weight());
}

ExactRational bernoulli_number_partition(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    const std::int64_t s = l - static_cast<std::int64_t>(n) - 1;
    ExactRational sum = 0;
    for (const auto& u : partitions_up_to(n, bound)) sum += t_u(u, s);
    sum *= factorial(n);
    return n % 2 == 0 ? sum : ExactRational(-sum);
}

ExactRational bernoulli_at_one_partition(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    const std::int64_t s = l - static_cast<std::int64_t>(n) - 1;
    ExactRational sum = 0;
    for (const auto& u : partitions_of(n, bound)) sum += t_u(u, s);
    sum *= factorial(n);
    return n % 2 == 0 ? sum : ExactRational(-sum);
}

unsigned max_pole(std::uint32_t n, std::int64_t l) {
    const std::int64_t top = l - static_cast<std::int64_t>(n) - 1;
    unsigned count = 0;
    for (auto p : base2::two_power_set(n).members())
        if (base2::is_odd_binom(top, p)) ++count;
    return count;
}

PoleProfile pole_profile_of(const Series& coeffs) {
    PoleProfile prof;
    prof.poles.reserve(coeffs.size());
    for (const auto& c : coeffs) prof.poles.push_back(static_cast<unsigned>(pole_order(c)));
    if (prof.poles.empty()) return prof;
    prof.max_pole = *std::max_element(prof.poles.begin(), prof.poles.end());
    for (std::uint32_t j = 0; j < prof.poles.size(); ++j)
        if (prof.poles[j] == prof.max_pole) prof.argmax_codegrees.push_back(j);
    prof.constant_attains_max = prof.poles.back() == prof.max_pole;
    prof.constant_uniquely_attains_max =
        prof.constant_attains_max && prof.argmax_codegrees.size() == 1;
    return prof;
}

PoleProfile pole_profile(std::uint32_t n, std::int64_t l, std::uint32_t bound) {
    return pole_profile_of(bernoulli_poly(n, l, bound));
}

std::vector<DominantTerm> dominant_terms(std::uint32_t n_row, std::uint32_t k, bool shifted) {
    if (k == 0 || k > n_row) throw std::domain_error("dominant_terms needs 1 <= k <= n");
    const std::uint32_t m = n_row - k;
    const std::int64_t l = shifted ? 1 - static_cast<std::int64_t>(k) : -static_cast<std::int64_t>(k);
    const std::int64_t s = l - static_cast<std::int64_t>(m) - 1;
    const long pole = static_cast<long>(max_pole(m, l));
    const ExactInt mfact = factorial(m);

    std::vector<DominantTerm> out;
    auto add = [&](DominantTerm::Shape shape, PartitionU u) {
        DominantTerm term{shape, std::move(u), 0};
        term.t = t_u(term.u, s);
        const std::uint64_t w = term.u.weight();
        term.in_sum = shifted ? w == m : w <= m;
        if (sgn(term.t) != 0) {
            term.nu_t = nu2(term.t);
            term.nu_scaled = nu2(ExactRational(term.t * mfact));
            term.attains_max_pole = term.nu_scaled == -pole;
        }
        out.push_back(std::move(term));
    };

    add(DominantTerm::Shape::all_ones, m > 0 ? PartitionU{{1, m}} : PartitionU{});
    if (m >= 1)
        add(DominantTerm::Shape::all_ones_less_one, m > 1 ? PartitionU{{1, m - 1}} : PartitionU{});
    if (m % 2 == 1 && m > 1) {
        std::vector<std::uint32_t> mult{m - 3, 0, 1};
        add(DominantTerm::Shape::ones_and_a_three, PartitionU(std::move(mult)));
    }
    return out;
}

}  // namespace twoadic::bernoulli

#include "twoadic/analysis.hpp"

#include "twoadic/base2.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoadic::analysis {

using base2::common_count;
using base2::no_unforced_carries;
using base2::nu;
using base2::sigma;
using base2::two_power_set;

namespace {

void check_pair(unsigned n, unsigned k) {
    if (k == 0 || k > n)
        throw std::domain_error("expected 1 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
}

int isigma(std::uint64_t x) { return static_cast<int>(sigma(x)); }

}  // namespace

int EstimateBundle::max() const noexcept { return std::max({mz, smz, amz, samz}); }

EstimateBundle estimates_second(unsigned n, unsigned k) {
    check_pair(n, k);
    const unsigned m = n - k;
    EstimateBundle e;
    e.kind = Kind::second;
    e.mz = isigma(k) - isigma(n);
    e.smz = isigma(k - 1) - isigma(n - 1);
    e.amz = e.mz + static_cast<int>(common_count(n, m));
    e.samz = e.smz + static_cast<int>(common_count(n - 1, m));
    return e;
}

EstimateBundle estimates_first(unsigned n, unsigned k) {
    check_pair(n, k);
    const auto diff = two_power_set(n - k);
    EstimateBundle e;
    e.kind = Kind::first;
    e.mz = isigma(k - 1) - isigma(n - 1);
    e.smz = isigma(k) - isigma(n);
    e.amz = e.mz + static_cast<int>((diff - two_power_set(k - 1)).size());
    e.samz = e.smz + static_cast<int>((diff - two_power_set(k)).size());
    return e;
}

EstimateBundle estimates(Kind kind, unsigned n, unsigned k) {
    return kind == Kind::second ? estimates_second(n, k) : estimates_first(n, k);
}

std::string CaseLabel::token() const {
    std::string s;
    switch (which) {
        case Case::MZC: s = "MZC"; break;
        case Case::SMZC: s = "SMZC"; break;
        case Case::AMZC: s = "AMZC"; break;
        case Case::SAMZC: s = "SAMZC"; break;
    }
    if (sub != SubCriterion::none) {
        s += '(';
        s += static_cast<char>(sub);
        s += ')';
    }
    return s;
}

CriteriaDetail criteria(unsigned n, unsigned k) {
    check_pair(n, k);
    const std::uint64_t m = n - k;
    const auto set_n = two_power_set(n);
    const auto set_n1 = two_power_set(n - 1);
    const auto set_m = two_power_set(m);

    CriteriaDetail d;
    d.mzc = (set_m & set_n).empty();
    d.smzc = (set_m & set_n1).empty();

    d.amz_common = !d.mzc;
    if (d.amz_common) {
        // from u_1 = n-k
        d.amz_a = no_unforced_carries(n, m);
        // from u_1 = n-k-1
        d.amz_b = nu(n) == nu(m) && no_unforced_carries(n, m - 1);
        // from u_1 = n-k-3, u_3 = 1
        d.amz_c = m % 2 == 1 && m >= 3 &&
                  set_n.least_positive_exponent() == set_m.least_positive_exponent() &&
                  no_unforced_carries(n, m - 2);
    }

    d.samz_common = !d.smzc;
    if (d.samz_common) {
        d.samz_a = no_unforced_carries(n - 1, m);
        d.samz_c = m % 2 == 1 && m >= 3 &&
                   set_n1.least_positive_exponent() == set_m.least_positive_exponent() &&
                   no_unforced_carries(n - 1, m - 2);
    }
    return d;
}

std::vector<CaseLabel> classify(unsigned n, unsigned k) {
    const CriteriaDetail d = criteria(n, k);
    std::vector<CaseLabel> labels;
    if (d.mzc) labels.push_back({Case::MZC});
    if (d.smzc) labels.push_back({Case::SMZC});
    if (d.amz_common && (d.amz_a + d.amz_b + d.amz_c) == 1) {
        const auto sub = d.amz_a ? SubCriterion::a : d.amz_b ? SubCriterion::b : SubCriterion::c;
        labels.push_back({Case::AMZC, sub});
    }
    if (d.samz_common && (d.samz_a + d.samz_c) == 1)
        labels.push_back({Case::SAMZC, d.samz_a ? SubCriterion::a : SubCriterion::c});
    return labels;
}

bool has_case(const std::vector<CaseLabel>& labels, Case c) {
    return std::any_of(labels.begin(), labels.end(), [c](const CaseLabel& l) { return l.which == c; });
}

std::string join_labels(const std::vector<CaseLabel>& labels) {
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += ';';
        out += l.token();
    }
    return out;
}

OddTest odd_conditions(unsigned n, unsigned k) {
    check_pair(n, k);
    const unsigned m = n - k;
    const auto labels = classify(n, k);
    OddTest t;
    t.via_amz = isigma(n & m) == isigma(n) - isigma(k) &&
                (has_case(labels, Case::MZC) || has_case(labels, Case::AMZC));
    t.via_samz = isigma((n - 1) & m) == isigma(n - 1) - isigma(k - 1) &&
                 (has_case(labels, Case::SMZC) || has_case(labels, Case::SAMZC));
    return t;
}

bool is_odd(unsigned n, unsigned k) {
    const OddTest t = odd_conditions(n, k);
    if (t.via_amz != t.via_samz)
        throw std::logic_error("odd criteria disagree at n=" + std::to_string(n) +
                               " k=" + std::to_string(k));
    return t.via_amz;
}

bool hong_amdeberhan(unsigned n, unsigned k) {
    check_pair(n, k);
    // C(a+b, a) is odd iff a + b has no carries
    const std::uint64_t a = n - 1;
    const std::uint64_t b = n - k;
    return (a & b) == 0;
}

bool central_amzc(std::uint64_t k) {
    if (k == 0) throw std::domain_error("central_amzc needs k >= 1");
    return k % 8 == 3 && base2::is_fibbinary((k - 3) / 8);
}

std::string to_string(LimitBranch b) {
    switch (b) {
        case LimitBranch::nu_k_below_nu_n: return "nu(k)<nu(n)";
        case LimitBranch::equal_nu_min_diff_in_k: return "nu(k)=nu(n),min[n-k] in [k]";
        case LimitBranch::nu_n_below_nu_k: return "nu(n)<nu(k)";
        case LimitBranch::equal_nu_min_diff_in_n: return "nu(k)=nu(n),min[n-k] in [n]";
    }
    return "?";
}

AsymptoticLimit asymptotic_limit(unsigned n, unsigned k) {
    check_pair(n, k);
    if (k == n) throw std::domain_error("asymptotic_limit needs k < n");
    const std::uint64_t m = n - k;
    const unsigned nu_n = nu(n);
    const unsigned nu_k = nu(k);
    const std::uint64_t low_diff = std::uint64_t{1} << nu(m);

    const long plain = isigma(k) - isigma(n) + base2::nu_binom(n, m).total;
    const long shifted = isigma(k - 1) - isigma(n - 1) + base2::nu_binom(n - 1, m).total;

    AsymptoticLimit out;
    unsigned exponent = 0;  // attainment needs 2^{h - 1 + exponent} >= limit
    bool strict = false;
    if (nu_k < nu_n || (nu_k == nu_n && two_power_set(k).contains(low_diff))) {
        out.branch = nu_k < nu_n ? LimitBranch::nu_k_below_nu_n : LimitBranch::equal_nu_min_diff_in_k;
        out.limit = plain;
        exponent = nu(m);
    } else {
        out.branch = nu_n < nu_k ? LimitBranch::nu_n_below_nu_k : LimitBranch::equal_nu_min_diff_in_n;
        out.limit = shifted;
        exponent = nu_n;
        strict = nu_n == nu_k;
    }
    out.unified = shifted;
    if (out.unified != out.limit)
        throw std::logic_error("limit branches disagree at n=" + std::to_string(n) +
                               " k=" + std::to_string(k));

    // 2^{h-1+e} >= L  <=>  2^{h+e} >= 2L
    const long target = 2 * out.limit;
    unsigned h = 0;
    auto holds = [&](unsigned hh) {
        const long lhs = 1L << (hh + exponent);
        return strict ? lhs > target : lhs >= target;
    };
    while (!holds(h)) ++h;
    out.threshold_h = h;
    return out;
}

ValuationReport make_report(Kind kind, unsigned n, unsigned k, unsigned exact_nu) {
    ValuationReport r;
    r.n = n;
    r.k = k;
    r.kind = kind;
    r.exact_nu = exact_nu;
    r.estimates = estimates(kind, n, k);
    if (kind == Kind::second) r.labels = classify(n, k);
    r.odd = exact_nu == 0;
    return r;
}

ValuationReport make_report(Kind kind, unsigned n, unsigned k) {
    check_pair(n, k);
    return make_report(kind, n, k, oracle::nu_stirling(kind, n, k));
}

}  // namespace twoadic::analysis

#include "twoadic/analysis.hpp"
#include "twoadic/base2.hpp"
#include "twoadic/bernoulli.hpp"
#include "twoadic/oracle.hpp"
#include "twoadic/scan.hpp"
#include "twoadic/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace twoadic;

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kUsage = 2;

std::optional<unsigned> env_unsigned(const char* name) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(raw, &used);
        if (used == std::string(raw).size() && v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
}

oracle::Kind kind_of(int k) {
    if (k == 1) return oracle::Kind::first;
    if (k == 2) return oracle::Kind::second;
    throw std::invalid_argument("--kind must be 1 or 2");
}

void check_pair(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::domain_error("expected 1 <= k <= n");
}

int cmd_val(unsigned n, unsigned k, int kind_flag, unsigned precision) {
    check_pair(n, k);
    const auto kind = kind_of(kind_flag);
    const auto r = analysis::make_report(kind, n, k, oracle::nu_stirling(kind, n, k, precision));
    std::cout << "n " << r.n << "\nk " << r.k << "\nkind " << kind_flag << "\nexact_nu " << r.exact_nu
              << "\nmz " << r.estimates.mz << "\nsmz " << r.estimates.smz << "\namz " << r.estimates.amz
              << "\nsamz " << r.estimates.samz << "\nlabels [";
    for (std::size_t i = 0; i < r.labels.size(); ++i) std::cout << (i ? ", " : "") << r.labels[i].token();
    std::cout << "]\nodd " << (r.odd ? "true" : "false") << '\n';
    return kOk;
}

int cmd_scan(scan::ScanConfig config, const std::string& output) {
    if (output.empty()) {
        scan::run_scan(config, std::cout);
    } else {
        const auto records = scan::scan_to_file(config, output);
        std::cerr << records << " records written to " << output << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& family, const verify::FamilyOptions& opts) {
    const auto report = verify::run_family(family, opts);
    if (!report) {
        std::cerr << "unknown family '" << family << "'; known:";
        for (const auto& name : verify::family_names()) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kUsage;
    }
    std::cout << "family " << report->family << "\nparams_tested " << report->params_tested
              << "\nfailures " << report->failures.size() << "\nelapsed_s " << report->elapsed.count() << '\n';
    for (const auto& f : report->failures)
        std::cout << "FAIL " << f.params << " predicted " << f.predicted << " actual " << f.actual << '\n';
    for (const auto& o : report->observations) std::cout << "note " << o << '\n';
    return report->verified() ? kOk : kFailures;
}

int cmd_polygon(unsigned n, unsigned k) {
    check_pair(n, k);
    const std::uint32_t m = n - k;
    const std::int64_t l = -static_cast<std::int64_t>(k);
    const auto prof = bernoulli::pole_profile(m, l);
    std::cout << "polynomial B_" << m << "^(" << l << ")(x)\npoles_by_codegree [";
    for (std::size_t j = 0; j < prof.poles.size(); ++j) std::cout << (j ? ", " : "") << prof.poles[j];
    std::cout << "]\nmax_pole " << prof.max_pole << "\nmax_pole_closed_form " << bernoulli::max_pole(m, l)
              << "\nargmax_codegrees [";
    for (std::size_t j = 0; j < prof.argmax_codegrees.size(); ++j)
        std::cout << (j ? ", " : "") << prof.argmax_codegrees[j];
    std::cout << "]\nconstant_attains_max " << (prof.constant_attains_max ? "true" : "false")
              << "\nconstant_uniquely_attains_max " << (prof.constant_uniquely_attains_max ? "true" : "false")
              << '\n';
    return kOk;
}

int cmd_limit(unsigned n, unsigned k, unsigned h_max, unsigned precision) {
    check_pair(n, k);
    const auto lim = analysis::asymptotic_limit(n, k);
    std::cout << "limit " << lim.limit << "\nbranch " << analysis::to_string(lim.branch) << "\nthreshold_h "
              << lim.threshold_h << '\n';
    if ((std::uint64_t{n} << h_max) > (1u << 16)) throw std::domain_error("--h-max too large for this n");
    oracle::ValuationOracle oracle(oracle::Kind::second, precision);
    for (unsigned h = 0; h <= h_max; ++h) {
        const unsigned v = oracle.nu(n << h, k << h);
        std::cout << "h " << h << " nu " << v << (h >= lim.threshold_h ? " (attained)" : "") << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-adic valuations of Stirling numbers"};
    app.require_subcommand(1);

    unsigned n = 0, k = 0;
    int kind = 2;

    auto* val = app.add_subcommand("val", "exact valuation, estimates and labels for one pair");
    val->add_option("n", n)->required();
    val->add_option("k", k)->required();
    val->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));

    std::string n_range, k_range, out_format = "csv", output;
    std::optional<unsigned> workers, precision;
    auto* scan_cmd = app.add_subcommand("scan", "valuations over a range of pairs");
    scan_cmd->add_option("--n", n_range, "a..b")->required();
    scan_cmd->add_option("--k", k_range, "a..b (default 1..n)");
    scan_cmd->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
    scan_cmd->add_option("--out", out_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    scan_cmd->add_option("--workers", workers);
    scan_cmd->add_option("--precision", precision, "initial truncation bits");
    scan_cmd->add_option("--output", output, "file, written atomically (default stdout)");

    std::string family;
    std::optional<unsigned> n_max, h_max;
    auto* ver = app.add_subcommand("verify", "check a theorem family");
    ver->add_option("family", family)->required();
    ver->add_option("--n-max", n_max);
    ver->add_option("--h-max", h_max);
    ver->add_option("--workers", workers);

    auto* poly = app.add_subcommand("polygon", "pole profile of B_{n-k}^{(-k)}(x)");
    poly->add_option("n", n)->required();
    poly->add_option("k", k)->required();

    unsigned limit_h = 6;
    auto* lim = app.add_subcommand("limit", "limit of nu(S(2^h n, 2^h k))");
    lim->add_option("n", n)->required();
    lim->add_option("k", k)->required();
    lim->add_option("--h-max", limit_h);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const unsigned w = workers.value_or(env_unsigned("TWOADIC_WORKERS").value_or(1));
        const unsigned t = precision.value_or(env_unsigned("TWOADIC_PRECISION").value_or(oracle::kDefaultPrecision));
        if (*val) return cmd_val(n, k, kind, t);
        if (*scan_cmd) {
            scan::ScanConfig config;
            config.n = scan::parse_range(n_range);
            if (!k_range.empty()) config.k = scan::parse_range(k_range);
            config.kind = kind_of(kind);
            config.format = scan::parse_format(out_format);
            config.workers = w;
            config.precision = t;
            return cmd_scan(config, output);
        }
        if (*ver) return cmd_verify(family, {n_max, h_max, w});
        if (*poly) return cmd_polygon(n, k);
        if (*lim) return cmd_limit(n, k, limit_h, t);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

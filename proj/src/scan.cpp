#include "twoadic/scan.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace twoadic::scan {

namespace {

unsigned parse_unsigned(std::string_view s) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a non-negative integer: '" + std::string(s) + "'");
    return v;
}

// Integers beyond 2^53 lose precision in common JSON readers.
nlohmann::json json_int(long long v) {
    constexpr long long kSafe = 1LL << 53;
    if (v > kSafe || v < -kSafe) return std::to_string(v);
    return v;
}

int kind_number(oracle::Kind kind) { return kind == oracle::Kind::first ? 1 : 2; }

// Records for rows [lo, hi], each followed by a newline.
std::string scan_block(const ScanConfig& config, unsigned lo, unsigned hi) {
    oracle::ValuationOracle oracle(config.kind, config.precision);
    std::string out;
    for (unsigned n = lo; n <= hi; ++n) {
        const unsigned k_lo = config.k ? config.k->lo : 1;
        const unsigned k_hi = std::min(n, config.k ? config.k->hi : n);
        if (k_lo > k_hi) continue;
        const auto nus = oracle.row(n, k_lo, k_hi);
        for (unsigned k = k_lo; k <= k_hi; ++k) {
            out += format_record(analysis::make_report(config.kind, n, k, nus[k - k_lo]), config.format);
            out += '\n';
        }
    }
    return out;
}

}  // namespace

Range parse_range(std::string_view text) {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_unsigned(text);
    } else {
        r.lo = parse_unsigned(text.substr(0, dots));
        r.hi = parse_unsigned(text.substr(dots + 2));
    }
    return r;
}

Format parse_format(std::string_view text) {
    if (text == "csv") return Format::csv;
    if (text == "jsonl") return Format::jsonl;
    throw std::invalid_argument("unknown output format '" + std::string(text) + "' (csv|jsonl)");
}

void validate(const ScanConfig& config) {
    auto check = [](const Range& r, const char* name) {
        if (r.lo < 1) throw std::invalid_argument(std::string(name) + " range must start at 1 or above");
        if (r.lo > r.hi) throw std::invalid_argument(std::string(name) + " range is empty");
    };
    check(config.n, "n");
    if (config.k) check(*config.k, "k");
    if (config.workers == 0) throw std::invalid_argument("workers must be positive");
    if (config.precision == 0) throw std::invalid_argument("precision must be positive");
}

std::string format_record(const analysis::ValuationReport& r, Format format) {
    const auto& e = r.estimates;
    const std::string labels = analysis::join_labels(r.labels);
    if (format == Format::jsonl) {
        nlohmann::ordered_json j;
        j["n"] = json_int(r.n);
        j["k"] = json_int(r.k);
        j["kind"] = kind_number(r.kind);
        j["nu"] = json_int(r.exact_nu);
        j["mz"] = json_int(e.mz);
        j["smz"] = json_int(e.smz);
        j["amz"] = json_int(e.amz);
        j["samz"] = json_int(e.samz);
        j["labels"] = labels;
        j["odd"] = r.odd;
        return j.dump();
    }
    std::string line;
    for (long long v : {static_cast<long long>(r.n), static_cast<long long>(r.k),
                        static_cast<long long>(kind_number(r.kind)), static_cast<long long>(r.exact_nu),
                        static_cast<long long>(e.mz), static_cast<long long>(e.smz),
                        static_cast<long long>(e.amz), static_cast<long long>(e.samz)}) {
        line += std::to_string(v);
        line += ',';
    }
    line += labels;
    line += ',';
    line += r.odd ? "true" : "false";
    return line;
}

std::size_t run_scan(const ScanConfig& config, std::ostream& out) {
    validate(config);
    const unsigned rows = config.n.hi - config.n.lo + 1;
    const unsigned workers = std::min(config.workers, rows);

    // contiguous blocks, balanced by the triangle area each one covers
    std::vector<unsigned> cuts{config.n.lo};
    {
        const double lo2 = double(config.n.lo) * config.n.lo;
        const double hi2 = double(config.n.hi + 1) * (config.n.hi + 1);
        for (unsigned w = 1; w < workers; ++w) {
            auto cut = static_cast<unsigned>(std::sqrt(lo2 + (hi2 - lo2) * w / workers));
            cut = std::clamp(cut, cuts.back() + 1, config.n.hi + 1 - (workers - w));
            cuts.push_back(cut);
        }
        cuts.push_back(config.n.hi + 1);
    }

    std::vector<std::string> blocks(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    blocks[w] = scan_block(config, cuts[w], cuts[w + 1] - 1);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::size_t records = 0;
    if (config.format == Format::csv) out << kCsvHeader << '\n';
    for (const auto& b : blocks) {
        records += static_cast<std::size_t>(std::count(b.begin(), b.end(), '\n'));
        out << b;
    }
    out.flush();
    if (!out) throw std::runtime_error("failed writing scan output");
    return records;
}

std::size_t scan_to_file(const ScanConfig& config, const std::filesystem::path& path) {
    validate(config);
    auto tmp = path;
    tmp += ".tmp";
    std::size_t records = 0;
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot open " + tmp.string());
            records = run_scan(config, out);
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
    return records;
}

}  // namespace twoadic::scan

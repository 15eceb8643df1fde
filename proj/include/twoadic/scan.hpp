#pragma once

// Range scans over (n, k) producing one record per pair. Rows are sharded
// across workers, each with its own oracle; the output order is n then k
// whatever the worker count.

#include "twoadic/analysis.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace twoadic::scan {

struct Range {
    unsigned lo = 1;
    unsigned hi = 1;
};

/// "a..b" or a single "a". Throws std::invalid_argument.
Range parse_range(std::string_view text);

enum class Format { csv, jsonl };
Format parse_format(std::string_view text);

struct ScanConfig {
    Range n{1, 1};
    std::optional<Range> k;  // every 1 <= k <= n when absent
    oracle::Kind kind = oracle::Kind::second;
    Format format = Format::csv;
    unsigned workers = 1;
    unsigned precision = oracle::kDefaultPrecision;
};

/// Throws std::invalid_argument for an empty range, n or k below 1, zero
/// workers or zero precision.
void validate(const ScanConfig& config);

inline constexpr std::string_view kCsvHeader = "n,k,kind,nu,mz,smz,amz,samz,labels,odd";

/// One line without the trailing newline.
std::string format_record(const analysis::ValuationReport& r, Format format);

/// Writes the header (csv only) and every record. Returns the record count.
std::size_t run_scan(const ScanConfig& config, std::ostream& out);

/// run_scan into a temporary next to `path`, renamed over it on success.
/// Nothing is left behind on failure.
std::size_t scan_to_file(const ScanConfig& config, const std::filesystem::path& path);

}  // namespace twoadic::scan

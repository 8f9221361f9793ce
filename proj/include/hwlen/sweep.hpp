#pragma once

#include <string>
#include <vector>

#include "hwlen/lengths.hpp"

// Prime sweeps: per-prime length reports computed in parallel, persisted
// as jsonl or csv, and summarized by ordinary-prime density.

namespace hwlen {

enum class SweepFormat { Jsonl, Csv };

struct SweepConfig {
    MultiPolyZ poly;
    uint64_t lo = 0, hi = 0;  // primes in [lo, hi)
    unsigned jobs = 1;
    bool include_bad = false;  // keep Bad primes in the persisted stream
    LengthOptions length_opts;
};

struct SweepSummary {
    uint64_t ordinary = 0, nilpotent = 0, intermediate = 0, bad = 0;
    uint64_t lo = 0, hi = 0;
    uint64_t total_wall_ms = 0;

    uint64_t total() const { return ordinary + nilpotent + intermediate + bad; }
    // Bad primes never count toward the density.
    double ordinary_density() const;
    nlohmann::ordered_json to_json() const;
};

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

struct SweepResult {
    std::vector<LengthReport> reports;  // ascending prime order
    SweepSummary summary;
};

// One report per prime in [lo, hi), in ascending prime order regardless of
// completion order. Throws InvalidInputError for a bad range or polynomial.
SweepResult run_sweep(const SweepConfig& cfg);

// jsonl: one report object per line; csv: kCsvHeader then one row each.
// LF line endings.
void persist(const std::vector<LengthReport>& reports, SweepFormat format,
             const std::string& path);
std::string persist_to_string(const std::vector<LengthReport>& reports, SweepFormat format);
// Reads back what persist wrote (both formats recognized by extension of
// the content, caller passes the format).
std::vector<LengthReport> parse_persisted(const std::string& content, SweepFormat format);

}  // namespace hwlen

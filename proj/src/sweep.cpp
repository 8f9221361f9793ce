#include "hwlen/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "hwlen/errors.hpp"

namespace hwlen {

double SweepSummary::ordinary_density() const {
    uint64_t good = ordinary + nilpotent + intermediate;
    return good == 0 ? 0.0 : static_cast<double>(ordinary) / static_cast<double>(good);
}

nlohmann::ordered_json SweepSummary::to_json() const {
    nlohmann::ordered_json j;
    j["range"] = {lo, hi};
    j["ordinary"] = ordinary;
    j["nilpotent"] = nilpotent;
    j["intermediate"] = intermediate;
    j["bad"] = bad;
    j["ordinary_density"] = ordinary_density();
    j["total_wall_ms"] = total_wall_ms;
    return j;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (hi <= lo) return out;
    std::vector<bool> sieve(hi, true);
    for (uint64_t i = 2; i * i < hi; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j < hi; j += i) sieve[j] = false;
    for (uint64_t i = std::max<uint64_t>(lo, 2); i < hi; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.lo <= 2 || cfg.hi < cfg.lo) throw InvalidInputError("bad prime range");
    if (!cfg.poly.is_homogeneous() || cfg.poly.is_zero() || cfg.poly.nvars < 3 ||
        cfg.poly.degree() < 2)
        throw InvalidInputError("polynomial must be homogeneous, n >= 2, d >= 2");

    auto t0 = std::chrono::steady_clock::now();
    std::vector<uint64_t> primes = primes_in_range(cfg.lo, cfg.hi);
    std::vector<LengthReport> reports(primes.size());

    const int jobs = static_cast<int>(std::max(1u, cfg.jobs));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int64_t i = 0; i < static_cast<int64_t>(primes.size()); ++i) {
        try {
            reports[i] = length_at_prime(cfg.poly, primes[i], cfg.length_opts);
        } catch (const OutOfMemoryBudgetError&) {
            reports[i] = LengthReport{};
            reports[i].prime = primes[i];
            reports[i].bad = BadReason::Inconclusive;
        } catch (const ResourceCapError&) {
            reports[i] = LengthReport{};
            reports[i].prime = primes[i];
            reports[i].bad = BadReason::Inconclusive;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    SweepResult res;
    res.summary.lo = cfg.lo;
    res.summary.hi = cfg.hi;
    for (auto& r : reports) {
        if (!r.valid)
            ++res.summary.bad;
        else if (r.cls->kind == FClass::Ordinary)
            ++res.summary.ordinary;
        else if (r.cls->kind == FClass::Nilpotent)
            ++res.summary.nilpotent;
        else
            ++res.summary.intermediate;
        if (r.valid || cfg.include_bad) res.reports.push_back(std::move(r));
    }
    auto t1 = std::chrono::steady_clock::now();
    res.summary.total_wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

std::string persist_to_string(const std::vector<LengthReport>& reports, SweepFormat format) {
    std::ostringstream os;
    if (format == SweepFormat::Csv) {
        os << kCsvHeader << "\n";
        for (auto& r : reports) os << report_to_csv_row(r) << "\n";
    } else {
        for (auto& r : reports) os << report_to_json(r).dump() << "\n";
    }
    return os.str();
}

void persist(const std::vector<LengthReport>& reports, SweepFormat format,
             const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output path: " + path);
    f << persist_to_string(reports, format);
    if (!f) throw Error("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<LengthReport> parse_persisted(const std::string& content, SweepFormat format) {
    std::vector<LengthReport> out;
    std::istringstream is(content);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (format == SweepFormat::Jsonl) {
            out.push_back(report_from_json(nlohmann::ordered_json::parse(line)));
            continue;
        }
        if (first) {
            first = false;
            if (line != kCsvHeader) throw Error("unexpected csv header");
            continue;
        }
        auto f = split_csv(line);
        if (f.size() != 11) throw Error("bad csv row");
        LengthReport r;
        r.prime = std::stoull(f[0]);
        r.valid = f[1] == "valid";
        if (!f[2].empty())
            for (BadReason br : {BadReason::VanishesModP, BadReason::DegreeDrop,
                                 BadReason::SingularFibre, BadReason::Inconclusive})
                if (f[2] == bad_reason_name(br)) r.bad = br;
        auto opt = [](const std::string& s) -> std::optional<uint64_t> {
            if (s.empty()) return std::nullopt;
            return std::stoull(s);
        };
        r.h = opt(f[3]);
        r.stable_rank = opt(f[4]);
        r.quasilength = opt(f[5]);
        r.d_module_length = opt(f[6]);
        r.unit_f_length = opt(f[7]);
        r.char0_ng_length = opt(f[8]);
        if (!f[9].empty()) {
            Classification c{FClass::Intermediate, r.stable_rank.value_or(0)};
            if (f[9] == "Ordinary") c = {FClass::Ordinary, r.stable_rank.value_or(0)};
            else if (f[9] == "Nilpotent") c = {FClass::Nilpotent, 0};
            r.cls = c;
        }
        r.wall_time_ms = std::stoull(f[10]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hwlen

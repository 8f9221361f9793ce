#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "hwlen/geometry.hpp"

// Per-prime length computations: D-module length 1 + stable rank,
// unit-F-module length 1 + quasilength, and the characteristic-zero
// comparison length 1 + h.

namespace hwlen {

struct LengthOptions {
    uint64_t coeff_budget = kDefaultCoeffBudget;
    bool emit_matrix = false;
};

struct LengthReport {
    uint64_t prime = 0;
    bool valid = false;
    std::optional<BadReason> bad;
    // engaged only when valid
    std::optional<uint64_t> h;             // dim H^{n-1}(Y_p, O_{Y_p}) = binomial(d-1, n)
    std::optional<uint64_t> stable_rank;
    std::optional<uint64_t> quasilength;
    std::optional<uint64_t> d_module_length;   // 1 + stable_rank
    std::optional<uint64_t> unit_f_length;     // 1 + quasilength
    std::optional<uint64_t> char0_ng_length;   // 1 + h
    std::optional<Classification> cls;
    std::optional<std::vector<std::vector<uint64_t>>> hasse_witt;  // row-major, flag-gated
    uint64_t wall_time_ms = 0;
};

// Full pipeline: good_reduction_check -> Hasse-Witt -> stable rank and
// quasilength. Bad reduction short-circuits with the lengths absent.
// Throws InvalidInputError for non-homogeneous input, n < 2 or d < 2.
LengthReport length_at_prime(const MultiPolyZ& g, uint64_t p, const LengthOptions& opts = {});

struct Char0Lengths {
    uint64_t h;
    uint64_t ng_length;
};

// h = binomial(d-1, n); the D_C-module length of N_g is 1 + h.
Char0Lengths char0_lengths(unsigned n, uint32_t d);

// JSON object with the exact wire field names; json stays ordered.
nlohmann::ordered_json report_to_json(const LengthReport& r);
LengthReport report_from_json(const nlohmann::ordered_json& j);

// CSV row matching the sweep header (no trailing newline).
std::string report_to_csv_row(const LengthReport& r);
inline constexpr const char* kCsvHeader =
    "prime,status,bad_reason,h,stable_rank,quasilength,d_module_length,unit_f_length,"
    "char0_ng_length,class,wall_time_ms";

}  // namespace hwlen

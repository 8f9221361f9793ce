#include "hwlen/lengths.hpp"

#include <cassert>
#include <chrono>
#include <sstream>

#include "hwlen/errors.hpp"

namespace hwlen {

Char0Lengths char0_lengths(unsigned n, uint32_t d) {
    assert(n >= 2 && d >= 1);
    uint64_t h = binomial(d - 1, n);
    return {h, 1 + h};
}

LengthReport length_at_prime(const MultiPolyZ& g, uint64_t p, const LengthOptions& opts) {
    if (!g.is_homogeneous() || g.is_zero()) throw InvalidInputError("polynomial must be homogeneous and nonzero");
    if (g.nvars < 3) throw InvalidInputError("need n >= 2 (at least 3 variables)");
    if (g.degree() < 2) throw InvalidInputError("need degree >= 2");
    const unsigned n = g.nvars - 1;
    const uint32_t d = static_cast<uint32_t>(g.degree());

    auto t0 = std::chrono::steady_clock::now();
    LengthReport r;
    r.prime = p;

    GoodReduction gr = good_reduction_check(g, p);
    if (!gr.valid()) {
        r.bad = gr.bad;
    } else {
        const HypersurfaceP& H = *gr.hypersurface;
        HasseWittData hw = [&]() -> HasseWittData {
            if (d == n + 1) {
                // 1x1 case: single-coefficient convolution, no full expansion
                SemilinearOperator op{H.field, 1, FMatrix::zero(H.field, 1, 1)};
                op.A.at(0, 0) = H.field.from_int(hasse_invariant_truncated(H));
                return {cohomology_basis(n, d), std::move(op)};
            }
            return hasse_witt_matrix(H, opts.coeff_budget);
        }();
        r.valid = true;
        uint64_t h = hw.basis.size();
        uint64_t s = stable_rank(hw.op);
        uint64_t q = quasilength(hw.op);
        r.h = h;
        r.stable_rank = s;
        r.quasilength = q;
        r.d_module_length = 1 + s;
        r.unit_f_length = 1 + q;
        r.char0_ng_length = 1 + char0_lengths(n, d).h;
        r.cls = classify(hw.op);
        // the paper's comparison inequalities hold by construction
        assert(q <= s && s <= h);
        assert(*r.unit_f_length <= *r.d_module_length &&
               *r.d_module_length <= *r.char0_ng_length);
        assert((r.cls->kind == FClass::Ordinary) == (*r.d_module_length == *r.char0_ng_length));
        if (opts.emit_matrix) {
            std::vector<std::vector<uint64_t>> m(hw.op.dim, std::vector<uint64_t>(hw.op.dim));
            for (size_t i = 0; i < hw.op.dim; ++i)
                for (size_t j = 0; j < hw.op.dim; ++j) m[i][j] = hw.op.A.at(i, j).c[0];
            r.hasse_witt = std::move(m);
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

nlohmann::ordered_json report_to_json(const LengthReport& r) {
    nlohmann::ordered_json j;
    j["prime"] = r.prime;
    j["status"] = r.valid ? "valid" : "bad";
    j["bad_reason"] = r.bad ? nlohmann::ordered_json(bad_reason_name(*r.bad))
                            : nlohmann::ordered_json(nullptr);
    auto put = [&](const char* key, const std::optional<uint64_t>& v) {
        j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    put("h", r.h);
    put("stable_rank", r.stable_rank);
    put("quasilength", r.quasilength);
    put("d_module_length", r.d_module_length);
    put("unit_f_length", r.unit_f_length);
    put("char0_ng_length", r.char0_ng_length);
    j["class"] = r.cls ? nlohmann::ordered_json(r.cls->to_string())
                       : nlohmann::ordered_json(nullptr);
    j["wall_time_ms"] = r.wall_time_ms;
    if (r.hasse_witt) j["hasse_witt"] = *r.hasse_witt;
    return j;
}

LengthReport report_from_json(const nlohmann::ordered_json& j) {
    LengthReport r;
    r.prime = j.at("prime").get<uint64_t>();
    r.valid = j.at("status").get<std::string>() == "valid";
    if (!j.at("bad_reason").is_null()) {
        std::string s = j.at("bad_reason").get<std::string>();
        for (BadReason br : {BadReason::VanishesModP, BadReason::DegreeDrop,
                             BadReason::SingularFibre, BadReason::Inconclusive})
            if (s == bad_reason_name(br)) r.bad = br;
    }
    auto get = [&](const char* key) -> std::optional<uint64_t> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<uint64_t>();
    };
    r.h = get("h");
    r.stable_rank = get("stable_rank");
    r.quasilength = get("quasilength");
    r.d_module_length = get("d_module_length");
    r.unit_f_length = get("unit_f_length");
    r.char0_ng_length = get("char0_ng_length");
    if (!j.at("class").is_null()) {
        std::string s = j.at("class").get<std::string>();
        Classification c{FClass::Intermediate, r.stable_rank.value_or(0)};
        if (s == "Ordinary") c = {FClass::Ordinary, r.stable_rank.value_or(0)};
        else if (s == "Nilpotent") c = {FClass::Nilpotent, 0};
        r.cls = c;
    }
    r.wall_time_ms = j.at("wall_time_ms").get<uint64_t>();
    if (j.contains("hasse_witt"))
        r.hasse_witt = j.at("hasse_witt").get<std::vector<std::vector<uint64_t>>>();
    return r;
}

std::string report_to_csv_row(const LengthReport& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    os << r.prime << "," << (r.valid ? "valid" : "bad") << ","
       << (r.bad ? bad_reason_name(*r.bad) : "") << "," << opt(r.h) << ","
       << opt(r.stable_rank) << "," << opt(r.quasilength) << "," << opt(r.d_module_length)
       << "," << opt(r.unit_f_length) << "," << opt(r.char0_ng_length) << ","
       << (r.cls ? r.cls->to_string() : "") << "," << r.wall_time_ms;
    return os.str();
}

}  // namespace hwlen

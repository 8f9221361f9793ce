#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "hwlen/errors.hpp"
#include "hwlen/modarith.hpp"
#include "hwlen/sweep.hpp"

using namespace hwlen;
using nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 invalid input, 2 bad reduction / negative
// verdict, 3 internal or resource failure
constexpr int kOk = 0, kInvalid = 1, kBad = 2, kInternal = 3;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Default variable names: x,y,z,w when those are what the text uses,
// otherwise x0..xn.
std::vector<std::string> infer_vars(const std::string& text) {
    std::set<std::string> names;
    for (size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            names.insert(text.substr(i, j - i));
            i = j;
        } else
            ++i;
    }
    const std::vector<std::string> letters = {"x", "y", "z", "w"};
    bool all_letters = true, all_indexed = true;
    int max_letter = -1, max_index = -1;
    for (auto& n : names) {
        auto it = std::find(letters.begin(), letters.end(), n);
        if (it != letters.end())
            max_letter = std::max(max_letter, static_cast<int>(it - letters.begin()));
        else
            all_letters = false;
        if (n.size() >= 2 && n[0] == 'x' &&
            std::all_of(n.begin() + 1, n.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            max_index = std::max(max_index, std::stoi(n.substr(1)));
        else
            all_indexed = false;
    }
    if (all_letters && max_letter >= 0)
        return {letters.begin(), letters.begin() + max_letter + 1};
    if (all_indexed && max_index >= 0) {
        std::vector<std::string> out;
        for (int i = 0; i <= max_index; ++i) out.push_back("x" + std::to_string(i));
        return out;
    }
    throw InvalidInputError("cannot infer variable names, pass --vars");
}

MultiPolyZ parse_input_poly(const std::string& text, const std::string& vars_flag,
                            std::vector<std::string>* vars_out = nullptr) {
    std::vector<std::string> vars =
        vars_flag.empty() ? infer_vars(text) : split_list(vars_flag);
    if (vars_out) *vars_out = vars;
    return parse_poly(text, vars);
}

uint64_t require_prime(uint64_t p) {
    if (p <= 2 || !is_prime_u64(p)) throw NotPrimeError(p);
    return p;
}

struct MatrixFile {
    FieldCtx field;
    SemilinearOperator op;
};

// "p e dim", optional modulus coefficient line when e > 1, then dim rows
// of dim entries; entries comma-joined e-tuples when e > 1.
MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInputError("cannot open matrix file: " + path);
    uint64_t p;
    unsigned e;
    size_t dim;
    if (!(f >> p >> e >> dim)) throw InvalidInputError("bad matrix header");
    std::optional<std::vector<uint64_t>> mod;
    if (e > 1) {
        std::vector<uint64_t> coeffs(e + 1);
        for (auto& c : coeffs)
            if (!(f >> c)) throw InvalidInputError("bad modulus line");
        mod = std::move(coeffs);
    }
    FieldCtx F = FieldCtx::make(p, e, mod);
    SemilinearOperator T{F, dim, FMatrix::zero(F, dim, dim)};
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            std::string entry;
            if (!(f >> entry)) throw InvalidInputError("bad matrix entry");
            std::vector<uint64_t> cs;
            for (auto& part : split_list(entry)) cs.push_back(std::stoull(part));
            if (cs.size() != e) throw InvalidInputError("entry arity mismatch");
            T.A.at(i, j) = F.from_coeffs(std::move(cs));
        }
    return {F, std::move(T)};
}

std::string exps_to_string(const Exps& e, const std::vector<std::string>& vars) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius lengths of local cohomology for homogeneous hypersurfaces"};
    app.require_subcommand(1);

    std::string poly_text, vars_flag, out_path, format = "jsonl", range, matrix_path;
    uint64_t prime = 0;
    unsigned jobs = 1, basis_n = 0, basis_d = 0;
    bool emit_matrix = false, include_bad = false, json_out = false;
    uint64_t budget = kDefaultCoeffBudget;

    auto* c_length = app.add_subcommand("length", "lengths at a single prime");
    c_length->add_option("--poly", poly_text)->required();
    c_length->add_option("--vars", vars_flag);
    c_length->add_option("--prime", prime)->required();
    c_length->add_flag("--emit-matrix", emit_matrix);
    c_length->add_option("--budget", budget);

    auto* c_sweep = app.add_subcommand("sweep", "sweep primes in a range");
    c_sweep->add_option("--poly", poly_text)->required();
    c_sweep->add_option("--vars", vars_flag);
    c_sweep->add_option("--range", range, "LO:HI, primes in [LO, HI)")->required();
    c_sweep->add_option("--jobs", jobs);
    c_sweep->add_option("--out", out_path);
    c_sweep->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}));
    c_sweep->add_flag("--include-bad", include_bad);
    c_sweep->add_option("--budget", budget);

    auto* c_hw = app.add_subcommand("hasse-witt", "print the Hasse-Witt matrix and basis");
    c_hw->add_option("--poly", poly_text)->required();
    c_hw->add_option("--vars", vars_flag);
    c_hw->add_option("--prime", prime)->required();
    c_hw->add_flag("--json", json_out);
    c_hw->add_option("--budget", budget);

    auto* c_basis = app.add_subcommand("basis", "cohomology monomial basis");
    c_basis->add_option("--n", basis_n)->required();
    c_basis->add_option("--d", basis_d)->required();
    c_basis->add_flag("--json", json_out);

    auto* c_check = app.add_subcommand("check", "good-reduction verdict");
    c_check->add_option("--poly", poly_text)->required();
    c_check->add_option("--vars", vars_flag);
    c_check->add_option("--prime", prime)->required();
    c_check->add_flag("--json", json_out);

    auto* c_semi = app.add_subcommand("semilinear", "stable rank and quasilength of a matrix");
    c_semi->add_option("--matrix", matrix_path)->required();
    c_semi->add_flag("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_length->parsed()) {
            MultiPolyZ g = parse_input_poly(poly_text, vars_flag);
            LengthOptions opts{budget, emit_matrix};
            LengthReport r = length_at_prime(g, require_prime(prime), opts);
            std::cout << report_to_json(r).dump(2) << "\n";
            return r.valid ? kOk : kBad;
        }
        if (c_sweep->parsed()) {
            auto pos = range.find(':');
            if (pos == std::string::npos) throw InvalidInputError("range must be LO:HI");
            SweepConfig cfg;
            cfg.poly = parse_input_poly(poly_text, vars_flag);
            cfg.lo = std::stoull(range.substr(0, pos));
            cfg.hi = std::stoull(range.substr(pos + 1));
            cfg.jobs = jobs;
            cfg.include_bad = include_bad;
            cfg.length_opts.coeff_budget = budget;
            SweepResult res = run_sweep(cfg);
            if (!out_path.empty()) {
                try {
                    persist(res.reports, format == "csv" ? SweepFormat::Csv : SweepFormat::Jsonl,
                            out_path);
                } catch (const Error& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kInternal;
                }
            } else {
                std::cerr << persist_to_string(
                    res.reports, format == "csv" ? SweepFormat::Csv : SweepFormat::Jsonl);
            }
            std::cout << res.summary.to_json().dump(2) << "\n";
            return kOk;
        }
        if (c_hw->parsed()) {
            std::vector<std::string> vars;
            MultiPolyZ g = parse_input_poly(poly_text, vars_flag, &vars);
            GoodReduction gr = good_reduction_check(g, require_prime(prime));
            if (!gr.valid()) {
                std::cout << "Bad: " << bad_reason_name(*gr.bad) << "\n";
                return kBad;
            }
            HasseWittData hw = hasse_witt_matrix(*gr.hypersurface, budget);
            if (json_out) {
                ordered_json j;
                j["prime"] = prime;
                j["basis"] = ordered_json::array();
                for (auto& m : hw.basis.monomials) j["basis"].push_back(m);
                std::vector<std::vector<uint64_t>> mat(hw.op.dim,
                                                       std::vector<uint64_t>(hw.op.dim));
                for (size_t i = 0; i < hw.op.dim; ++i)
                    for (size_t j2 = 0; j2 < hw.op.dim; ++j2)
                        mat[i][j2] = hw.op.A.at(i, j2).c[0];
                j["matrix"] = mat;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "basis (" << hw.basis.size() << "):";
                for (auto& m : hw.basis.monomials) std::cout << " " << exps_to_string(m, vars);
                std::cout << "\n";
                for (size_t i = 0; i < hw.op.dim; ++i) {
                    for (size_t j2 = 0; j2 < hw.op.dim; ++j2)
                        std::cout << (j2 ? " " : "") << hw.op.A.at(i, j2).c[0];
                    std::cout << "\n";
                }
            }
            return kOk;
        }
        if (c_basis->parsed()) {
            if (basis_n < 2 || basis_d < 1) throw InvalidInputError("need --n >= 2, --d >= 1");
            CohomologyBasis b = cohomology_basis(basis_n, basis_d);
            std::vector<std::string> vars;
            for (unsigned i = 0; i <= basis_n; ++i)
                vars.push_back(basis_n + 1 <= 4 ? std::vector<std::string>{"x", "y", "z",
                                                                           "w"}[i]
                                                : "x" + std::to_string(i));
            if (json_out) {
                ordered_json j;
                j["n"] = basis_n;
                j["d"] = basis_d;
                j["size"] = b.size();
                j["monomials"] = ordered_json::array();
                for (auto& m : b.monomials) j["monomials"].push_back(m);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dim = " << b.size() << "\n";
                for (auto& m : b.monomials) std::cout << exps_to_string(m, vars) << "\n";
            }
            return kOk;
        }
        if (c_check->parsed()) {
            MultiPolyZ g = parse_input_poly(poly_text, vars_flag);
            GoodReduction gr = good_reduction_check(g, require_prime(prime));
            if (json_out) {
                ordered_json j;
                j["prime"] = prime;
                j["status"] = gr.valid() ? "valid" : "bad";
                j["bad_reason"] =
                    gr.valid() ? ordered_json(nullptr) : ordered_json(bad_reason_name(*gr.bad));
                std::cout << j.dump(2) << "\n";
            } else if (gr.valid())
                std::cout << "Valid\n";
            else
                std::cout << "Bad: " << bad_reason_name(*gr.bad) << "\n";
            return gr.valid() ? kOk : kBad;
        }
        if (c_semi->parsed()) {
            MatrixFile mf = read_matrix_file(matrix_path);
            size_t s = stable_rank(mf.op);
            Classification cls = classify(mf.op);
            std::optional<size_t> ql;
            if (mf.field.e() == 1) ql = quasilength(mf.op);
            if (json_out) {
                ordered_json j;
                j["p"] = mf.field.p();
                j["e"] = mf.field.e();
                j["dim"] = mf.op.dim;
                j["stable_rank"] = s;
                j["quasilength"] = ql ? ordered_json(*ql) : ordered_json(nullptr);
                j["class"] = cls.to_string();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "stable_rank = " << s << "\n";
                if (ql) std::cout << "quasilength = " << *ql << "\n";
                std::cout << "class = " << cls.to_string() << "\n";
            }
            return kOk;
        }
    } catch (const OutOfMemoryBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

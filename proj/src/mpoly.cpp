#include "hwlen/mpoly.hpp"

#include <cassert>
#include <cctype>

#include "hwlen/errors.hpp"
#include "hwlen/kernels.hpp"
#include "hwlen/modarith.hpp"

namespace hwlen {

int MultiPolyZ::degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

bool MultiPolyZ::is_homogeneous() const {
    if (terms.empty()) return true;
    uint32_t d = total_degree(terms.begin()->first);
    for (auto& [e, c] : terms)
        if (total_degree(e) != d) return false;
    return true;
}

int MultiPolyP::degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

bool MultiPolyP::is_homogeneous() const {
    if (terms.empty()) return true;
    uint32_t d = total_degree(terms.begin()->first);
    for (auto& [e, c] : terms)
        if (total_degree(e) != d) return false;
    return true;
}

uint64_t MultiPolyP::coeff(const Exps& a) const {
    auto it = terms.find(a);
    return it == terms.end() ? 0 : it->second;
}

MultiPolyP MultiPolyP::derivative(unsigned var) const {
    assert(var < nvars);
    MultiPolyP out;
    out.p = p;
    out.nvars = nvars;
    for (auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        uint64_t nc = mulmod(c, e[var] % p, p);
        if (nc == 0) continue;
        Exps ne = e;
        --ne[var];
        out.terms.emplace(std::move(ne), nc);
    }
    return out;
}

// ---- parser ----

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError(start, "expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    // returns variable index or -1 when the next token is not an identifier
    int parse_variable() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            return -1;
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw UnknownVariableError(name);
    }

    // coefficient? ('*'? factor)*
    std::pair<Exps, mpz_class> parse_term() {
        Exps e(vars.size(), 0);
        mpz_class coef = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_integer();
            any = true;
        }
        while (true) {
            skip_ws();
            size_t save = pos;
            if (peek() == '*') {
                ++pos;
                skip_ws();
            }
            int v = parse_variable();
            if (v < 0) {
                pos = save;
                break;
            }
            uint32_t k = 1;
            if (peek() == '^') {
                ++pos;
                mpz_class kk = parse_integer();
                if (kk <= 0 || kk > 1000000) throw SyntaxError(pos, "bad exponent");
                k = static_cast<uint32_t>(kk.get_ui());
            }
            e[static_cast<size_t>(v)] += k;
            any = true;
        }
        if (!any) throw SyntaxError(pos, "expected term");
        return {std::move(e), std::move(coef)};
    }

    MultiPolyZ parse() {
        MultiPolyZ out;
        out.nvars = static_cast<unsigned>(vars.size());
        int sign = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos;
        }
        while (true) {
            auto [e, c] = parse_term();
            c *= sign;
            auto it = out.terms.find(e);
            if (it == out.terms.end())
                out.terms.emplace(std::move(e), std::move(c));
            else {
                it->second += c;
                if (it->second == 0) out.terms.erase(it);
            }
            if (eof()) break;
            char op = peek();
            if (op != '+' && op != '-') throw SyntaxError(pos, "expected '+' or '-'");
            sign = op == '-' ? -1 : 1;
            ++pos;
            if (eof()) throw SyntaxError(pos, "trailing operator");
        }
        return out;
    }
};

}  // namespace

MultiPolyZ parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    Parser parser{text, variables};
    return parser.parse();
}

std::string poly_to_string(const MultiPolyZ& g, const std::vector<std::string>& variables) {
    if (g.terms.empty()) return "0";
    std::string out;
    for (auto& [e, c] : g.terms) {
        mpz_class a = c;
        if (!out.empty()) {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else if (a == -1)
            out += "-" + mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

ReduceResult reduce_mod(const MultiPolyZ& g, const FieldCtx& field) {
    assert(field.e() == 1);
    uint64_t p = field.p();
    ReduceResult r;
    r.poly.p = p;
    r.poly.nvars = g.nvars;
    for (auto& [e, c] : g.terms) {
        uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), p);
        if (v) r.poly.terms.emplace(e, v);
    }
    if (r.poly.terms.empty()) throw VanishesModPError();
    r.degree_dropped = r.poly.degree() < g.degree();
    r.support_dropped = r.poly.terms.size() < g.terms.size();
    return r;
}

MultiPolyP mpoly_add(const MultiPolyP& f, const MultiPolyP& g) {
    assert(f.p == g.p && f.nvars == g.nvars);
    MultiPolyP out = f;
    for (auto& [e, c] : g.terms) {
        auto [it, inserted] = out.terms.emplace(e, c);
        if (!inserted) {
            it->second = addmod(it->second, c, f.p);
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

MultiPolyP mpoly_mul_sparse(const MultiPolyP& f, const MultiPolyP& g) {
    assert(f.p == g.p && f.nvars == g.nvars);
    MultiPolyP out;
    out.p = f.p;
    out.nvars = f.nvars;
    for (auto& [ea, ca] : f.terms)
        for (auto& [eb, cb] : g.terms) {
            Exps e(f.nvars);
            for (unsigned i = 0; i < f.nvars; ++i) e[i] = ea[i] + eb[i];
            uint64_t c = mulmod(ca, cb, f.p);
            auto [it, inserted] = out.terms.emplace(std::move(e), c);
            if (!inserted) {
                it->second = addmod(it->second, c, f.p);
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

MultiPolyP mpoly_pow(const MultiPolyP& g, unsigned k, uint64_t coeff_budget) {
    assert(g.is_homogeneous());
    if (k == 0) {
        MultiPolyP one;
        one.p = g.p;
        one.nvars = g.nvars;
        one.terms.emplace(Exps(g.nvars, 0), 1 % g.p);
        return one;
    }
    if (g.is_zero()) return g;
    return sparse_from_dense(pow_homog(dense_from_sparse(g), k, MulKernel::Auto, coeff_budget));
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        assert(r <= ~uint64_t(0));
    }
    return static_cast<uint64_t>(r);
}

uint64_t simplex_size(unsigned nvars, uint32_t d) { return binomial(d + nvars - 1, nvars - 1); }

uint64_t simplex_rank(const Exps& a) {
    const unsigned m = static_cast<unsigned>(a.size());
    uint64_t r = 0;
    uint32_t rem = total_degree(a);
    for (unsigned j = m - 1; j >= 1; --j) {
        for (uint32_t t = 0; t < a[j]; ++t) r += binomial(rem - t + j - 1, j - 1);
        rem -= a[j];
    }
    return r;
}

Exps simplex_unrank(uint64_t rank, unsigned nvars, uint32_t d) {
    Exps a(nvars, 0);
    uint32_t rem = d;
    for (unsigned j = nvars - 1; j >= 1; --j) {
        uint32_t t = 0;
        while (true) {
            uint64_t cnt = binomial(rem - t + j - 1, j - 1);
            if (rank < cnt) break;
            rank -= cnt;
            ++t;
        }
        a[j] = t;
        rem -= t;
    }
    a[0] = rem;
    assert(rank == 0);
    return a;
}

}  // namespace hwlen

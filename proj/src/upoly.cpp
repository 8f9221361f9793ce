#include "hwlen/upoly.hpp"

#include <cassert>

#include "hwlen/errors.hpp"
#include "hwlen/modarith.hpp"

namespace hwlen {

static void strip(std::vector<uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::make(uint64_t p, std::vector<uint64_t> coeffs) {
    for (auto& v : coeffs) v %= p;
    strip(coeffs);
    return {p, std::move(coeffs)};
}

UniPoly upoly_add(const UniPoly& f, const UniPoly& g) {
    assert(f.p == g.p);
    std::vector<uint64_t> c(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t a = i < f.c.size() ? f.c[i] : 0;
        uint64_t b = i < g.c.size() ? g.c[i] : 0;
        c[i] = addmod(a, b, f.p);
    }
    strip(c);
    return {f.p, std::move(c)};
}

UniPoly upoly_sub(const UniPoly& f, const UniPoly& g) {
    assert(f.p == g.p);
    std::vector<uint64_t> c(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint64_t a = i < f.c.size() ? f.c[i] : 0;
        uint64_t b = i < g.c.size() ? g.c[i] : 0;
        c[i] = submod(a, b, f.p);
    }
    strip(c);
    return {f.p, std::move(c)};
}

UniPoly upoly_mul(const UniPoly& f, const UniPoly& g) {
    assert(f.p == g.p);
    if (f.is_zero() || g.is_zero()) return UniPoly::zero(f.p);
    std::vector<uint64_t> c(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            c[i + j] = addmod(c[i + j], mulmod(f.c[i], g.c[j], f.p), f.p);
    }
    strip(c);
    return {f.p, std::move(c)};
}

UniPoly upoly_scale(const UniPoly& f, uint64_t s) {
    s %= f.p;
    if (s == 0) return UniPoly::zero(f.p);
    std::vector<uint64_t> c(f.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mulmod(f.c[i], s, f.p);
    return {f.p, std::move(c)};
}

std::pair<UniPoly, UniPoly> upoly_divrem(const UniPoly& f, const UniPoly& g) {
    assert(f.p == g.p);
    if (g.is_zero()) throw DivisionByZeroError();
    if (f.degree() < g.degree()) return {UniPoly::zero(f.p), f};
    uint64_t p = f.p;
    uint64_t linv = invmod(g.leading(), p);
    std::vector<uint64_t> r = f.c;
    std::vector<uint64_t> q(f.c.size() - g.c.size() + 1, 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= g.degree(); --i) {
        if (r[i] == 0) continue;
        uint64_t coef = mulmod(r[i], linv, p);
        q[i - g.degree()] = coef;
        for (size_t j = 0; j < g.c.size(); ++j) {
            size_t k = i - g.degree() + j;
            r[k] = submod(r[k], mulmod(coef, g.c[j], p), p);
        }
    }
    strip(q);
    strip(r);
    return {{p, std::move(q)}, {p, std::move(r)}};
}

UniPoly upoly_monic(const UniPoly& f) {
    if (f.is_zero() || f.leading() == 1) return f;
    return upoly_scale(f, invmod(f.leading(), f.p));
}

UniPoly upoly_gcd(UniPoly f, UniPoly g) {
    while (!g.is_zero()) {
        UniPoly r = upoly_divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return upoly_monic(f);
}

UniPoly upoly_derivative(const UniPoly& f) {
    if (f.c.size() <= 1) return UniPoly::zero(f.p);
    std::vector<uint64_t> c(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
    strip(c);
    return {f.p, std::move(c)};
}

UniPoly upoly_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& g) {
    return upoly_divrem(upoly_mul(a, b), g).second;
}

UniPoly upoly_powmod(UniPoly base, uint64_t n, const UniPoly& g) {
    UniPoly r = UniPoly::constant(g.p, 1);
    base = upoly_divrem(base, g).second;
    while (n) {
        if (n & 1) r = upoly_mulmod(r, base, g);
        base = upoly_mulmod(base, base, g);
        n >>= 1;
    }
    return r;
}

UniPoly upoly_xpow_mod(uint64_t n, const UniPoly& g) {
    return upoly_powmod(UniPoly::x(g.p), n, g);
}

// p-th root of f when f = h(x^p): over F_p coefficients are fixed by the
// Frobenius, so the root just takes every p-th coefficient.
static UniPoly pth_root(const UniPoly& f) {
    std::vector<uint64_t> c;
    for (size_t i = 0; i < f.c.size(); i += f.p) c.push_back(f.c[i]);
    return {f.p, std::move(c)};
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    assert(!f.is_zero());
    std::vector<std::pair<UniPoly, unsigned>> out;
    // Yun's algorithm adapted to characteristic p; factors whose
    // multiplicity is divisible by p survive into the p-th root recursion.
    auto rec = [&](auto&& self, UniPoly g, unsigned outer_mult) -> void {
        g = upoly_monic(g);
        if (g.degree() <= 0) return;
        UniPoly d = upoly_derivative(g);
        if (d.is_zero()) {
            self(self, pth_root(g), outer_mult * static_cast<unsigned>(g.p));
            return;
        }
        UniPoly c = upoly_gcd(g, d);
        UniPoly w = upoly_divrem(g, c).first;  // product of factors with mult not div by p
        unsigned i = 1;
        while (w.degree() > 0) {
            UniPoly y = upoly_gcd(w, c);
            UniPoly part = upoly_divrem(w, y).first;
            if (part.degree() > 0) out.emplace_back(upoly_monic(part), i * outer_mult);
            c = upoly_divrem(c, y).first;
            w = std::move(y);
            ++i;
        }
        if (c.degree() > 0) self(self, pth_root(c), outer_mult * static_cast<unsigned>(g.p));
    };
    rec(rec, f, 1);
    return out;
}

// Distinct-degree factor count of a squarefree monic f: the degree-d part
// has D/d irreducible factors.
static unsigned count_squarefree(UniPoly f) {
    unsigned count = 0;
    UniPoly h = UniPoly::x(f.p);  // x^(p^d) mod f, updated incrementally
    unsigned d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(f.degree())) {
            // remainder is a single irreducible factor
            ++count;
            break;
        }
        h = upoly_powmod(h, f.p, f);
        UniPoly g = upoly_gcd(upoly_sub(h, UniPoly::x(f.p)), f);
        if (g.degree() > 0) {
            count += static_cast<unsigned>(g.degree()) / d;
            f = upoly_divrem(f, g).first;
            h = upoly_divrem(h, f).second;
        }
    }
    return count;
}

unsigned count_irreducible_factors(const UniPoly& f) {
    assert(!f.is_zero() && f.degree() > 0);
    unsigned total = 0;
    for (auto& [part, mult] : squarefree_decomposition(f))
        total += mult * count_squarefree(part);
    return total;
}

bool upoly_is_irreducible(const UniPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    return count_irreducible_factors(f) == 1;
}

}  // namespace hwlen

#include "hwlen/field.hpp"

#include <cassert>
#include <sstream>

#include "hwlen/errors.hpp"
#include "hwlen/modarith.hpp"
#include "hwlen/upoly.hpp"

namespace hwlen {

FieldCtx FieldCtx::make(uint64_t p, unsigned e, std::optional<std::vector<uint64_t>> mod_poly) {
    if (p <= 2 || p >= (1ull << 62) || !is_prime_u64(p)) throw NotPrimeError(p);
    if (e < 1) throw DegreeMismatchError();
    if (e == 1) return FieldCtx(p, 1, {});
    if (!mod_poly) throw DegreeMismatchError();
    UniPoly f = UniPoly::make(p, *mod_poly);
    if (f.degree() != static_cast<int>(e) || f.leading() != 1) throw DegreeMismatchError();
    if (!upoly_is_irreducible(f)) throw ReducibleModulusError();
    return FieldCtx(p, e, std::move(f.c));
}

FieldElement FieldCtx::one() const {
    FieldElement r = zero();
    r.c[0] = 1;
    return r;
}

FieldElement FieldCtx::from_int(uint64_t v) const {
    FieldElement r = zero();
    r.c[0] = v % p_;
    return r;
}

FieldElement FieldCtx::from_coeffs(std::vector<uint64_t> cs) const {
    cs.resize(e_, 0);
    for (auto& v : cs) v %= p_;
    return {std::move(cs)};
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = addmod(a.c[i], b.c[i], p_);
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = submod(a.c[i], b.c[i], p_);
    return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < e_; ++i) r.c[i] = negmod(a.c[i], p_);
    return r;
}

// Reduce a coefficient vector of length up to 2e-1 modulo mod_poly.
std::vector<uint64_t> FieldCtx::reduce_poly(std::vector<uint64_t> v) const {
    for (int i = static_cast<int>(v.size()) - 1; i >= static_cast<int>(e_); --i) {
        uint64_t t = v[i];
        if (t == 0) continue;
        v[i] = 0;
        for (unsigned j = 0; j < e_; ++j)
            v[i - e_ + j] = submod(v[i - e_ + j], mulmod(t, mod_poly_[j], p_), p_);
    }
    v.resize(e_, 0);
    return v;
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    if (e_ == 1) return {{mulmod(a.c[0], b.c[0], p_)}};
    std::vector<uint64_t> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = addmod(prod[i + j], mulmod(a.c[i], b.c[j], p_), p_);
    }
    return {reduce_poly(std::move(prod))};
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    if (a.is_zero()) throw DivisionByZeroError();
    if (e_ == 1) return {{invmod(a.c[0], p_)}};
    // Extended Euclid in F_p[t] against the modulus.
    UniPoly f = UniPoly::make(p_, mod_poly_);
    UniPoly g = UniPoly::make(p_, a.c);
    UniPoly s0 = UniPoly::zero(p_), s1 = UniPoly::constant(p_, 1);
    while (g.degree() > 0) {
        auto [q, r] = upoly_divrem(f, g);
        UniPoly s2 = upoly_sub(s0, upoly_mul(q, s1));
        f = std::move(g);
        g = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(!g.is_zero());
    UniPoly res = upoly_scale(s1, invmod(g.c[0], p_));
    return from_coeffs(std::move(res.c));
}

FieldElement FieldCtx::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldCtx::pow(const FieldElement& a, uint64_t n) const {
    FieldElement r = one();
    FieldElement base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FieldElement FieldCtx::frobenius(const FieldElement& a, uint64_t r) const {
    if (e_ == 1) return a;
    FieldElement v = a;
    for (uint64_t i = 0; i < r % e_; ++i) v = pow(v, p_);
    return v;
}

std::string FieldCtx::to_string(const FieldElement& a) const {
    if (e_ == 1) return std::to_string(a.c[0]);
    std::ostringstream os;
    for (unsigned i = 0; i < e_; ++i) {
        if (i) os << ",";
        os << a.c[i];
    }
    return os.str();
}

}  // namespace hwlen

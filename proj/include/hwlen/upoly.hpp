#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Univariate polynomials over a prime field F_p. Coefficients low to high,
// trailing zeros stripped; the zero polynomial has an empty coefficient
// vector.

namespace hwlen {

struct UniPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    uint64_t leading() const { return c.empty() ? 0 : c.back(); }
    bool operator==(const UniPoly&) const = default;

    static UniPoly make(uint64_t p, std::vector<uint64_t> coeffs);
    static UniPoly zero(uint64_t p) { return {p, {}}; }
    static UniPoly constant(uint64_t p, uint64_t v) { return make(p, {v}); }
    static UniPoly x(uint64_t p) { return make(p, {0, 1}); }
};

UniPoly upoly_add(const UniPoly& f, const UniPoly& g);
UniPoly upoly_sub(const UniPoly& f, const UniPoly& g);
UniPoly upoly_mul(const UniPoly& f, const UniPoly& g);
UniPoly upoly_scale(const UniPoly& f, uint64_t s);
// Quotient and remainder; throws DivisionByZeroError when g = 0.
std::pair<UniPoly, UniPoly> upoly_divrem(const UniPoly& f, const UniPoly& g);
// Monic gcd; gcd(0, 0) = 0.
UniPoly upoly_gcd(UniPoly f, UniPoly g);
UniPoly upoly_derivative(const UniPoly& f);
UniPoly upoly_monic(const UniPoly& f);
// x^n mod g by repeated squaring.
UniPoly upoly_xpow_mod(uint64_t n, const UniPoly& g);
UniPoly upoly_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& g);
// f^(p^k)-style powering of an arbitrary base mod g.
UniPoly upoly_powmod(UniPoly base, uint64_t n, const UniPoly& g);

// Squarefree decomposition f = prod parts[i].first ^ parts[i].second up to
// the leading scalar; parts squarefree, pairwise coprime, multiplicities
// increasing. Handles f' = 0 via the p-th root recursion.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

// Number of irreducible factors counted with multiplicity, by squarefree
// decomposition followed by distinct-degree factorization. No equal-degree
// splitting is needed for counting, so the result is deterministic.
unsigned count_irreducible_factors(const UniPoly& f);

bool upoly_is_irreducible(const UniPoly& f);

}  // namespace hwlen

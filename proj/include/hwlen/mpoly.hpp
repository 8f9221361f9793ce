#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hwlen/field.hpp"

// Multivariate homogeneous polynomials over Z and over F_p.

namespace hwlen {

// Exponent vector, one entry per variable (n+1 entries in P^n).
using Exps = std::vector<uint32_t>;

inline uint32_t total_degree(const Exps& a) {
    uint32_t s = 0;
    for (uint32_t x : a) s += x;
    return s;
}

struct MultiPolyZ {
    unsigned nvars = 0;
    std::map<Exps, mpz_class> terms;  // no zero coefficients stored

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    bool is_homogeneous() const;
    bool operator==(const MultiPolyZ&) const = default;
};

// Integer-coefficient polynomial from text. Grammar: terms joined by +/-,
// each term an optional integer coefficient and factors var or var^k, with
// '*' optional between factors. Throws SyntaxError / UnknownVariableError.
MultiPolyZ parse_poly(const std::string& text, const std::vector<std::string>& variables);

std::string poly_to_string(const MultiPolyZ& g, const std::vector<std::string>& variables);

struct MultiPolyP {
    uint64_t p = 0;
    unsigned nvars = 0;
    std::map<Exps, uint64_t> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    bool is_homogeneous() const;
    uint64_t coeff(const Exps& a) const;
    MultiPolyP derivative(unsigned var) const;
    bool operator==(const MultiPolyP&) const = default;
};

struct ReduceResult {
    MultiPolyP poly;
    bool degree_dropped = false;   // total degree fell
    bool support_dropped = false;  // some term vanished mod p
};

// Reduce coefficients mod p (prime field context only); throws
// VanishesModPError when everything cancels.
ReduceResult reduce_mod(const MultiPolyZ& g, const FieldCtx& field);

MultiPolyP mpoly_add(const MultiPolyP& f, const MultiPolyP& g);
// Sparse schoolbook product; the always-available reference path.
MultiPolyP mpoly_mul_sparse(const MultiPolyP& f, const MultiPolyP& g);

// Default cap on dense coefficient storage for pow.
inline constexpr uint64_t kDefaultCoeffBudget = uint64_t(1) << 31;

// g^k for homogeneous g, via binary exponentiation over a dense
// dehomogenized representation (see kernels.hpp). Throws
// OutOfMemoryBudgetError when the predicted dense size exceeds the budget.
MultiPolyP mpoly_pow(const MultiPolyP& g, unsigned k, uint64_t coeff_budget = kDefaultCoeffBudget);

// Colexicographic rank of a degree-d exponent vector among all vectors of
// the same length and total degree; inverse below. Used for canonical
// ordering of cohomology bases and dense simplex layouts.
uint64_t simplex_rank(const Exps& a);
Exps simplex_unrank(uint64_t rank, unsigned nvars, uint32_t d);
uint64_t simplex_size(unsigned nvars, uint32_t d);  // binomial(d + nvars - 1, nvars - 1)

uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace hwlen

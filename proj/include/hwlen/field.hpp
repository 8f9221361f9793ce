#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Prime fields F_p and extensions F_{p^e} = F_p[t]/(mod_poly), with the
// Frobenius endomorphism a -> a^p.

namespace hwlen {

// Element of F_{p^e}: e residues, lowest degree first, each in [0, p).
struct FieldElement {
    std::vector<uint64_t> c;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const {
        for (uint64_t x : c)
            if (x) return false;
        return true;
    }
};

class FieldCtx {
public:
    // Validates p prime (odd, < 2^62) and mod_poly monic irreducible of
    // degree e when e > 1. Throws NotPrimeError / DegreeMismatchError /
    // ReducibleModulusError.
    static FieldCtx make(uint64_t p, unsigned e = 1,
                         std::optional<std::vector<uint64_t>> mod_poly = std::nullopt);

    uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    // Coefficients of the modulus, low to high, size e+1; empty when e = 1.
    const std::vector<uint64_t>& mod_poly() const { return mod_poly_; }

    FieldElement zero() const { return {std::vector<uint64_t>(e_, 0)}; }
    FieldElement one() const;
    // Embeds an integer residue into the prime subfield.
    FieldElement from_int(uint64_t v) const;
    // Element with coefficient vector (low to high), reduced mod p.
    FieldElement from_coeffs(std::vector<uint64_t> cs) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws DivisionByZeroError
    FieldElement div(const FieldElement& a, const FieldElement& b) const;

    // a^(p^r). Identity for e = 1; a field automorphism of order e.
    FieldElement frobenius(const FieldElement& a, uint64_t r) const;
    FieldElement pow(const FieldElement& a, uint64_t n) const;

    std::string to_string(const FieldElement& a) const;

    bool operator==(const FieldCtx& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_poly_ == o.mod_poly_;
    }

private:
    FieldCtx(uint64_t p, unsigned e, std::vector<uint64_t> mod_poly)
        : p_(p), e_(e), mod_poly_(std::move(mod_poly)) {}

    std::vector<uint64_t> reduce_poly(std::vector<uint64_t> v) const;

    uint64_t p_;
    unsigned e_;
    std::vector<uint64_t> mod_poly_;
};

}  // namespace hwlen

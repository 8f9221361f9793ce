#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hwlen/mpoly.hpp"
#include "hwlen/semilinear.hpp"

// Hypersurface-level computations: the monomial basis of H^{n-1}(Y, O_Y),
// the Hasse-Witt matrix of Frobenius on it, and good-reduction checks.

namespace hwlen {

struct HypersurfaceP {
    FieldCtx field;   // prime field, e = 1
    unsigned n = 0;   // ambient projective dimension, >= 2
    uint32_t d = 0;   // degree of the defining polynomial
    MultiPolyP g;     // homogeneous of degree d in n+1 variables
};

// Exponent vectors with every entry >= 1 summing to d, in colex order;
// empty when d <= n. Cardinality binomial(d-1, n).
struct CohomologyBasis {
    std::vector<Exps> monomials;

    size_t size() const { return monomials.size(); }
};

CohomologyBasis cohomology_basis(unsigned n, uint32_t d);

struct HasseWittData {
    CohomologyBasis basis;
    SemilinearOperator op;
};

// Frobenius matrix on H^{n-1}(Y, O_Y): entry (row b, column a) is the
// coefficient of x^(p*a - b) in g^(p-1), zero when p*a - b has a negative
// component.
HasseWittData hasse_witt_matrix(const HypersurfaceP& H,
                                uint64_t coeff_budget = kDefaultCoeffBudget);

// Single-coefficient path for d = n+1: the coefficient of
// (x_0...x_n)^(p-1) in g^(p-1) by truncated sparse powering, without the
// full dense expansion. Cross-checks the 1x1 Hasse-Witt matrix and is the
// fast route for elliptic curves at large p.
uint64_t hasse_invariant_truncated(const HypersurfaceP& H);

enum class Smoothness { Smooth, Singular, Inconclusive };

// Smooth iff the projective zero locus of (g, dg/dx_0, ..., dg/dx_n) is
// empty, decided by a degrevlex Groebner basis: for every variable some
// leading monomial must be a pure power of it. A step cap turns runaway
// computations into Inconclusive.
Smoothness smoothness_check(const HypersurfaceP& H, uint64_t step_cap = 1000000);

// Projective points over F_{p^e}, e <= max_ext, where g and all partials
// vanish. Test oracle; throws WorkCapExceededError when the enumeration is
// too large. Points are coordinate vectors over the reported extension.
struct ProjPoint {
    unsigned ext_degree;
    std::vector<FieldElement> coords;  // last nonzero coordinate normalized to 1
};
std::vector<ProjPoint> singular_points_bruteforce(const HypersurfaceP& H, unsigned max_ext,
                                                  uint64_t work_cap = 100000000);

enum class BadReason { VanishesModP, DegreeDrop, SingularFibre, Inconclusive };

struct GoodReduction {
    std::optional<HypersurfaceP> hypersurface;  // engaged iff valid
    std::optional<BadReason> bad;

    bool valid() const { return hypersurface.has_value(); }
};

// Valid iff g keeps its degree mod p and the fibre is smooth; the
// computable surrogate for p being a good closed point. Degree is checked
// before smoothness.
GoodReduction good_reduction_check(const MultiPolyZ& g, uint64_t p);

const char* bad_reason_name(BadReason r);

}  // namespace hwlen

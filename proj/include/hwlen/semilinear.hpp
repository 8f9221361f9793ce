#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hwlen/field.hpp"
#include "hwlen/upoly.hpp"

// p-semilinear endomorphisms of finite-dimensional F_q-spaces. An operator
// acts on coordinates by F(v) = A * v^sigma with sigma the entrywise
// Frobenius; over a prime field sigma is the identity and F is linear.

namespace hwlen {

struct FMatrix {
    size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;  // row-major

    static FMatrix zero(const FieldCtx& F, size_t r, size_t c);
    static FMatrix identity(const FieldCtx& F, size_t n);
    FieldElement& at(size_t r, size_t c) { return a[r * cols + c]; }
    const FieldElement& at(size_t r, size_t c) const { return a[r * cols + c]; }
    bool operator==(const FMatrix&) const = default;
};

FMatrix mat_mul(const FieldCtx& F, const FMatrix& A, const FMatrix& B);
FMatrix mat_frobenius(const FieldCtx& F, const FMatrix& A, uint64_t r);
std::vector<FieldElement> mat_apply(const FieldCtx& F, const FMatrix& A,
                                    const std::vector<FieldElement>& v);
size_t mat_rank(const FieldCtx& F, FMatrix A);

struct SemilinearOperator {
    FieldCtx field;
    size_t dim = 0;
    FMatrix A;  // dim x dim

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
};

// Basis rows in reduced row echelon form, so subspace equality is
// representation equality.
struct Subspace {
    std::vector<std::vector<FieldElement>> basis;

    size_t dim() const { return basis.size(); }
    bool operator==(const Subspace&) const = default;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(const FieldCtx& F, std::vector<std::vector<FieldElement>>& rows);

Subspace span_of(const FieldCtx& F, std::vector<std::vector<FieldElement>> vectors);
bool subspace_contains(const FieldCtx& F, const Subspace& S, std::vector<FieldElement> v);
Subspace subspace_intersection(const FieldCtx& F, const Subspace& A, const Subspace& B);

// A_r with F^r(v) = A_r * v^(sigma^r); A_0 = identity.
FMatrix iterate_matrix(const SemilinearOperator& T, uint64_t r);

// M* = intersection of the images of all Frobenius iterates; the column
// space of A_dim, on which F restricts to a bijection.
Subspace stable_part(const SemilinearOperator& T);

// M_nil = vectors killed by F^dim: the sigma^(-dim) twist of ker(A_dim).
Subspace nilpotent_part(const SemilinearOperator& T);

// rank of A_dim; the dimension of the stable part over any extension.
size_t stable_rank(const SemilinearOperator& T);

// Number of irreducible factors (with multiplicity) of the characteristic
// polynomial of F on the stable part; 0 when the stable part vanishes.
// Prime fields only; throws UnsupportedExtensionDegreeError when e > 1.
size_t quasilength(const SemilinearOperator& T);

enum class FClass { Ordinary, Nilpotent, Intermediate };

struct Classification {
    FClass kind;
    size_t stable_rank = 0;

    bool operator==(const Classification&) const = default;
    std::string to_string() const;
};

// Ordinary iff F is bijective (stable rank = dim, vacuously so for dim 0),
// Nilpotent iff the stable part vanishes, Intermediate otherwise.
Classification classify(const SemilinearOperator& T);

// Monic characteristic polynomial of a square matrix over F_p (e = 1),
// by the division-free Berkowitz recurrence.
UniPoly char_poly(const FieldCtx& F, const FMatrix& M);

}  // namespace hwlen

#include "hwlen/semilinear.hpp"

#include <cassert>

#include "hwlen/errors.hpp"
#include "hwlen/modarith.hpp"

namespace hwlen {

FMatrix FMatrix::zero(const FieldCtx& F, size_t r, size_t c) {
    return {r, c, std::vector<FieldElement>(r * c, F.zero())};
}

FMatrix FMatrix::identity(const FieldCtx& F, size_t n) {
    FMatrix m = zero(F, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

FMatrix mat_mul(const FieldCtx& F, const FMatrix& A, const FMatrix& B) {
    assert(A.cols == B.rows);
    FMatrix C = FMatrix::zero(F, A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

FMatrix mat_frobenius(const FieldCtx& F, const FMatrix& A, uint64_t r) {
    FMatrix B = A;
    for (auto& x : B.a) x = F.frobenius(x, r);
    return B;
}

std::vector<FieldElement> mat_apply(const FieldCtx& F, const FMatrix& A,
                                    const std::vector<FieldElement>& v) {
    assert(A.cols == v.size());
    std::vector<FieldElement> out(A.rows, F.zero());
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j)
            out[i] = F.add(out[i], F.mul(A.at(i, j), v[j]));
    return out;
}

std::vector<size_t> rref(const FieldCtx& F, std::vector<std::vector<FieldElement>>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        FieldElement inv = F.inv(rows[r][c]);
        for (size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FieldElement f = rows[i][c];
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

size_t mat_rank(const FieldCtx& F, FMatrix A) {
    std::vector<std::vector<FieldElement>> rows(A.rows);
    for (size_t i = 0; i < A.rows; ++i)
        rows[i] = {A.a.begin() + i * A.cols, A.a.begin() + (i + 1) * A.cols};
    return rref(F, rows).size();
}

Subspace span_of(const FieldCtx& F, std::vector<std::vector<FieldElement>> vectors) {
    rref(F, vectors);
    return {std::move(vectors)};
}

bool subspace_contains(const FieldCtx& F, const Subspace& S, std::vector<FieldElement> v) {
    if (S.basis.empty()) {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    auto rows = S.basis;
    rows.push_back(std::move(v));
    return rref(F, rows).size() == S.basis.size();
}

Subspace subspace_intersection(const FieldCtx& F, const Subspace& A, const Subspace& B) {
    if (A.basis.empty() || B.basis.empty()) return {};
    const size_t n = A.basis[0].size();
    // Zassenhaus: row reduce [a|a] over A and [b|0] over B; rows with zero
    // left half carry the intersection on the right.
    std::vector<std::vector<FieldElement>> rows;
    for (auto& a : A.basis) {
        std::vector<FieldElement> r = a;
        r.insert(r.end(), a.begin(), a.end());
        rows.push_back(std::move(r));
    }
    for (auto& b : B.basis) {
        std::vector<FieldElement> r = b;
        r.insert(r.end(), n, F.zero());
        rows.push_back(std::move(r));
    }
    rref(F, rows);
    std::vector<std::vector<FieldElement>> inter;
    for (auto& r : rows) {
        bool left_zero = true;
        for (size_t j = 0; j < n; ++j)
            if (!r[j].is_zero()) {
                left_zero = false;
                break;
            }
        if (!left_zero) continue;
        std::vector<FieldElement> v(r.begin() + n, r.end());
        bool nz = false;
        for (auto& x : v)
            if (!x.is_zero()) nz = true;
        if (nz) inter.push_back(std::move(v));
    }
    return span_of(F, std::move(inter));
}

std::vector<FieldElement> SemilinearOperator::apply(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> tw(v.size());
    for (size_t i = 0; i < v.size(); ++i) tw[i] = field.frobenius(v[i], 1);
    return mat_apply(field, A, tw);
}

FMatrix iterate_matrix(const SemilinearOperator& T, uint64_t r) {
    // A_{i+1} = A * (A_i)^sigma
    FMatrix R = FMatrix::identity(T.field, T.dim);
    for (uint64_t i = 0; i < r; ++i) R = mat_mul(T.field, T.A, mat_frobenius(T.field, R, 1));
    return R;
}

Subspace stable_part(const SemilinearOperator& T) {
    FMatrix Ad = iterate_matrix(T, T.dim);
    std::vector<std::vector<FieldElement>> cols(T.dim);
    for (size_t j = 0; j < T.dim; ++j) {
        cols[j].resize(T.dim);
        for (size_t i = 0; i < T.dim; ++i) cols[j][i] = Ad.at(i, j);
    }
    return span_of(T.field, std::move(cols));
}

// Kernel of a square matrix as reduced echelon rows.
static std::vector<std::vector<FieldElement>> kernel_of(const FieldCtx& F, const FMatrix& M) {
    std::vector<std::vector<FieldElement>> rows(M.rows);
    for (size_t i = 0; i < M.rows; ++i)
        rows[i] = {M.a.begin() + i * M.cols, M.a.begin() + (i + 1) * M.cols};
    std::vector<size_t> pivots = rref(F, rows);
    std::vector<bool> is_pivot(M.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> ker;
    for (size_t c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<FieldElement> v(M.cols, F.zero());
        v[c] = F.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(rows[i][c]);
        ker.push_back(std::move(v));
    }
    return ker;
}

Subspace nilpotent_part(const SemilinearOperator& T) {
    const FieldCtx& F = T.field;
    FMatrix Ad = iterate_matrix(T, T.dim);
    auto ker = kernel_of(F, Ad);
    // F^dim(v) = A_dim * v^(sigma^dim), so v is nilpotent iff v^(sigma^dim)
    // lies in ker(A_dim); untwist by sigma^(-dim).
    uint64_t back = F.e() == 1 ? 0 : (F.e() - T.dim % F.e()) % F.e();
    for (auto& v : ker)
        for (auto& x : v) x = F.frobenius(x, back);
    return span_of(F, std::move(ker));
}

size_t stable_rank(const SemilinearOperator& T) {
    return mat_rank(T.field, iterate_matrix(T, T.dim));
}

size_t quasilength(const SemilinearOperator& T) {
    const FieldCtx& F = T.field;
    if (F.e() != 1) throw UnsupportedExtensionDegreeError();
    Subspace S = stable_part(T);
    const size_t s = S.dim();
    if (s == 0) return 0;
    // Coordinates in a reduced echelon basis are just the pivot entries.
    std::vector<std::vector<FieldElement>> rows = S.basis;
    std::vector<size_t> pivots = rref(F, rows);  // already reduced; recover pivots
    FMatrix M = FMatrix::zero(F, s, s);
    for (size_t j = 0; j < s; ++j) {
        std::vector<FieldElement> img = mat_apply(F, T.A, S.basis[j]);
        for (size_t i = 0; i < s; ++i) M.at(i, j) = img[pivots[i]];
        // F must map the stable part into itself
        assert(subspace_contains(F, S, img));
    }
    UniPoly chi = char_poly(F, M);
    return count_irreducible_factors(chi);
}

std::string Classification::to_string() const {
    switch (kind) {
        case FClass::Ordinary:
            return "Ordinary";
        case FClass::Nilpotent:
            return "Nilpotent";
        default:
            return "Intermediate(" + std::to_string(stable_rank) + ")";
    }
}

Classification classify(const SemilinearOperator& T) {
    size_t s = stable_rank(T);
    if (s == T.dim) return {FClass::Ordinary, s};
    if (s == 0) return {FClass::Nilpotent, 0};
    return {FClass::Intermediate, s};
}

UniPoly char_poly(const FieldCtx& F, const FMatrix& M) {
    assert(F.e() == 1 && M.rows == M.cols);
    const uint64_t p = F.p();
    const size_t n = M.rows;
    auto entry = [&](size_t i, size_t j) { return M.at(i, j).c[0]; };
    // Berkowitz: coefficients highest degree first.
    std::vector<uint64_t> poly = {1};
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint64_t> c(i + 2, 0);
        c[0] = 1;
        c[1] = negmod(entry(i, i), p);
        if (i > 0) {
            // c[k] = -(R * Msub^(k-2) * C) with R the row, C the column
            // bordering the leading i x i principal submatrix
            std::vector<uint64_t> v(i);
            for (size_t j = 0; j < i; ++j) v[j] = entry(j, i);
            for (size_t k = 2; k <= i + 1; ++k) {
                if (k > 2) {
                    std::vector<uint64_t> nv(i, 0);
                    for (size_t r = 0; r < i; ++r)
                        for (size_t s2 = 0; s2 < i; ++s2)
                            nv[r] = addmod(nv[r], mulmod(entry(r, s2), v[s2], p), p);
                    v = std::move(nv);
                }
                uint64_t dot = 0;
                for (size_t j = 0; j < i; ++j)
                    dot = addmod(dot, mulmod(entry(i, j), v[j], p), p);
                c[k] = negmod(dot, p);
            }
        }
        std::vector<uint64_t> np(poly.size() + 1, 0);
        for (size_t j = 0; j < np.size(); ++j)
            for (size_t k = 0; k <= j && k < c.size(); ++k)
                if (j - k < poly.size()) np[j] = addmod(np[j], mulmod(c[k], poly[j - k], p), p);
        poly = std::move(np);
    }
    std::vector<uint64_t> low(poly.rbegin(), poly.rend());
    return UniPoly::make(p, std::move(low));
}

}  // namespace hwlen

#include <doctest.h>

#include <random>

#include "hwlen/errors.hpp"
#include "hwlen/semilinear.hpp"

using namespace hwlen;

namespace {

SemilinearOperator make_op(const FieldCtx& F, std::vector<std::vector<uint64_t>> rows) {
    size_t n = rows.size();
    SemilinearOperator T{F, n, FMatrix::zero(F, n, n)};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) T.A.at(i, j) = F.from_int(rows[i][j]);
    return T;
}

FieldCtx f9() { return FieldCtx::make(3, 2, std::vector<uint64_t>{1, 0, 1}); }

std::mt19937_64 rng(2024);

FieldElement random_elem(const FieldCtx& F) {
    std::vector<uint64_t> c(F.e());
    for (auto& x : c) x = rng() % F.p();
    return F.from_coeffs(std::move(c));
}

SemilinearOperator random_op(const FieldCtx& F, size_t dim) {
    SemilinearOperator T{F, dim, FMatrix::zero(F, dim, dim)};
    for (auto& x : T.A.a) x = random_elem(F);
    return T;
}

// direct implementation of the descending chain of images of F
Subspace stable_part_iterative(const SemilinearOperator& T) {
    const FieldCtx& F = T.field;
    std::vector<std::vector<FieldElement>> cur;
    for (size_t i = 0; i < T.dim; ++i) {
        std::vector<FieldElement> e(T.dim, F.zero());
        e[i] = F.one();
        cur.push_back(std::move(e));
    }
    Subspace S = span_of(F, cur);
    while (true) {
        std::vector<std::vector<FieldElement>> imgs;
        for (auto& v : S.basis) imgs.push_back(T.apply(v));
        Subspace next = span_of(F, imgs);
        if (next == S) return S;
        S = std::move(next);
    }
}

}  // namespace

TEST_CASE("iterate_matrix examples") {
    FieldCtx F5 = FieldCtx::make(5);
    auto T = make_op(F5, {{1, 2}, {3, 4}});
    CHECK(iterate_matrix(T, 0) == FMatrix::identity(F5, 2));
    // over a prime field A_r = A^r
    CHECK(iterate_matrix(T, 3) == mat_mul(F5, T.A, mat_mul(F5, T.A, T.A)));

    FieldCtx F9 = f9();
    SemilinearOperator U{F9, 1, FMatrix::zero(F9, 1, 1)};
    U.A.at(0, 0) = F9.from_coeffs({0, 1});  // t
    // A_2 = [t * t^3] = [1]
    CHECK(iterate_matrix(U, 2).at(0, 0) == F9.one());
}

TEST_CASE("stable and nilpotent parts, spec examples") {
    FieldCtx F5 = FieldCtx::make(5);
    auto id = make_op(F5, {{1, 0}, {0, 1}});
    CHECK(stable_part(id).dim() == 2);
    CHECK(nilpotent_part(id).dim() == 0);

    auto jordan = make_op(F5, {{0, 1}, {0, 0}});
    CHECK(stable_part(jordan).dim() == 0);
    CHECK(nilpotent_part(jordan).dim() == 2);
    CHECK(stable_rank(jordan) == 0);

    auto diag = make_op(F5, {{1, 0}, {0, 0}});
    Subspace s = stable_part(diag);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis[0][0] == F5.one());
    CHECK(s.basis[0][1] == F5.zero());
    Subspace n = nilpotent_part(diag);
    REQUIRE(n.dim() == 1);
    CHECK(n.basis[0][1] == F5.one());
    CHECK(classify(diag) == Classification{FClass::Intermediate, 1});
}

TEST_CASE("char_poly examples") {
    FieldCtx F5 = FieldCtx::make(5);
    auto id = make_op(F5, {{1, 0}, {0, 1}});
    CHECK(char_poly(F5, id.A) == UniPoly::make(5, {1, 3, 1}));  // (x-1)^2
    auto z = make_op(F5, {{0, 0}, {0, 0}});
    CHECK(char_poly(F5, z.A) == UniPoly::make(5, {0, 0, 1}));
    auto comp = make_op(F5, {{0, 2}, {1, 0}});  // companion of x^2-2
    CHECK(char_poly(F5, comp.A) == UniPoly::make(5, {3, 0, 1}));
}

TEST_CASE("quasilength and classification examples") {
    FieldCtx F5 = FieldCtx::make(5);
    CHECK(quasilength(make_op(F5, {{1, 0}, {0, 1}})) == 2);
    auto comp = make_op(F5, {{0, 2}, {1, 0}});
    CHECK(quasilength(comp) == 1);  // irreducible charpoly: the i/ii gap
    CHECK(stable_rank(comp) == 2);
    CHECK(quasilength(make_op(F5, {{0, 1}, {0, 0}})) == 0);

    CHECK(classify(make_op(F5, {{1}})) == Classification{FClass::Ordinary, 1});
    CHECK(classify(make_op(F5, {{0}})) == Classification{FClass::Nilpotent, 0});

    SemilinearOperator empty{F5, 0, FMatrix::zero(F5, 0, 0)};
    CHECK(classify(empty).kind == FClass::Ordinary);
    CHECK(stable_rank(empty) == 0);
    CHECK(quasilength(empty) == 0);

    CHECK_THROWS_AS(quasilength(random_op(f9(), 2)), UnsupportedExtensionDegreeError);
}

TEST_CASE("random operator properties over F_p and F_9") {
    std::vector<FieldCtx> fields = {FieldCtx::make(5), FieldCtx::make(13), f9()};
    for (const FieldCtx& F : fields) {
        for (int it = 0; it < 40; ++it) {
            size_t dim = 1 + rng() % 6;
            SemilinearOperator T = random_op(F, dim);

            Subspace S = stable_part(T), N = nilpotent_part(T);
            CHECK(S.dim() + N.dim() == dim);  // Fitting decomposition
            CHECK(subspace_intersection(F, S, N).dim() == 0);
            CHECK(S == stable_part_iterative(T));

            // chain of image ranks is non-increasing and stabilizes by dim
            size_t prev = dim;
            for (size_t r = 1; r <= dim + 2; ++r) {
                size_t rank = mat_rank(F, iterate_matrix(T, r));
                CHECK(rank <= prev);
                if (r >= dim) CHECK(rank == stable_rank(T));
                prev = rank;
            }

            if (F.e() == 1) {
                size_t q = quasilength(T), s = stable_rank(T);
                CHECK(q <= s);
                // F restricted to the stable part is invertible
                if (s > 0) {
                    for (auto& v : S.basis) CHECK(subspace_contains(F, S, T.apply(v)));
                    std::vector<std::vector<FieldElement>> imgs;
                    for (auto& v : S.basis) imgs.push_back(T.apply(v));
                    CHECK(span_of(F, imgs).dim() == s);
                }
            }
        }
    }
}

TEST_CASE("basis-change invariance: P^-1 A P^sigma") {
    std::vector<FieldCtx> fields = {FieldCtx::make(5), f9()};
    for (const FieldCtx& F : fields) {
        for (int it = 0; it < 30; ++it) {
            size_t dim = 1 + rng() % 5;
            SemilinearOperator T = random_op(F, dim);
            // random invertible P
            FMatrix P = FMatrix::zero(F, dim, dim);
            do {
                for (auto& x : P.a) x = random_elem(F);
            } while (mat_rank(F, P) != dim);
            // invert P by solving against the identity
            std::vector<std::vector<FieldElement>> aug(dim);
            for (size_t i = 0; i < dim; ++i) {
                aug[i].assign(2 * dim, F.zero());
                for (size_t j = 0; j < dim; ++j) aug[i][j] = P.at(i, j);
                aug[i][dim + i] = F.one();
            }
            rref(F, aug);
            FMatrix Pinv = FMatrix::zero(F, dim, dim);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j) Pinv.at(i, j) = aug[i][dim + j];
            SemilinearOperator T2{F, dim,
                                  mat_mul(F, Pinv, mat_mul(F, T.A, mat_frobenius(F, P, 1)))};
            CHECK(stable_rank(T2) == stable_rank(T));
            CHECK(classify(T2) == classify(T));
            if (F.e() == 1) CHECK(quasilength(T2) == quasilength(T));
        }
    }
}

TEST_CASE("quasilength equals stable rank when the charpoly splits") {
    FieldCtx F5 = FieldCtx::make(5);
    for (int it = 0; it < 60; ++it) {
        size_t dim = 1 + rng() % 5;
        SemilinearOperator T = random_op(F5, dim);
        Subspace S = stable_part(T);
        if (S.dim() == 0) continue;
        // restricted charpoly via the pivot-coordinate matrix
        auto rows = S.basis;
        auto pivots = rref(F5, rows);
        FMatrix M = FMatrix::zero(F5, S.dim(), S.dim());
        for (size_t j = 0; j < S.dim(); ++j) {
            auto img = T.apply(S.basis[j]);
            for (size_t i = 0; i < S.dim(); ++i) M.at(i, j) = img[pivots[i]];
        }
        UniPoly chi = char_poly(F5, M);
        // count linear factors by root multiplicity probing
        unsigned linear = 0;
        for (uint64_t r = 0; r < 5; ++r) {
            UniPoly root = UniPoly::make(5, {5 - r, 1});
            UniPoly f = chi;
            while (f.degree() > 0) {
                auto [q, rem] = upoly_divrem(f, root);
                if (!rem.is_zero()) break;
                ++linear;
                f = q;
            }
        }
        bool splits = linear == static_cast<unsigned>(chi.degree());
        if (splits)
            CHECK(quasilength(T) == stable_rank(T));
        else
            CHECK(quasilength(T) < stable_rank(T));
    }
}

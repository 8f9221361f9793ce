#include <doctest.h>

#include <random>

#include "hwlen/errors.hpp"
#include "hwlen/upoly.hpp"

using namespace hwlen;

static UniPoly up(uint64_t p, std::vector<uint64_t> c) { return UniPoly::make(p, std::move(c)); }

TEST_CASE("ring operations over F_5") {
    // (x+1)(x-1) = x^2+4
    CHECK(upoly_mul(up(5, {1, 1}), up(5, {4, 1})) == up(5, {4, 0, 1}));
    auto [q, r] = upoly_divrem(up(5, {4, 0, 1}), up(5, {1, 1}));
    CHECK(q == up(5, {4, 1}));
    CHECK(r.is_zero());
    CHECK(upoly_gcd(up(5, {4, 0, 1}), up(5, {4, 1})) == up(5, {4, 1}));
    CHECK_THROWS_AS(upoly_divrem(up(5, {1, 1}), UniPoly::zero(5)), DivisionByZeroError);
}

TEST_CASE("squarefree decomposition") {
    auto d1 = squarefree_decomposition(up(5, {4, 0, 1}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == std::pair{up(5, {4, 0, 1}), 1u});

    // (x-1)^2 = x^2 - 2x + 1
    auto d2 = squarefree_decomposition(up(5, {1, 3, 1}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair{up(5, {4, 1}), 2u});

    // x^3 - 1 = (x-1)^3 over F_3, the f' = 0 branch
    auto d3 = squarefree_decomposition(up(3, {2, 0, 0, 1}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == std::pair{up(3, {2, 1}), 3u});
}

TEST_CASE("count_irreducible_factors examples") {
    CHECK(count_irreducible_factors(up(5, {3, 0, 1})) == 1);  // x^2-2, 2 not a square mod 5
    CHECK(count_irreducible_factors(up(5, {4, 0, 1})) == 2);  // (x-1)(x+1)
    // (x-1)^3 = x^3 - 3x^2 + 3x - 1
    CHECK(count_irreducible_factors(upoly_mul(upoly_mul(up(5, {4, 1}), up(5, {4, 1})),
                                              up(5, {4, 1}))) == 3);
}

namespace {

std::vector<UniPoly> all_monic(uint64_t p, int deg) {
    std::vector<UniPoly> out;
    uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
        std::vector<uint64_t> c(deg + 1, 0);
        uint64_t rest = enc;
        for (int i = 0; i < deg; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        c[deg] = 1;
        out.push_back(UniPoly::make(p, std::move(c)));
    }
    return out;
}

// trial-division factor count oracle against an exhaustive irreducible list
unsigned count_oracle(UniPoly f, const std::vector<UniPoly>& irreducibles) {
    unsigned count = 0;
    for (const UniPoly& g : irreducibles) {
        while (f.degree() >= g.degree()) {
            auto [q, r] = upoly_divrem(f, g);
            if (!r.is_zero()) break;
            f = q;
            ++count;
        }
        if (f.degree() == 0) break;
    }
    REQUIRE(f.degree() == 0);
    return count;
}

}  // namespace

TEST_CASE("factor count matches a trial-division oracle") {
    std::mt19937_64 rng(3);
    // cap the exhaustive irreducible list at p^maxdeg ~ 10^5 candidates
    for (auto [p, maxdeg] : std::vector<std::pair<uint64_t, int>>{{3, 7}, {5, 6}, {13, 4}}) {
        std::vector<UniPoly> irred;
        for (int d = 1; d <= maxdeg; ++d)
            for (auto& f : all_monic(p, d))
                if (upoly_is_irreducible(f)) irred.push_back(f);
        for (int it = 0; it < 60; ++it) {
            int deg = 1 + static_cast<int>(rng() % maxdeg);
            std::vector<uint64_t> c(deg + 1);
            for (auto& x : c) x = rng() % p;
            c[deg] = 1 + rng() % (p - 1);
            UniPoly f = UniPoly::make(p, std::move(c));
            CHECK(count_irreducible_factors(f) == count_oracle(upoly_monic(f), irred));
        }
    }
}

TEST_CASE("factor count is additive and decomposition reassembles") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        uint64_t p = std::vector<uint64_t>{3, 5, 7, 13}[rng() % 4];
        auto rand_poly = [&](int maxdeg) {
            int deg = 1 + static_cast<int>(rng() % maxdeg);
            std::vector<uint64_t> c(deg + 1);
            for (auto& x : c) x = rng() % p;
            c[deg] = 1;
            return UniPoly::make(p, std::move(c));
        };
        UniPoly f = rand_poly(4), g = rand_poly(4);
        CHECK(count_irreducible_factors(upoly_mul(f, g)) ==
              count_irreducible_factors(f) + count_irreducible_factors(g));

        UniPoly prod = UniPoly::constant(p, 1);
        for (auto& [part, mult] : squarefree_decomposition(f))
            for (unsigned i = 0; i < mult; ++i) prod = upoly_mul(prod, part);
        CHECK(prod == upoly_monic(f));
    }
}

#include "hwlen/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

#include "hwlen/errors.hpp"
#include "hwlen/kernels.hpp"
#include "hwlen/modarith.hpp"

namespace hwlen {

CohomologyBasis cohomology_basis(unsigned n, uint32_t d) {
    assert(n >= 2 && d >= 1);
    CohomologyBasis b;
    if (d <= n) return b;
    // entries >= 1 summing to d <=> shifted simplex of degree d - (n+1);
    // colex order is inherited from the shift
    uint32_t rest = d - (n + 1);
    uint64_t count = simplex_size(n + 1, rest);
    for (uint64_t r = 0; r < count; ++r) {
        Exps e = simplex_unrank(r, n + 1, rest);
        for (auto& x : e) x += 1;
        b.monomials.push_back(std::move(e));
    }
    assert(b.monomials.size() == binomial(d - 1, n));
    return b;
}

HasseWittData hasse_witt_matrix(const HypersurfaceP& H, uint64_t coeff_budget) {
    assert(H.field.e() == 1);
    const uint64_t p = H.field.p();
    CohomologyBasis basis = cohomology_basis(H.n, H.d);
    const size_t m = basis.size();
    SemilinearOperator op{H.field, m, FMatrix::zero(H.field, m, m)};
    if (m > 0) {
        DenseHomog gp = pow_homog(dense_from_sparse(H.g), static_cast<unsigned>(p - 1),
                                  MulKernel::Auto, coeff_budget);
        for (size_t col = 0; col < m; ++col) {
            const Exps& a = basis.monomials[col];
            for (size_t row = 0; row < m; ++row) {
                const Exps& b = basis.monomials[row];
                Exps q(a.size());
                bool neg = false;
                for (size_t i = 0; i < a.size(); ++i) {
                    uint64_t pa = p * a[i];
                    if (pa < b[i]) {
                        neg = true;
                        break;
                    }
                    q[i] = static_cast<uint32_t>(pa - b[i]);
                }
                if (neg) continue;
                assert(total_degree(q) == H.d * (p - 1));
                op.A.at(row, col) = H.field.from_int(dense_coeff(gp, q));
            }
        }
    }
    return {std::move(basis), std::move(op)};
}

uint64_t hasse_invariant_truncated(const HypersurfaceP& H) {
    assert(H.d == H.n + 1);
    const uint64_t p = H.field.p();
    const uint32_t cap = static_cast<uint32_t>(p - 1);
    // repeated multiplication by g, discarding exponents that can no
    // longer reach the all-(p-1) target
    std::map<Exps, uint64_t> acc;
    acc.emplace(Exps(H.g.nvars, 0), 1);
    for (uint64_t step = 0; step + 1 < p; ++step) {
        std::map<Exps, uint64_t> next;
        for (auto& [ea, ca] : acc)
            for (auto& [eb, cb] : H.g.terms) {
                Exps e(ea.size());
                bool over = false;
                for (size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > cap) {
                        over = true;
                        break;
                    }
                }
                if (over) continue;
                uint64_t c = mulmod(ca, cb, p);
                auto [it, inserted] = next.emplace(std::move(e), c);
                if (!inserted) {
                    it->second = addmod(it->second, c, p);
                    if (it->second == 0) next.erase(it);
                }
            }
        acc = std::move(next);
    }
    auto it = acc.find(Exps(H.g.nvars, cap));
    return it == acc.end() ? 0 : it->second;
}

// ---- Groebner machinery (degrevlex, Buchberger) ----

namespace {

// a > b in degrevlex
bool drl_greater(const Exps& a, const Exps& b) {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct DrlGreater {
    bool operator()(const Exps& a, const Exps& b) const { return drl_greater(a, b); }
};

using GPoly = std::map<Exps, uint64_t, DrlGreater>;  // leading term first

GPoly to_gpoly(const MultiPolyP& f) {
    GPoly g;
    for (auto& [e, c] : f.terms) g.emplace(e, c);
    return g;
}

bool divides(const Exps& a, const Exps& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// work -= coef * x^shift * g, g monic
void axpy(GPoly& work, uint64_t coef, const Exps& shift, const GPoly& g, uint64_t p) {
    for (auto& [e, c] : g) {
        Exps ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
        uint64_t v = mulmod(coef, c, p);
        auto [it, inserted] = work.emplace(std::move(ne), negmod(v, p));
        if (!inserted) {
            it->second = submod(it->second, v, p);
            if (it->second == 0) work.erase(it);
        }
    }
}

GPoly make_monic(GPoly f, uint64_t p) {
    if (f.empty()) return f;
    uint64_t inv = invmod(f.begin()->second, p);
    if (inv != 1)
        for (auto& [e, c] : f) c = mulmod(c, inv, p);
    return f;
}

GPoly normal_form(GPoly work, const std::vector<GPoly>& basis, uint64_t p, uint64_t& steps,
                  uint64_t cap) {
    GPoly result;
    while (!work.empty()) {
        auto lead = *work.begin();
        bool reduced = false;
        for (const GPoly& g : basis) {
            const Exps& lm = g.begin()->first;
            if (!divides(lm, lead.first)) continue;
            if (++steps > cap) throw ResourceCapError(steps);
            Exps shift(lm.size());
            for (size_t i = 0; i < lm.size(); ++i) shift[i] = lead.first[i] - lm[i];
            axpy(work, lead.second, shift, g, p);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.emplace(lead.first, lead.second);
            work.erase(work.begin());
        }
    }
    return result;
}

std::vector<GPoly> buchberger(std::vector<GPoly> basis, uint64_t p, uint64_t cap) {
    uint64_t steps = 0;
    std::erase_if(basis, [](const GPoly& g) { return g.empty(); });
    for (auto& g : basis) g = make_monic(std::move(g), p);
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exps& li = basis[i].begin()->first;
        const Exps& lj = basis[j].begin()->first;
        // coprime leading monomials: S-polynomial reduces to zero
        bool coprime = true;
        for (size_t k = 0; k < li.size(); ++k)
            if (li[k] && lj[k]) {
                coprime = false;
                break;
            }
        if (coprime) continue;
        Exps lcm(li.size()), si(li.size()), sj(li.size());
        for (size_t k = 0; k < li.size(); ++k) {
            lcm[k] = std::max(li[k], lj[k]);
            si[k] = lcm[k] - li[k];
            sj[k] = lcm[k] - lj[k];
        }
        GPoly s;
        axpy(s, p - 1, si, basis[i], p);  // +x^si * f_i
        axpy(s, 1, sj, basis[j], p);      // -x^sj * f_j
        GPoly r = normal_form(std::move(s), basis, p, steps, cap);
        if (r.empty()) continue;
        basis.push_back(make_monic(std::move(r), p));
        for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
    return basis;
}

}  // namespace

Smoothness smoothness_check(const HypersurfaceP& H, uint64_t step_cap) {
    const uint64_t p = H.field.p();
    const unsigned nv = H.g.nvars;
    std::vector<GPoly> gens;
    gens.push_back(to_gpoly(H.g));
    for (unsigned i = 0; i < nv; ++i) gens.push_back(to_gpoly(H.g.derivative(i)));
    std::vector<GPoly> gb;
    try {
        gb = buchberger(std::move(gens), p, step_cap);
    } catch (const ResourceCapError&) {
        return Smoothness::Inconclusive;
    }
    // unit ideal: empty zero locus
    for (const GPoly& g : gb)
        if (total_degree(g.begin()->first) == 0) return Smoothness::Smooth;
    // the cone is supported at the origin iff each variable has a pure
    // power among the leading monomials
    for (unsigned v = 0; v < nv; ++v) {
        bool found = false;
        for (const GPoly& g : gb) {
            const Exps& lm = g.begin()->first;
            bool pure = lm[v] > 0;
            for (unsigned k = 0; k < nv && pure; ++k)
                if (k != v && lm[k] > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return Smoothness::Singular;
    }
    return Smoothness::Smooth;
}

namespace {

FieldElement eval_poly(const FieldCtx& F, const MultiPolyP& g,
                       const std::vector<FieldElement>& pt) {
    FieldElement acc = F.zero();
    for (auto& [e, c] : g.terms) {
        FieldElement t = F.from_int(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = F.mul(t, F.pow(pt[i], e[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

// deterministic search for a monic irreducible of degree e over F_p
std::vector<uint64_t> find_irreducible(uint64_t p, unsigned e) {
    std::vector<uint64_t> c(e + 1, 0);
    c[e] = 1;
    while (true) {
        if (upoly_is_irreducible(UniPoly::make(p, c))) return c;
        // increment the lower coefficients as a base-p counter
        for (unsigned i = 0; i < e; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
}

}  // namespace

std::vector<ProjPoint> singular_points_bruteforce(const HypersurfaceP& H, unsigned max_ext,
                                                  uint64_t work_cap) {
    if (max_ext == 0) throw InvalidInputError("max_ext must be at least 1");
    const uint64_t p = H.field.p();
    const unsigned nv = H.g.nvars;
    unsigned __int128 work = 0;
    for (unsigned e = 1; e <= max_ext; ++e) {
        unsigned __int128 q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        unsigned __int128 pts = 1;
        for (unsigned i = 0; i + 1 < nv; ++i) pts *= q;
        work += pts * nv;
    }
    if (work > work_cap) throw WorkCapExceededError();

    std::vector<MultiPolyP> polys{H.g};
    for (unsigned i = 0; i < nv; ++i) polys.push_back(H.g.derivative(i));

    std::vector<ProjPoint> out;
    for (unsigned e = 1; e <= max_ext; ++e) {
        FieldCtx F = e == 1 ? FieldCtx::make(p)
                            : FieldCtx::make(p, e, find_irreducible(p, e));
        uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        // one chart per position of the last nonzero coordinate
        for (unsigned k = 0; k < nv; ++k) {
            uint64_t total = 1;
            for (unsigned i = 0; i < k; ++i) total *= q;
            for (uint64_t enc = 0; enc < total; ++enc) {
                std::vector<FieldElement> pt(nv, F.zero());
                uint64_t rest = enc;
                for (unsigned i = 0; i < k; ++i) {
                    uint64_t r = rest % q;
                    rest /= q;
                    std::vector<uint64_t> cs(e);
                    for (unsigned j = 0; j < e; ++j) {
                        cs[j] = r % p;
                        r /= p;
                    }
                    pt[i] = F.from_coeffs(std::move(cs));
                }
                pt[k] = F.one();
                bool allzero = true;
                for (auto& f : polys)
                    if (!eval_poly(F, f, pt).is_zero()) {
                        allzero = false;
                        break;
                    }
                if (allzero) out.push_back({e, pt});
            }
        }
    }
    return out;
}

GoodReduction good_reduction_check(const MultiPolyZ& g, uint64_t p) {
    assert(g.is_homogeneous() && g.nvars >= 3);
    FieldCtx F = FieldCtx::make(p);
    MultiPolyP gp;
    try {
        ReduceResult r = reduce_mod(g, F);
        if (r.degree_dropped) return {std::nullopt, BadReason::DegreeDrop};
        gp = std::move(r.poly);
    } catch (const VanishesModPError&) {
        return {std::nullopt, BadReason::VanishesModP};
    }
    HypersurfaceP H{F, g.nvars - 1, static_cast<uint32_t>(g.degree()), std::move(gp)};
    switch (smoothness_check(H)) {
        case Smoothness::Smooth:
            return {std::move(H), std::nullopt};
        case Smoothness::Singular:
            return {std::nullopt, BadReason::SingularFibre};
        default:
            return {std::nullopt, BadReason::Inconclusive};
    }
}

const char* bad_reason_name(BadReason r) {
    switch (r) {
        case BadReason::VanishesModP:
            return "VanishesModP";
        case BadReason::DegreeDrop:
            return "DegreeDrop";
        case BadReason::SingularFibre:
            return "SingularFibre";
        default:
            return "Inconclusive";
    }
}

}  // namespace hwlen

#include "hwlen/kernels.hpp"

#include <algorithm>
#include <cassert>

#include "hwlen/errors.hpp"
#include "hwlen/modarith.hpp"

namespace hwlen {

uint64_t DenseHomog::size() const {
    uint64_t s = 1;
    for (unsigned i = 0; i < avars; ++i) s *= stride();
    return s;
}

DenseHomog dense_from_sparse(const MultiPolyP& g) {
    assert(g.is_homogeneous() && !g.is_zero());
    DenseHomog d;
    d.p = g.p;
    d.avars = g.nvars - 1;
    d.deg = static_cast<uint32_t>(g.degree());
    d.a.assign(d.size(), 0);
    uint64_t s = d.stride();
    for (auto& [e, c] : g.terms) {
        uint64_t idx = 0, mult = 1;
        for (unsigned i = 0; i < d.avars; ++i) {
            idx += e[i] * mult;
            mult *= s;
        }
        d.a[idx] = c;
    }
    return d;
}

MultiPolyP sparse_from_dense(const DenseHomog& d) {
    MultiPolyP g;
    g.p = d.p;
    g.nvars = d.avars + 1;
    uint64_t s = d.stride();
    for (uint64_t idx = 0; idx < d.a.size(); ++idx) {
        if (d.a[idx] == 0) continue;
        Exps e(g.nvars, 0);
        uint64_t rest = idx;
        uint32_t sum = 0;
        for (unsigned i = 0; i < d.avars; ++i) {
            e[i] = static_cast<uint32_t>(rest % s);
            sum += e[i];
            rest /= s;
        }
        assert(sum <= d.deg);
        e[d.avars] = d.deg - sum;
        g.terms.emplace(std::move(e), d.a[idx]);
    }
    return g;
}

uint64_t dense_coeff(const DenseHomog& d, const Exps& full) {
    assert(full.size() == d.avars + 1);
    if (total_degree(full) != d.deg) return 0;
    uint64_t idx = 0, mult = 1, s = d.stride();
    for (unsigned i = 0; i < d.avars; ++i) {
        if (full[i] > d.deg) return 0;
        idx += full[i] * mult;
        mult *= s;
    }
    return d.a[idx];
}

void conv_serial(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
                 uint64_t p) {
    std::fill(out, out + la + lb - 1, 0);
    for (size_t i = 0; i < la; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < lb; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
        }
    }
}

void conv_omp(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
              uint64_t p) {
    // support list of the shorter operand; each output index is owned by
    // exactly one iteration, so the result is deterministic
    if (la > lb) {
        conv_omp(b, lb, a, la, out, p);
        return;
    }
    std::vector<std::pair<size_t, uint64_t>> supp;
    for (size_t i = 0; i < la; ++i)
        if (a[i]) supp.emplace_back(i, a[i]);
    const int64_t lout = static_cast<int64_t>(la + lb - 1);
#pragma omp parallel for schedule(static)
    for (int64_t k = 0; k < lout; ++k) {
        unsigned __int128 acc = 0;
        size_t uk = static_cast<size_t>(k);
        for (auto& [i, v] : supp) {
            if (i > uk) break;
            size_t j = uk - i;
            if (j >= lb) continue;
            acc += static_cast<unsigned __int128>(v) * b[j];
            if (acc >> 126) acc %= p;
        }
        out[uk] = static_cast<uint64_t>(acc % p);
    }
}

// ---- NTT over q = 29 * 2^57 + 1 ----

namespace {

constexpr uint64_t kNttPrime = 4179340454199820289ull;  // 29 * 2^57 + 1
constexpr uint64_t kNttRoot = 3;                        // primitive root mod kNttPrime

void ntt_forward(std::vector<uint64_t>& a, bool inverse) {
    const size_t n = a.size();
    const uint64_t q = kNttPrime;
    // bit reversal
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        uint64_t w = powmod(kNttRoot, (q - 1) / len, q);
        if (inverse) w = invmod(w, q);
        const size_t half = len >> 1;
        std::vector<uint64_t> ws(half);
        ws[0] = 1;
        for (size_t i = 1; i < half; ++i) ws[i] = mulmod(ws[i - 1], w, q);
        const int64_t nblocks = static_cast<int64_t>(n / len);
#pragma omp parallel for schedule(static) if (n >= (size_t(1) << 15))
        for (int64_t blk = 0; blk < nblocks; ++blk) {
            size_t base = static_cast<size_t>(blk) * len;
            for (size_t k = 0; k < half; ++k) {
                uint64_t u = a[base + k];
                uint64_t v = mulmod(a[base + k + half], ws[k], q);
                a[base + k] = addmod(u, v, q);
                a[base + k + half] = submod(u, v, q);
            }
        }
    }
    if (inverse) {
        uint64_t ninv = invmod(n % q, q);
        const int64_t sn = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= (size_t(1) << 15))
        for (int64_t i = 0; i < sn; ++i) a[i] = mulmod(a[i], ninv, q);
    }
}

}  // namespace

bool ntt_applicable(size_t la, size_t lb, uint64_t p) {
    unsigned __int128 bound =
        static_cast<unsigned __int128>(std::min(la, lb)) * (p - 1) * (p - 1);
    return bound < kNttPrime;
}

void conv_ntt(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
              uint64_t p) {
    assert(ntt_applicable(la, lb, p));
    size_t lout = la + lb - 1;
    size_t n = 1;
    while (n < lout) n <<= 1;
    std::vector<uint64_t> fa(a, a + la), fb(b, b + lb);
    fa.resize(n, 0);
    fb.resize(n, 0);
    ntt_forward(fa, false);
    ntt_forward(fb, false);
    const int64_t sn = static_cast<int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= (size_t(1) << 15))
    for (int64_t i = 0; i < sn; ++i) fa[i] = mulmod(fa[i], fb[i], kNttPrime);
    ntt_forward(fa, true);
    for (size_t i = 0; i < lout; ++i) out[i] = fa[i] % p;
}

namespace {

// repack from the operand's own stride to the output stride
std::vector<uint64_t> repack(const DenseHomog& f, uint64_t out_stride, size_t& packed_len) {
    uint64_t s = f.stride();
    uint64_t top = 1;
    for (unsigned i = 0; i + 1 < f.avars; ++i) top *= out_stride;
    // max packed index is deg * out_stride^(avars-1), all degree in the
    // top variable
    packed_len = f.avars == 0 ? 1 : static_cast<size_t>(f.deg) * top + 1;
    std::vector<uint64_t> out(packed_len, 0);
    for (uint64_t idx = 0; idx < f.a.size(); ++idx) {
        if (f.a[idx] == 0) continue;
        uint64_t rest = idx, nidx = 0, mult = 1;
        for (unsigned i = 0; i < f.avars; ++i) {
            nidx += (rest % s) * mult;
            rest /= s;
            mult *= out_stride;
        }
        out[nidx] = f.a[idx];
    }
    return out;
}

size_t count_support(const std::vector<uint64_t>& v) {
    size_t c = 0;
    for (uint64_t x : v)
        if (x) ++c;
    return c;
}

}  // namespace

DenseHomog mul_homog(const DenseHomog& f, const DenseHomog& g, MulKernel kernel,
                     uint64_t coeff_budget) {
    assert(f.p == g.p && f.avars == g.avars);
    DenseHomog out;
    out.p = f.p;
    out.avars = f.avars;
    out.deg = f.deg + g.deg;
    uint64_t est = out.size();
    if (est > coeff_budget) throw OutOfMemoryBudgetError(est);

    if (out.avars == 0) {
        out.a = {mulmod(f.a[0], g.a[0], f.p)};
        return out;
    }
    uint64_t s = out.stride();
    size_t la = 0, lb = 0;
    std::vector<uint64_t> pa = repack(f, s, la);
    std::vector<uint64_t> pb = repack(g, s, lb);
    std::vector<uint64_t> res(la + lb - 1, 0);

    MulKernel k = kernel;
    if (k == MulKernel::Auto) {
        size_t sf = std::min(count_support(pa), count_support(pb));
        double school_cost = static_cast<double>(res.size()) * static_cast<double>(sf);
        if (school_cost > 5e7 && ntt_applicable(la, lb, f.p))
            k = MulKernel::Ntt;
        else
            k = MulKernel::Omp;
    }
    switch (k) {
        case MulKernel::SerialRef:
            conv_serial(pa.data(), la, pb.data(), lb, res.data(), f.p);
            break;
        case MulKernel::Ntt:
            conv_ntt(pa.data(), la, pb.data(), lb, res.data(), f.p);
            break;
        default:
            conv_omp(pa.data(), la, pb.data(), lb, res.data(), f.p);
            break;
    }
    // res is already packed at the output stride
    out.a.assign(out.size(), 0);
    std::copy(res.begin(), res.end(), out.a.begin());
    return out;
}

DenseHomog pow_homog(const DenseHomog& g, unsigned k, MulKernel kernel, uint64_t coeff_budget) {
    DenseHomog result;
    result.p = g.p;
    result.avars = g.avars;
    result.deg = 0;
    result.a = {1 % g.p};
    if (k == 0) return result;
    DenseHomog base = g;
    while (true) {
        if (k & 1) result = mul_homog(result, base, kernel, coeff_budget);
        k >>= 1;
        if (k == 0) break;
        base = mul_homog(base, base, kernel, coeff_budget);
    }
    return result;
}

}  // namespace hwlen

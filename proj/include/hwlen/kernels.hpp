#pragma once

#include <cstdint>
#include <vector>

#include "hwlen/mpoly.hpp"

// Dense multiplication kernels for homogeneous polynomials over F_p.
//
// A homogeneous polynomial of degree D in n+1 variables is stored
// dehomogenized: the last variable's exponent is D minus the rest, and the
// first n exponents index a packed array with stride S per variable
// (linear index e_0 + e_1*S + ... + e_{n-1}*S^{n-1}). With S > D no two
// exponent vectors collide and multiplication is plain univariate
// convolution of the packed arrays, which is what the kernels below
// compute: a serial schoolbook reference, an OpenMP schoolbook variant
// parallel over output coefficients, and an NTT path for large operands.

namespace hwlen {

struct DenseHomog {
    uint64_t p = 0;
    unsigned avars = 0;  // affine variable count n (total variables n+1)
    uint32_t deg = 0;    // total degree; per-variable packing stride is deg+1
    std::vector<uint64_t> a;

    uint64_t stride() const { return deg + 1; }
    uint64_t size() const;  // (deg+1)^avars
};

enum class MulKernel { Auto, SerialRef, Omp, Ntt };

DenseHomog dense_from_sparse(const MultiPolyP& g);
MultiPolyP sparse_from_dense(const DenseHomog& d);

// Coefficient of a full (n+1)-entry exponent vector; zero when the vector
// does not sum to deg.
uint64_t dense_coeff(const DenseHomog& d, const Exps& full);

// Product of two homogeneous polynomials over the same p and variable
// count. Throws OutOfMemoryBudgetError when the output box exceeds
// coeff_budget entries.
DenseHomog mul_homog(const DenseHomog& f, const DenseHomog& g, MulKernel kernel = MulKernel::Auto,
                     uint64_t coeff_budget = kDefaultCoeffBudget);

DenseHomog pow_homog(const DenseHomog& g, unsigned k, MulKernel kernel = MulKernel::Auto,
                     uint64_t coeff_budget = kDefaultCoeffBudget);

// Raw packed-univariate convolutions backing mul_homog, exposed for the
// benchmark and for kernel-equivalence tests. out has size la + lb - 1.
void conv_serial(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
                 uint64_t p);
void conv_omp(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
              uint64_t p);
// Exact integer convolution via a 62-bit NTT prime, reduced mod p at the
// end. Requires min(la, lb) * (p-1)^2 below the NTT modulus.
void conv_ntt(const uint64_t* a, size_t la, const uint64_t* b, size_t lb, uint64_t* out,
              uint64_t p);
bool ntt_applicable(size_t la, size_t lb, uint64_t p);

}  // namespace hwlen

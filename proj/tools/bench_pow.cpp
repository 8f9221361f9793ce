// Benchmark of the dense multiplication kernels behind g^(p-1): serial
// schoolbook reference vs OpenMP schoolbook vs NTT, on Fermat-type plane
// curves. Also reports the end-to-end Hasse-Witt time per prime.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hwlen/geometry.hpp"
#include "hwlen/kernels.hpp"

using namespace hwlen;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

MultiPolyP fermat(uint64_t p, unsigned nvars, uint32_t d) {
    MultiPolyP g;
    g.p = p;
    g.nvars = nvars;
    for (unsigned i = 0; i < nvars; ++i) {
        Exps e(nvars, 0);
        e[i] = d;
        g.terms.emplace(std::move(e), 1);
    }
    return g;
}

void bench_case(uint64_t p, uint32_t d, MulKernel skip_serial_above, uint64_t budget) {
    MultiPolyP g = fermat(p, 3, d);
    DenseHomog dg = dense_from_sparse(g);
    unsigned k = static_cast<unsigned>(p - 1);

    std::printf("p=%llu d=%u (plane curve), computing g^%u\n",
                static_cast<unsigned long long>(p), d, k);
    struct Run {
        const char* name;
        MulKernel kernel;
    };
    std::vector<Run> runs = {{"serial ref", MulKernel::SerialRef},
                             {"omp       ", MulKernel::Omp},
                             {"ntt       ", MulKernel::Ntt}};
    DenseHomog ref;
    bool have_ref = false;
    for (auto& run : runs) {
        if (run.kernel == MulKernel::SerialRef && skip_serial_above == MulKernel::SerialRef &&
            p > 100) {
            std::printf("  %s   skipped (too slow at this size)\n", run.name);
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        DenseHomog r = pow_homog(dg, k, run.kernel, budget);
        double t = ms_since(t0);
        bool ok = true;
        if (!have_ref) {
            ref = r;
            have_ref = true;
        } else
            ok = r.a == ref.a;
        std::printf("  %s   %9.2f ms   %s\n", run.name, t, ok ? "match" : "MISMATCH");
    }
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t budget = uint64_t(1) << 31;
    std::vector<std::pair<uint64_t, uint32_t>> cases = {{97, 3}, {97, 5}, {199, 5}, {499, 5}};
    if (argc == 3) cases = {{std::stoull(argv[1]), static_cast<uint32_t>(std::stoul(argv[2]))}};
    for (auto& [p, d] : cases) bench_case(p, d, MulKernel::SerialRef, budget);
    return 0;
}

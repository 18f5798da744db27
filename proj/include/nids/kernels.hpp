#pragma once

#include <cstddef>

namespace nids::kern {

/// Hot inner loops of the grid code. All complex arrays are interleaved
/// (re, im) doubles. Each entry has a scalar reference implementation and an
/// AVX2 variant selected at runtime; the two are equivalence-tested.
struct KernelTable {
    /// y[i] = cm2 x[i-2off] + cm1 x[i-off] + c0 x[i] + c1 x[i+off] + c2 x[i+2off]
    /// for i in [0, n). The caller guarantees all accesses are in bounds.
    void (*stencil5)(const double* x, double* y, std::size_t n, std::ptrdiff_t off,
                     double cm2, double cm1, double c0, double c1, double c2);

    /// out[i] = q[2i]^2 + q[2i+1]^2.
    void (*abs2)(const double* q, double* out, std::size_t n);

    /// y[i] = a[i] + s * b[i] over n doubles.
    void (*saxpy)(double* y, const double* a, const double* b, double s,
                  std::size_t n);

    /// q[i] += w * (k1[i] + 2 k2[i] + 2 k3[i] + k4[i]) over n doubles.
    void (*rk4_combine)(double* q, const double* k1, const double* k2,
                        const double* k3, const double* k4, double w,
                        std::size_t n);

    /// One row of the evolution right-hand side:
    ///   out = i*(lap + (W + omega0*(xi+eta))*q)
    ///         + (omega1*xi + a1)*qx + (omega1*eta - a1)*qy + omega1*q
    /// q, lap, qx, qy, out: n interleaved complex; W, eta: n reals.
    void (*rhs_row)(const double* q, const double* lap, const double* qx,
                    const double* qy, const double* W, const double* eta,
                    double* out, std::size_t n, double xi, double omega0,
                    double omega1, double a1);

    const char* name;
};

/// Runtime-selected table (AVX2 when the CPU supports it, unless the
/// NIDS_SIMD environment variable forces "scalar").
const KernelTable& kernels();

const KernelTable& kernels_scalar();

/// Null when AVX2 is unavailable on this CPU/build.
const KernelTable* kernels_avx2();

}  // namespace nids::kern

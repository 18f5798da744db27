#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "nids/kernels.hpp"

namespace nids::kern {
namespace avx2 {

void stencil5(const double* x, double* y, std::size_t n, std::ptrdiff_t off,
              double cm2, double cm1, double c0, double c1, double c2) {
    const __m256d vm2 = _mm256_set1_pd(cm2);
    const __m256d vm1 = _mm256_set1_pd(cm1);
    const __m256d v0 = _mm256_set1_pd(c0);
    const __m256d v1 = _mm256_set1_pd(c1);
    const __m256d v2 = _mm256_set1_pd(c2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_mul_pd(vm2, _mm256_loadu_pd(x + i - 2 * off));
        acc = _mm256_fmadd_pd(vm1, _mm256_loadu_pd(x + i - off), acc);
        acc = _mm256_fmadd_pd(v0, _mm256_loadu_pd(x + i), acc);
        acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(x + i + off), acc);
        acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(x + i + 2 * off), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i)
        y[i] = cm2 * x[i - 2 * off] + cm1 * x[i - off] + c0 * x[i] +
               c1 * x[i + off] + c2 * x[i + 2 * off];
}

void abs2(const double* q, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(q + 2 * i);      // r0 i0 r1 i1
        const __m256d b = _mm256_loadu_pd(q + 2 * i + 4);  // r2 i2 r3 i3
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        // h = |q0|^2 |q2|^2 |q1|^2 |q3|^2
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < n; ++i)
        out[i] = q[2 * i] * q[2 * i] + q[2 * i + 1] * q[2 * i + 1];
}

void saxpy(double* y, const double* a, const double* b, double s,
           std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(
            y + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
    for (; i < n; ++i) y[i] = a[i] + s * b[i];
}

void rk4_combine(double* q, const double* k1, const double* k2,
                 const double* k3, const double* k4, double w, std::size_t n) {
    const __m256d vw = _mm256_set1_pd(w);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(k1 + i);
        acc = _mm256_fmadd_pd(two, _mm256_loadu_pd(k2 + i), acc);
        acc = _mm256_fmadd_pd(two, _mm256_loadu_pd(k3 + i), acc);
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(k4 + i));
        _mm256_storeu_pd(q + i, _mm256_fmadd_pd(vw, acc, _mm256_loadu_pd(q + i)));
    }
    for (; i < n; ++i)
        q[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void rhs_row(const double* q, const double* lap, const double* qx,
             const double* qy, const double* W, const double* eta, double* out,
             std::size_t n, double xi, double omega0, double omega1,
             double a1) {
    const double wx = omega1 * xi + a1;
    const __m256d vwx = _mm256_set1_pd(wx);
    const __m256d vw1 = _mm256_set1_pd(omega1);
    const __m256d vw0 = _mm256_set1_pd(omega0);
    const __m256d vxi = _mm256_set1_pd(xi);
    const __m256d va1 = _mm256_set1_pd(a1);
    const __m256d negeven = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        // duplicate the two reals into complex-pair lanes: w0 w0 w1 w1
        const __m256d Wd = _mm256_permute4x64_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(W + i)), 0x50);
        const __m256d ed = _mm256_permute4x64_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(eta + i)), 0x50);
        const __m256d s =
            _mm256_fmadd_pd(vw0, _mm256_add_pd(vxi, ed), Wd);  // W + w0(xi+eta)
        const __m256d vq = _mm256_loadu_pd(q + 2 * i);
        __m256d tmp = _mm256_fmadd_pd(s, vq, _mm256_loadu_pd(lap + 2 * i));
        // i * tmp : swap (re, im) pairs, negate the new real lanes
        tmp = _mm256_mul_pd(_mm256_permute_pd(tmp, 0x5), negeven);
        const __m256d wy = _mm256_fmsub_pd(vw1, ed, va1);  // omega1*eta - a1
        __m256d acc = _mm256_fmadd_pd(vwx, _mm256_loadu_pd(qx + 2 * i), tmp);
        acc = _mm256_fmadd_pd(wy, _mm256_loadu_pd(qy + 2 * i), acc);
        acc = _mm256_fmadd_pd(vw1, vq, acc);
        _mm256_storeu_pd(out + 2 * i, acc);
    }
    for (; i < n; ++i) {
        const double s = W[i] + omega0 * (xi + eta[i]);
        const double wy = omega1 * eta[i] - a1;
        const double tre = lap[2 * i] + s * q[2 * i];
        const double tim = lap[2 * i + 1] + s * q[2 * i + 1];
        out[2 * i] = -tim + wx * qx[2 * i] + wy * qy[2 * i] + omega1 * q[2 * i];
        out[2 * i + 1] =
            tre + wx * qx[2 * i + 1] + wy * qy[2 * i + 1] + omega1 * q[2 * i + 1];
    }
}

}  // namespace avx2

const KernelTable* kernels_avx2() {
    static const KernelTable t = {avx2::stencil5, avx2::abs2, avx2::saxpy,
                                  avx2::rk4_combine, avx2::rhs_row, "avx2"};
    return &t;
}

}  // namespace nids::kern

#else

#include "nids/kernels.hpp"

namespace nids::kern {
const KernelTable* kernels_avx2() { return nullptr; }
}  // namespace nids::kern

#endif

#if defined(__aarch64__)

#include <arm_neon.h>

#include "nids/kernels.hpp"

namespace nids::kern {
namespace neon {

void stencil5(const double* x, double* y, std::size_t n, std::ptrdiff_t off,
              double cm2, double cm1, double c0, double c1, double c2) {
    const float64x2_t vm2 = vdupq_n_f64(cm2);
    const float64x2_t vm1 = vdupq_n_f64(cm1);
    const float64x2_t v0 = vdupq_n_f64(c0);
    const float64x2_t v1 = vdupq_n_f64(c1);
    const float64x2_t v2 = vdupq_n_f64(c2);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vmulq_f64(vm2, vld1q_f64(x + i - 2 * off));
        acc = vfmaq_f64(acc, vm1, vld1q_f64(x + i - off));
        acc = vfmaq_f64(acc, v0, vld1q_f64(x + i));
        acc = vfmaq_f64(acc, v1, vld1q_f64(x + i + off));
        acc = vfmaq_f64(acc, v2, vld1q_f64(x + i + 2 * off));
        vst1q_f64(y + i, acc);
    }
    for (; i < n; ++i)
        y[i] = cm2 * x[i - 2 * off] + cm1 * x[i - off] + c0 * x[i] +
               c1 * x[i + off] + c2 * x[i + 2 * off];
}

void abs2(const double* q, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t z = vld1q_f64(q + 2 * i);
        out[i] = vaddvq_f64(vmulq_f64(z, z));
    }
}

void saxpy(double* y, const double* a, const double* b, double s,
           std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(a + i), vs, vld1q_f64(b + i)));
    for (; i < n; ++i) y[i] = a[i] + s * b[i];
}

void rk4_combine(double* q, const double* k1, const double* k2,
                 const double* k3, const double* k4, double w, std::size_t n) {
    const float64x2_t vw = vdupq_n_f64(w);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vld1q_f64(k1 + i);
        acc = vfmaq_f64(acc, two, vld1q_f64(k2 + i));
        acc = vfmaq_f64(acc, two, vld1q_f64(k3 + i));
        acc = vaddq_f64(acc, vld1q_f64(k4 + i));
        vst1q_f64(q + i, vfmaq_f64(vld1q_f64(q + i), vw, acc));
    }
    for (; i < n; ++i)
        q[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void rhs_row(const double* q, const double* lap, const double* qx,
             const double* qy, const double* W, const double* eta, double* out,
             std::size_t n, double xi, double omega0, double omega1,
             double a1) {
    const double wx = omega1 * xi + a1;
    const float64x2_t vwx = vdupq_n_f64(wx);
    const float64x2_t vw1 = vdupq_n_f64(omega1);
    const float64x2_t flip = {-1.0, 1.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double s = W[i] + omega0 * (xi + eta[i]);
        const double wy = omega1 * eta[i] - a1;
        const float64x2_t vq = vld1q_f64(q + 2 * i);
        float64x2_t tmp = vfmaq_f64(vld1q_f64(lap + 2 * i), vdupq_n_f64(s), vq);
        tmp = vmulq_f64(vextq_f64(tmp, tmp, 1), flip);  // i * tmp
        float64x2_t acc = vfmaq_f64(tmp, vwx, vld1q_f64(qx + 2 * i));
        acc = vfmaq_f64(acc, vdupq_n_f64(wy), vld1q_f64(qy + 2 * i));
        acc = vfmaq_f64(acc, vw1, vq);
        vst1q_f64(out + 2 * i, acc);
    }
}

}  // namespace neon

const KernelTable* kernels_neon() {
    static const KernelTable t = {neon::stencil5, neon::abs2, neon::saxpy,
                                  neon::rk4_combine, neon::rhs_row, "neon"};
    return &t;
}

}  // namespace nids::kern

#else

namespace nids::kern {
struct KernelTable;
const KernelTable* kernels_neon() { return nullptr; }
}  // namespace nids::kern

#endif

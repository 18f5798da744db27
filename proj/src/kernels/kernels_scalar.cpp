#include "nids/kernels.hpp"

namespace nids::kern {
namespace scalar {

void stencil5(const double* x, double* y, std::size_t n, std::ptrdiff_t off,
              double cm2, double cm1, double c0, double c1, double c2) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = cm2 * x[i - 2 * off] + cm1 * x[i - off] + c0 * x[i] +
               c1 * x[i + off] + c2 * x[i + 2 * off];
}

void abs2(const double* q, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = q[2 * i] * q[2 * i] + q[2 * i + 1] * q[2 * i + 1];
}

void saxpy(double* y, const double* a, const double* b, double s,
           std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a[i] + s * b[i];
}

void rk4_combine(double* q, const double* k1, const double* k2,
                 const double* k3, const double* k4, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        q[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void rhs_row(const double* q, const double* lap, const double* qx,
             const double* qy, const double* W, const double* eta, double* out,
             std::size_t n, double xi, double omega0, double omega1,
             double a1) {
    const double wx = omega1 * xi + a1;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = W[i] + omega0 * (xi + eta[i]);
        const double wy = omega1 * eta[i] - a1;
        const double tre = lap[2 * i] + s * q[2 * i];
        const double tim = lap[2 * i + 1] + s * q[2 * i + 1];
        out[2 * i] = -tim + wx * qx[2 * i] + wy * qy[2 * i] + omega1 * q[2 * i];
        out[2 * i + 1] =
            tre + wx * qx[2 * i + 1] + wy * qy[2 * i + 1] + omega1 * q[2 * i + 1];
    }
}

}  // namespace scalar

const KernelTable& kernels_scalar() {
    static const KernelTable t = {scalar::stencil5, scalar::abs2, scalar::saxpy,
                                  scalar::rk4_combine, scalar::rhs_row,
                                  "scalar"};
    return t;
}

}  // namespace nids::kern

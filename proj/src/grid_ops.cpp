#include <cstddef>

#include "nids/grid.hpp"
#include "nids/kernels.hpp"

namespace nids::ops {

namespace {

// One-sided 4th-order first-derivative taps (times 12h) at the first two
// node layers; mirrored with a sign flip at the far edge.
constexpr double kD1Edge0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
constexpr double kD1Edge1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};

// One-sided 4th-order second-derivative taps (times 12h^2); mirrored without
// sign flip at the far edge.
constexpr double kD2Edge0[6] = {45.0, -154.0, 214.0, -156.0, 61.0, -10.0};
constexpr double kD2Edge1[6] = {10.0, -15.0, -4.0, 14.0, -6.0, 1.0};

void tap(const double* x, double* y, std::size_t cnt, std::ptrdiff_t off,
         const double* c, int k, double scale) {
    for (std::size_t p = 0; p < cnt; ++p) {
        double acc = 0.0;
        for (int m = 0; m < k; ++m) acc += c[m] * x[p + m * off];
        y[p] = scale * acc;
    }
}

void tap_rev(const double* x, double* y, std::size_t cnt, std::ptrdiff_t off,
             const double* c, int k, double scale) {
    // Same taps applied from the far edge inward.
    for (std::size_t p = 0; p < cnt; ++p) {
        double acc = 0.0;
        for (int m = 0; m < k; ++m) acc += c[m] * x[p - m * off];
        y[p] = scale * acc;
    }
}

// Derivative along one axis of a field whose nodes are `soff` doubles apart
// along that axis, with `cnt` contiguous doubles per node layer and `nlay`
// layers. `lines` outer blocks of stride `bstride` cover the other axis when
// the derivative axis is the fast one.
struct AxisView {
    const double* x;
    double* y;
    int nlay;            // nodes along the derivative axis
    std::ptrdiff_t soff; // doubles between consecutive nodes on the axis
    std::size_t cnt;     // contiguous doubles per layer handled at once
};

void d1_axis(const AxisView& v, double h) {
    const double s1 = 1.0 / (12.0 * h);
    const auto& K = kern::kernels();
    tap(v.x, v.y, v.cnt, v.soff, kD1Edge0, 5, s1);
    tap(v.x, v.y + v.soff, v.cnt, v.soff, kD1Edge1, 5, s1);
    K.stencil5(v.x + 2 * v.soff, v.y + 2 * v.soff, v.cnt * (v.nlay - 4), v.soff,
               s1, -8.0 * s1, 0.0, 8.0 * s1, -s1);
    const double* xe = v.x + (v.nlay - 1) * v.soff;
    double* ye = v.y + (v.nlay - 1) * v.soff;
    tap_rev(xe, ye - v.soff, v.cnt, v.soff, kD1Edge1, 5, -s1);
    tap_rev(xe, ye, v.cnt, v.soff, kD1Edge0, 5, -s1);
}

void d2_axis(const AxisView& v, double h) {
    const double s2 = 1.0 / (12.0 * h * h);
    const auto& K = kern::kernels();
    tap(v.x, v.y, v.cnt, v.soff, kD2Edge0, 6, s2);
    tap(v.x, v.y + v.soff, v.cnt, v.soff, kD2Edge1, 6, s2);
    K.stencil5(v.x + 2 * v.soff, v.y + 2 * v.soff, v.cnt * (v.nlay - 4), v.soff,
               -s2, 16.0 * s2, -30.0 * s2, 16.0 * s2, -s2);
    const double* xe = v.x + (v.nlay - 1) * v.soff;
    double* ye = v.y + (v.nlay - 1) * v.soff;
    tap_rev(xe, ye - v.soff, v.cnt, v.soff, kD2Edge1, 6, s2);
    tap_rev(xe, ye, v.cnt, v.soff, kD2Edge0, 6, s2);
}

// Along eta the nodes are contiguous, so the interior cannot be fused across
// rows; run the axis helper row by row.
template <typename T>
void eta_deriv(const T* f, T* out, const GridSpec& g, bool second) {
    const int esz = sizeof(T) / sizeof(double);
    for (int i = 0; i < g.N; ++i) {
        AxisView v{reinterpret_cast<const double*>(f + g.idx(i, 0)),
                   reinterpret_cast<double*>(out + g.idx(i, 0)), g.N, esz,
                   static_cast<std::size_t>(esz)};
        second ? d2_axis(v, g.h()) : d1_axis(v, g.h());
    }
}

template <typename T>
void xi_deriv(const T* f, T* out, const GridSpec& g, bool second) {
    const int esz = sizeof(T) / sizeof(double);
    AxisView v{reinterpret_cast<const double*>(f),
               reinterpret_cast<double*>(out), g.N,
               static_cast<std::ptrdiff_t>(esz) * g.N,
               static_cast<std::size_t>(esz) * g.N};
    second ? d2_axis(v, g.h()) : d1_axis(v, g.h());
}

}  // namespace

void d1_xi(const cplx* q, cplx* out, const GridSpec& g) { xi_deriv(q, out, g, false); }
void d1_eta(const cplx* q, cplx* out, const GridSpec& g) { eta_deriv(q, out, g, false); }
void d2_xi(const cplx* q, cplx* out, const GridSpec& g) { xi_deriv(q, out, g, true); }
void d2_eta(const cplx* q, cplx* out, const GridSpec& g) { eta_deriv(q, out, g, true); }
void d1_xi(const double* f, double* out, const GridSpec& g) { xi_deriv(f, out, g, false); }
void d1_eta(const double* f, double* out, const GridSpec& g) { eta_deriv(f, out, g, false); }

void abs2_grid(const cplx* q, double* out, std::size_t n) {
    kern::kernels().abs2(reinterpret_cast<const double*>(q), out, n);
}

namespace {

// 4th-order cumulative integration: per-interval cubic interpolation weights
// (times 24). Interior intervals use the centered 4-point rule; the first and
// last use the one-sided cubic.
constexpr double kCumFirst[4] = {9.0, 19.0, -5.0, 1.0};
constexpr double kCumMid[4] = {-1.0, 13.0, 13.0, -1.0};

}  // namespace

void cumint_xi(const double* f, double* out, const GridSpec& g) {
    const int N = g.N;
    const double w = g.h() / 24.0;
    for (int j = 0; j < N; ++j) out[j] = 0.0;
    for (int j = 0; j < N; ++j) {
        out[g.idx(1, j)] =
            w * (kCumFirst[0] * f[g.idx(0, j)] + kCumFirst[1] * f[g.idx(1, j)] +
                 kCumFirst[2] * f[g.idx(2, j)] + kCumFirst[3] * f[g.idx(3, j)]);
    }
    for (int i = 2; i < N - 1; ++i)
        for (int j = 0; j < N; ++j)
            out[g.idx(i, j)] =
                out[g.idx(i - 1, j)] +
                w * (kCumMid[0] * f[g.idx(i - 2, j)] + kCumMid[1] * f[g.idx(i - 1, j)] +
                     kCumMid[2] * f[g.idx(i, j)] + kCumMid[3] * f[g.idx(i + 1, j)]);
    for (int j = 0; j < N; ++j)
        out[g.idx(N - 1, j)] =
            out[g.idx(N - 2, j)] +
            w * (kCumFirst[3] * f[g.idx(N - 4, j)] + kCumFirst[2] * f[g.idx(N - 3, j)] +
                 kCumFirst[1] * f[g.idx(N - 2, j)] + kCumFirst[0] * f[g.idx(N - 1, j)]);
}

void cumint_eta(const double* f, double* out, const GridSpec& g) {
    const int N = g.N;
    const double w = g.h() / 24.0;
    for (int i = 0; i < N; ++i) {
        const double* r = f + g.idx(i, 0);
        double* o = out + g.idx(i, 0);
        o[0] = 0.0;
        o[1] = w * (kCumFirst[0] * r[0] + kCumFirst[1] * r[1] +
                    kCumFirst[2] * r[2] + kCumFirst[3] * r[3]);
        for (int j = 2; j < N - 1; ++j)
            o[j] = o[j - 1] + w * (kCumMid[0] * r[j - 2] + kCumMid[1] * r[j - 1] +
                                   kCumMid[2] * r[j] + kCumMid[3] * r[j + 1]);
        o[N - 1] = o[N - 2] + w * (kCumFirst[3] * r[N - 4] + kCumFirst[2] * r[N - 3] +
                                   kCumFirst[1] * r[N - 2] + kCumFirst[0] * r[N - 1]);
    }
}

}  // namespace nids::ops

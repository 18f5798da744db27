#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "nids/spectral.hpp"

namespace nids {

/// Uniform square grid on [-L, L]^2, N nodes per axis, stored row-major with
/// eta varying fastest: index(i_xi, i_eta) = i_xi * N + i_eta.
struct GridSpec {
    double L = 10.0;
    int N = 257;

    double h() const { return 2.0 * L / (N - 1); }
    double xi(int i) const { return -L + i * h(); }
    double eta(int j) const { return -L + j * h(); }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * N + j;
    }
    std::size_t size() const { return static_cast<std::size_t>(N) * N; }

    void validate() const {
        if (N < 8) throw std::invalid_argument("GridSpec: N too small for the stencil");
        if (!(L > 0.0)) throw std::invalid_argument("GridSpec: L must be > 0");
    }
};

/// Field values on a grid at a fixed time.
struct FieldSnapshot {
    GridSpec grid;
    double t = 0.0;
    std::vector<cplx> q;
    std::vector<double> U;
    std::vector<double> V;
};

namespace ops {

/// 4th-order spatial derivatives on the full grid; central stencils in the
/// interior, one-sided 4th-order at the two edge layers of each boundary.
void d1_xi(const cplx* q, cplx* out, const GridSpec& g);
void d1_eta(const cplx* q, cplx* out, const GridSpec& g);
void d2_xi(const cplx* q, cplx* out, const GridSpec& g);
void d2_eta(const cplx* q, cplx* out, const GridSpec& g);
void d1_xi(const double* f, double* out, const GridSpec& g);
void d1_eta(const double* f, double* out, const GridSpec& g);

void abs2_grid(const cplx* q, double* out, std::size_t n);

/// Cumulative integral along the axis from the low edge (value 0 there),
/// 4th-order accurate on uniform spacing.
void cumint_xi(const double* f, double* out, const GridSpec& g);
void cumint_eta(const double* f, double* out, const GridSpec& g);

}  // namespace ops

}  // namespace nids

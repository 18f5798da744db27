#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nids/exact.hpp"
#include "nids/spectral.hpp"

namespace nids {

/// Evaluable (G, F) pair for Hirota checks. F is real-valued and positive on
/// the verification domain. The derivative suppliers, when present, return
/// d^it/dt^it d^ix/dxi^ix d^ie/deta^ie of the function at (xi, eta, t); the
/// checks need it <= 1 and ix, ie <= 2.
struct BilinearPair {
    std::function<cplx(double, double, double)> G;
    std::function<double(double, double, double)> F;
    std::function<cplx(int, int, int, double, double, double)> dG;   // optional
    std::function<double(int, int, int, double, double, double)> dF; // optional

    bool analytic() const { return static_cast<bool>(dG) && static_cast<bool>(dF); }
};

/// Bilinear derivative D_t^{mt} D_xi^{nx} D_eta^{pe} G . F at a point,
/// expanded into ordinary partials. Uses analytic derivatives when the pair
/// supplies them, else 4th-order central differences with the given step.
cplx hirota_D(int mt, int nx, int pe, const BilinearPair& pair, double xi,
              double eta, double t, double step);

/// Same operator applied to F . F.
double hirota_D_FF(int mt, int nx, int pe, const BilinearPair& pair, double xi,
                   double eta, double t, double step);

/// Residual of the first Hirota equation at a point. The position-weighted
/// terms multiply the bilinear derivative by the evaluation point's
/// coordinate.
cplx residual_6a(const BilinearPair& pair, double xi, double eta, double t,
                 const NonisoCoefficients& c, double step = 1e-3);

/// Residual of 2 D_xi D_eta F.F = |G|^2 at a point.
double residual_6b(const BilinearPair& pair, double xi, double eta, double t,
                   double step = 1e-3);

/// One-soliton pair: G = e^{chi}, F = 1 + e^{chi + chi* + 2 psi}, with
/// analytic derivatives.
BilinearPair soliton_pair(const SpectralMode& mode);

/// Dromion pair: G = rho e^{chi1 + chi2}, F the four-exponential ansatz, with
/// analytic derivatives.
BilinearPair dromion_pair(const Dromion& d);

/// Per-order residuals of the perturbation hierarchy for the one-soliton
/// inputs, max over the given lattice, each normalized by the magnitude of the
/// terms entering that order. l_rate_delta shifts the growth rate of lR(t)
/// away from omega1; a nonzero shift breaks the product law the truncation
/// relies on and must surface in the order-3 source.
struct EpsilonReport {
    double order1 = 0.0;  // linear equation on g1
    double order2 = 0.0;  // 4 (f2)_xi_eta = g1 g1*
    double order3 = 0.0;  // bilinear source with g3 = 0
    double order4 = 0.0;  // bilinear source with f4 = 0
};

struct Lattice3 {
    std::vector<double> xi, eta, t;
};

EpsilonReport epsilon_order_check(const SpectralMode& mode,
                                  const Lattice3& lattice,
                                  double l_rate_delta = 0.0);

}  // namespace nids

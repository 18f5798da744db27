#pragma once

#include <complex>
#include <stdexcept>

#include "nids/coeffs.hpp"

namespace nids {

using cplx = std::complex<double>;

/// Which accumulated phase integral to form.
///   FullPlaneWave     : Omega = i(k^2 + l^2) + a1(k - l) + omega1
///   FactoredDromionXi : Omega1 = i k^2 + a1 k   (xi-factor of the dromion)
///   FactoredDromionEta: Omega2 = i l^2 - a1 l   (eta-factor of the dromion)
enum class PhaseVariant { FullPlaneWave, FactoredDromionXi, FactoredDromionEta };

/// One complex spectral pair (k(t), l(t)) with its integration constants and
/// the coefficients that drive their evolution.
///
/// For omega1 != 0:
///   kR(t) = kR0 e^{omega1 t},  kI(t) = kI0 e^{omega1 t} - omega0/omega1
/// and the omega1 = 0 limit (solved directly from the evolution equation):
///   kR(t) = kR0,               kI(t) = kI0 + omega0 t.
/// Note kI0 is an integration constant, not the value at t = 0; see
/// integration_constant_for_value_at_t0.
struct SpectralMode {
    double kR0, kI0, lR0, lI0;
    NonisoCoefficients coeffs;

    SpectralMode(double kR0_, double kI0_, double lR0_, double lI0_,
                 NonisoCoefficients c)
        : kR0(kR0_), kI0(kI0_), lR0(lR0_), lI0(lI0_), coeffs(c) {
        coeffs.validate();
        if (!(kR0 > 0.0) || !(lR0 > 0.0))
            throw std::invalid_argument("SpectralMode: kR0 and lR0 must be > 0");
    }
};

/// Converts a desired imaginary-part value at t = 0 into the integration
/// constant expected by SpectralMode.
double integration_constant_for_value_at_t0(double value_at_t0,
                                            const NonisoCoefficients& c);

cplx evolve_k(const SpectralMode& m, double t);
cplx evolve_l(const SpectralMode& m, double t);

/// d k / dt and d l / dt of the closed forms above.
cplx evolve_k_dot(const SpectralMode& m, double t);
cplx evolve_l_dot(const SpectralMode& m, double t);

double kR_of(const SpectralMode& m, double t);
double lR_of(const SpectralMode& m, double t);

/// Omega(k, l) solving  i Omega + k^2 + l^2 - i a1 (k - l) - i omega1 = 0.
cplx dispersion(cplx k, cplx l, const NonisoCoefficients& c);

/// Closed-form \int_0^t Omega(s) ds for the chosen variant.
cplx accumulated_phase(const SpectralMode& m, double t, PhaseVariant v);

/// chi at a spacetime point. FullPlaneWave: k(t) xi + l(t) eta + int Omega dt.
/// FactoredDromionXi drops the eta term; FactoredDromionEta drops the xi term.
cplx chi(const SpectralMode& m, double xi, double eta, double t, PhaseVariant v);

/// Time derivative of chi (used by analytic-residual oracles).
cplx chi_dot(const SpectralMode& m, double xi, double eta, double t, PhaseVariant v);

/// Omega(t) along the mode, for the chosen variant.
cplx omega_of(const SpectralMode& m, double t, PhaseVariant v);

}  // namespace nids

#include "nids/spectral.hpp"

#include <cmath>

namespace nids {

namespace {
const cplx I(0.0, 1.0);

// \int_0^t k(s) ds for one pair with integration constants (R0, I0).
cplx int_k(double R0, double I0, const NonisoCoefficients& c, double t) {
    const cplx K0(R0, I0);
    if (c.omega1 == 0.0)
        return K0 * t + I * (0.5 * c.omega0 * t * t);
    const double w = c.omega1;
    return K0 * std::expm1(w * t) / w - I * (c.omega0 / w) * t;
}

// \int_0^t k(s)^2 ds.
cplx int_k2(double R0, double I0, const NonisoCoefficients& c, double t) {
    const cplx K0(R0, I0);
    if (c.omega1 == 0.0)
        return K0 * K0 * t + I * (K0 * (c.omega0 * t * t)) -
               c.omega0 * c.omega0 * t * t * t / 3.0;
    const double w = c.omega1;
    return K0 * K0 * std::expm1(2.0 * w * t) / (2.0 * w) -
           2.0 * I * K0 * (c.omega0 / (w * w)) * std::expm1(w * t) -
           (c.omega0 * c.omega0 / (w * w)) * t;
}

cplx pair_value(double R0, double I0, const NonisoCoefficients& c, double t) {
    if (c.omega1 == 0.0) return {R0, I0 + c.omega0 * t};
    const double e = std::exp(c.omega1 * t);
    return {R0 * e, I0 * e - c.omega0 / c.omega1};
}

cplx pair_dot(double R0, double I0, const NonisoCoefficients& c, double t) {
    if (c.omega1 == 0.0) return {0.0, c.omega0};
    const double e = std::exp(c.omega1 * t);
    return {c.omega1 * R0 * e, c.omega1 * I0 * e};
}
}  // namespace

double integration_constant_for_value_at_t0(double value_at_t0,
                                            const NonisoCoefficients& c) {
    if (c.omega1 == 0.0) return value_at_t0;
    return value_at_t0 + c.omega0 / c.omega1;
}

cplx evolve_k(const SpectralMode& m, double t) {
    return pair_value(m.kR0, m.kI0, m.coeffs, t);
}
cplx evolve_l(const SpectralMode& m, double t) {
    return pair_value(m.lR0, m.lI0, m.coeffs, t);
}
cplx evolve_k_dot(const SpectralMode& m, double t) {
    return pair_dot(m.kR0, m.kI0, m.coeffs, t);
}
cplx evolve_l_dot(const SpectralMode& m, double t) {
    return pair_dot(m.lR0, m.lI0, m.coeffs, t);
}

double kR_of(const SpectralMode& m, double t) {
    return m.kR0 * std::exp(m.coeffs.omega1 * t);
}
double lR_of(const SpectralMode& m, double t) {
    return m.lR0 * std::exp(m.coeffs.omega1 * t);
}

cplx dispersion(cplx k, cplx l, const NonisoCoefficients& c) {
    return I * (k * k + l * l) + c.a1 * (k - l) + c.omega1;
}

cplx accumulated_phase(const SpectralMode& m, double t, PhaseVariant v) {
    const auto& c = m.coeffs;
    switch (v) {
        case PhaseVariant::FactoredDromionXi:
            return I * int_k2(m.kR0, m.kI0, c, t) + c.a1 * int_k(m.kR0, m.kI0, c, t);
        case PhaseVariant::FactoredDromionEta:
            return I * int_k2(m.lR0, m.lI0, c, t) - c.a1 * int_k(m.lR0, m.lI0, c, t);
        case PhaseVariant::FullPlaneWave:
        default:
            return I * (int_k2(m.kR0, m.kI0, c, t) + int_k2(m.lR0, m.lI0, c, t)) +
                   c.a1 * (int_k(m.kR0, m.kI0, c, t) - int_k(m.lR0, m.lI0, c, t)) +
                   c.omega1 * t;
    }
}

cplx omega_of(const SpectralMode& m, double t, PhaseVariant v) {
    const cplx k = evolve_k(m, t);
    const cplx l = evolve_l(m, t);
    switch (v) {
        case PhaseVariant::FactoredDromionXi:
            return I * k * k + m.coeffs.a1 * k;
        case PhaseVariant::FactoredDromionEta:
            return I * l * l - m.coeffs.a1 * l;
        case PhaseVariant::FullPlaneWave:
        default:
            return dispersion(k, l, m.coeffs);
    }
}

cplx chi(const SpectralMode& m, double xi, double eta, double t, PhaseVariant v) {
    switch (v) {
        case PhaseVariant::FactoredDromionXi:
            return evolve_k(m, t) * xi + accumulated_phase(m, t, v);
        case PhaseVariant::FactoredDromionEta:
            return evolve_l(m, t) * eta + accumulated_phase(m, t, v);
        case PhaseVariant::FullPlaneWave:
        default:
            return evolve_k(m, t) * xi + evolve_l(m, t) * eta +
                   accumulated_phase(m, t, v);
    }
}

cplx chi_dot(const SpectralMode& m, double xi, double eta, double t,
             PhaseVariant v) {
    switch (v) {
        case PhaseVariant::FactoredDromionXi:
            return evolve_k_dot(m, t) * xi + omega_of(m, t, v);
        case PhaseVariant::FactoredDromionEta:
            return evolve_l_dot(m, t) * eta + omega_of(m, t, v);
        case PhaseVariant::FullPlaneWave:
        default:
            return evolve_k_dot(m, t) * xi + evolve_l_dot(m, t) * eta +
                   omega_of(m, t, v);
    }
}

}  // namespace nids

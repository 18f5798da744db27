#include "nids/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace nids {

namespace {
const cplx I(0.0, 1.0);
}

double LineSoliton::psi(double t) const {
    return -0.5 * std::log(16.0 * kR_of(mode_, t) * lR_of(mode_, t));
}

double LineSoliton::peak_value(double t) const {
    return 2.0 * std::sqrt(kR_of(mode_, t) * lR_of(mode_, t));
}

PointFields LineSoliton::eval(double xi, double eta, double t) const {
    const cplx ch = chi(mode_, xi, eta, t, PhaseVariant::FullPlaneWave);
    const double kR = kR_of(mode_, t);
    const double lR = lR_of(mode_, t);
    const double w = ch.real() + psi(t);
    const double sech = 1.0 / std::cosh(w);
    const double amp = 2.0 * std::sqrt(kR * lR);

    PointFields f;
    f.q = amp * sech * std::exp(I * ch.imag());
    f.U = 2.0 * lR * lR * sech * sech;
    f.V = 2.0 * kR * kR * sech * sech;

    // d/dt of amp is omega1*amp, d/dt of psi is -omega1.
    const cplx chd = chi_dot(mode_, xi, eta, t, PhaseVariant::FullPlaneWave);
    const double w_dot = chd.real() - mode_.coeffs.omega1;
    f.q_t = f.q * (mode_.coeffs.omega1 - std::tanh(w) * w_dot + I * chd.imag());
    return f;
}

Dromion::Dromion(double alpha, double beta, double gamma, double delta,
                 SpectralMode mode)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta),
      mode_(std::move(mode)) {
    if (alpha_ < 0.0 || beta_ < 0.0)
        throw std::invalid_argument("Dromion: alpha, beta must be >= 0");
    if (!(gamma_ > 0.0) || !(delta_ > 0.0))
        throw std::invalid_argument("Dromion: gamma, delta must be > 0");
    if (!(delta_ * gamma_ - alpha_ * beta_ > 0.0))
        throw std::invalid_argument(
            "Dromion: degenerate amplitude, need delta*gamma > alpha*beta");
    rho0_ = std::sqrt(16.0 * mode_.kR0 * mode_.lR0 *
                      (delta_ * gamma_ - alpha_ * beta_));
}

double Dromion::rho(double t) const {
    return rho0_ * std::exp(mode_.coeffs.omega1 * t);
}

double Dromion::peak_value(double t) const {
    return rho(t) /
           (2.0 * (std::sqrt(delta_ * gamma_) + std::sqrt(alpha_ * beta_)));
}

PointFields Dromion::eval(double xi, double eta, double t) const {
    const cplx ch1 = chi(mode_, xi, eta, t, PhaseVariant::FactoredDromionXi);
    const cplx ch2 = chi(mode_, xi, eta, t, PhaseVariant::FactoredDromionEta);
    const double X = 2.0 * ch1.real();
    const double Y = 2.0 * ch2.real();
    const double phi = ch1.imag() + ch2.imag();
    const double kR = kR_of(mode_, t);
    const double lR = lR_of(mode_, t);

    // Overflow-safe evaluation: divide through by e^{s+r}.
    const double s = std::max(0.0, X);
    const double r = std::max(0.0, Y);
    const double exs = std::exp(X - s);    // alpha-term factor, <= 1
    const double eyr = std::exp(Y - r);    // beta-term factor, <= 1
    const double e0 = std::exp(-s - r);
    const double Ft = delta_ * e0 + alpha_ * exs * std::exp(-r) +
                      beta_ * eyr * std::exp(-s) + gamma_ * exs * eyr;

    PointFields f;
    f.q = rho(t) * std::exp(0.5 * (X + Y) - s - r) * std::exp(I * phi) / Ft;

    const double es = std::exp(-s);
    const double er = std::exp(-r);
    const double A = beta_ * es + gamma_ * exs;    // (beta + gamma e^X) e^{-s}
    const double B = delta_ * es + alpha_ * exs;   // (delta + alpha e^X) e^{-s}
    const double C = alpha_ * er + gamma_ * eyr;   // (alpha + gamma e^Y) e^{-r}
    const double D = delta_ * er + beta_ * eyr;    // (delta + beta e^Y) e^{-r}
    f.U = 8.0 * lR * lR * A * B * std::exp(Y - 2.0 * r) / (Ft * Ft);
    f.V = 8.0 * kR * kR * C * D * std::exp(X - 2.0 * s) / (Ft * Ft);

    const cplx ch1d = chi_dot(mode_, xi, eta, t, PhaseVariant::FactoredDromionXi);
    const cplx ch2d = chi_dot(mode_, xi, eta, t, PhaseVariant::FactoredDromionEta);
    const double Xd = 2.0 * ch1d.real();
    const double Yd = 2.0 * ch2d.real();
    const double Ft_dot = alpha_ * Xd * exs * std::exp(-r) +
                          beta_ * Yd * eyr * std::exp(-s) +
                          gamma_ * (Xd + Yd) * exs * eyr;
    f.q_t = f.q * (mode_.coeffs.omega1 + ch1d + ch2d - Ft_dot / Ft);
    return f;
}

cplx Dromion::q(double xi, double eta, double t) const {
    return eval(xi, eta, t).q;
}

double Dromion::boundary_u1(double xi, double t) const {
    const cplx ch1 = chi(mode_, xi, 0.0, t, PhaseVariant::FactoredDromionXi);
    const double X = 2.0 * ch1.real();
    const double s = std::max(0.0, X);
    const double kR = kR_of(mode_, t);
    const double den = delta_ * std::exp(-s) + alpha_ * std::exp(X - s);
    return 8.0 * kR * kR * alpha_ * delta_ * std::exp(X - 2.0 * s) / (den * den);
}

double Dromion::boundary_u2(double eta, double t) const {
    const cplx ch2 = chi(mode_, 0.0, eta, t, PhaseVariant::FactoredDromionEta);
    const double Y = 2.0 * ch2.real();
    const double r = std::max(0.0, Y);
    const double lR = lR_of(mode_, t);
    const double den = delta_ * std::exp(-r) + beta_ * std::exp(Y - r);
    return 8.0 * lR * lR * beta_ * delta_ * std::exp(Y - 2.0 * r) / (den * den);
}

double gauge_phase(double xi, double eta, double t,
                   const NonisoCoefficients& c) {
    return 0.25 * c.omega1 * (xi * xi + eta * eta) +
           0.5 * c.a1 * (xi - eta) + 0.5 * c.a1 * c.a1 * t;
}

GaugedPoint gauge_to_isospectral(cplx q, double U, double V, double xi,
                                 double eta, double t,
                                 const NonisoCoefficients& c) {
    GaugedPoint g;
    g.q_hat = q * std::exp(-I * gauge_phase(xi, eta, t, c));
    g.U_hat = U + 0.25 * c.omega1 * c.omega1 * eta * eta -
              (0.5 * c.a1 * c.omega1 - c.omega0) * eta;
    g.V_hat = V + 0.25 * c.omega1 * c.omega1 * xi * xi +
              (0.5 * c.a1 * c.omega1 + c.omega0) * xi;
    return g;
}

cplx gauge_q_hat_t(cplx q, cplx q_t, double xi, double eta, double t,
                   const NonisoCoefficients& c) {
    const double phi_t = 0.5 * c.a1 * c.a1;
    return (q_t - I * phi_t * q) * std::exp(-I * gauge_phase(xi, eta, t, c));
}

}  // namespace nids

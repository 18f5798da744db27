#pragma once

#include <complex>

#include "nids/spectral.hpp"

namespace nids {

/// Field values of one exact solution at a spacetime point. q_t is the
/// analytic time derivative, used by residual and integrator oracles.
struct PointFields {
    cplx q;
    double U;
    double V;
    cplx q_t;
};

/// Line soliton: q = 2 sqrt(kR lR) sech(chiR + psi) e^{i chiI} with the full
/// plane-wave phase, e^{2 psi} = 1/(16 kR lR). The potentials follow from
/// U = 2 d^2/deta^2 log F, V = 2 d^2/dxi^2 log F with F = 1 + e^{2(chiR+psi)},
/// giving U = 2 lR^2 sech^2, V = 2 kR^2 sech^2.
class LineSoliton {
  public:
    explicit LineSoliton(SpectralMode mode) : mode_(std::move(mode)) {}

    const SpectralMode& mode() const { return mode_; }

    double psi(double t) const;
    PointFields eval(double xi, double eta, double t) const;

    /// Peak of |q| over the plane at time t: 2 sqrt(kR(t) lR(t)).
    double peak_value(double t) const;

  private:
    SpectralMode mode_;
};

/// (1,1) dromion: q = rho(t) e^{chi1+chi2} / F with the factored phases and
/// F = delta + alpha e^{X} + beta e^{Y} + gamma e^{X+Y},  X = chi1 + chi1*,
/// Y = chi2 + chi2*. rho(t)^2 = 16 kR(t) lR(t) (delta gamma - alpha beta),
/// equivalently rho = rho0 e^{omega1 t}.
class Dromion {
  public:
    Dromion(double alpha, double beta, double gamma, double delta,
            SpectralMode mode);

    const SpectralMode& mode() const { return mode_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }

    double rho(double t) const;
    double rho0() const { return rho0_; }

    PointFields eval(double xi, double eta, double t) const;
    cplx q(double xi, double eta, double t) const;

    /// Analytic max of |q| over the plane at time t:
    /// rho(t) / (2 (sqrt(delta gamma) + sqrt(alpha beta))).
    double peak_value(double t) const;

    /// Inflow boundary data: u1(xi, t) = lim_{eta -> -inf} V,
    /// u2(eta, t) = lim_{xi -> -inf} U.
    double boundary_u1(double xi, double t) const;
    double boundary_u2(double eta, double t) const;

  private:
    double alpha_, beta_, gamma_, delta_;
    SpectralMode mode_;
    double rho0_;
};

/// Pointwise gauge map onto the isospectral DSI variables. coeffs with all
/// entries zero is the identity. phase(xi, eta, t) is the real phase phi with
/// q_hat = q e^{-i phi}.
struct GaugedPoint {
    cplx q_hat;
    double U_hat;
    double V_hat;
};

double gauge_phase(double xi, double eta, double t, const NonisoCoefficients& c);

GaugedPoint gauge_to_isospectral(cplx q, double U, double V, double xi,
                                 double eta, double t,
                                 const NonisoCoefficients& c);

/// Time derivative of q_hat given q and its analytic q_t.
cplx gauge_q_hat_t(cplx q, cplx q_t, double xi, double eta, double t,
                   const NonisoCoefficients& c);

}  // namespace nids

#include "nids/bilinear.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nids {

namespace {

const cplx I(0.0, 1.0);

constexpr std::array<std::array<int, 3>, 3> kBinom = {{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}};

// Ordinary partial of order (it, ix, ie) via 4th-order central differences.
template <typename Fn, typename R>
R fd_partial(const Fn& f, int it, int ix, int ie, double xi, double eta,
             double t, double h) {
    if (it > 0) {
        auto g = [&](double tt) {
            return fd_partial<Fn, R>(f, 0, ix, ie, xi, eta, tt, h);
        };
        return (-g(t + 2 * h) + 8.0 * g(t + h) - 8.0 * g(t - h) + g(t - 2 * h)) /
               (12.0 * h);
    }
    if (ix > 0) {
        auto g = [&](double x) {
            return fd_partial<Fn, R>(f, 0, 0, ie, x, eta, t, h);
        };
        if (ix == 2)
            return (-g(xi + 2 * h) + 16.0 * g(xi + h) - 30.0 * g(xi) +
                    16.0 * g(xi - h) - g(xi - 2 * h)) /
                   (12.0 * h * h);
        return (-g(xi + 2 * h) + 8.0 * g(xi + h) - 8.0 * g(xi - h) +
                g(xi - 2 * h)) /
               (12.0 * h);
    }
    if (ie > 0) {
        auto g = [&](double e) { return f(xi, e, t); };
        if (ie == 2)
            return (-g(eta + 2 * h) + 16.0 * g(eta + h) - 30.0 * g(eta) +
                    16.0 * g(eta - h) - g(eta - 2 * h)) /
                   (12.0 * h * h);
        return (-g(eta + 2 * h) + 8.0 * g(eta + h) - 8.0 * g(eta - h) +
                g(eta - 2 * h)) /
               (12.0 * h);
    }
    return f(xi, eta, t);
}

cplx partial_G(const BilinearPair& p, int it, int ix, int ie, double xi,
               double eta, double t, double h) {
    if (p.dG) return p.dG(it, ix, ie, xi, eta, t);
    return fd_partial<decltype(p.G), cplx>(p.G, it, ix, ie, xi, eta, t, h);
}

double partial_F(const BilinearPair& p, int it, int ix, int ie, double xi,
                 double eta, double t, double h) {
    if (p.dF) return p.dF(it, ix, ie, xi, eta, t);
    return fd_partial<decltype(p.F), double>(p.F, it, ix, ie, xi, eta, t, h);
}

void check_orders(int mt, int nx, int pe, double step) {
    if (mt < 0 || mt > 1 || nx < 0 || nx > 2 || pe < 0 || pe > 2)
        throw std::invalid_argument("hirota_D: orders limited to t<=1, xi<=2, eta<=2");
    if (!(step > 0.0)) throw std::invalid_argument("hirota_D: step must be > 0");
}

// Analytic partial of c(t) e^{A}, A = a xi + b eta + phase(t).
cplx exp_partial(int it, int ix, int ie, cplx value, cplx a, cplx b, cplx A_dot,
                 cplx a_dot, cplx b_dot) {
    cplx pw = 1.0;
    for (int j = 0; j < ix; ++j) pw *= a;
    for (int j = 0; j < ie; ++j) pw *= b;
    if (it == 0) return value * pw;
    cplx corr = A_dot * pw;
    if (ix == 1) corr += a_dot * (ie ? b : cplx(1.0));
    if (ix == 2) corr += 2.0 * a * a_dot * (ie ? b : cplx(1.0));
    if (ie == 1) corr += (ix == 1 ? a : (ix == 2 ? a * a : cplx(1.0))) * b_dot;
    if (ie == 2) corr += (ix ? a : cplx(1.0)) * 2.0 * b * b_dot;
    return value * corr;
}

}  // namespace

cplx hirota_D(int mt, int nx, int pe, const BilinearPair& pair, double xi,
              double eta, double t, double step) {
    check_orders(mt, nx, pe, step);
    cplx sum = 0.0;
    for (int i = 0; i <= mt; ++i)
        for (int j = 0; j <= nx; ++j)
            for (int r = 0; r <= pe; ++r) {
                const int sign = ((mt - i) + (nx - j) + (pe - r)) % 2 ? -1 : 1;
                const double coef = sign * kBinom[mt][i] * kBinom[nx][j] * kBinom[pe][r];
                sum += coef * partial_G(pair, i, j, r, xi, eta, t, step) *
                       partial_F(pair, mt - i, nx - j, pe - r, xi, eta, t, step);
            }
    return sum;
}

double hirota_D_FF(int mt, int nx, int pe, const BilinearPair& pair, double xi,
                   double eta, double t, double step) {
    check_orders(mt, nx, pe, step);
    double sum = 0.0;
    for (int i = 0; i <= mt; ++i)
        for (int j = 0; j <= nx; ++j)
            for (int r = 0; r <= pe; ++r) {
                const int sign = ((mt - i) + (nx - j) + (pe - r)) % 2 ? -1 : 1;
                const double coef = sign * kBinom[mt][i] * kBinom[nx][j] * kBinom[pe][r];
                sum += coef * partial_F(pair, i, j, r, xi, eta, t, step) *
                       partial_F(pair, mt - i, nx - j, pe - r, xi, eta, t, step);
            }
    return sum;
}

cplx residual_6a(const BilinearPair& pair, double xi, double eta, double t,
                 const NonisoCoefficients& c, double step) {
    const cplx Dt = hirota_D(1, 0, 0, pair, xi, eta, t, step);
    const cplx Dxx = hirota_D(0, 2, 0, pair, xi, eta, t, step);
    const cplx Dee = hirota_D(0, 0, 2, pair, xi, eta, t, step);
    const cplx Dx = hirota_D(0, 1, 0, pair, xi, eta, t, step);
    const cplx De = hirota_D(0, 0, 1, pair, xi, eta, t, step);
    const cplx GF = pair.G(xi, eta, t) * pair.F(xi, eta, t);
    return I * Dt + Dxx + Dee - I * c.omega1 * (xi * Dx + eta * De) -
           I * c.a1 * (Dx - De) + (c.omega0 * (xi + eta) - I * c.omega1) * GF;
}

double residual_6b(const BilinearPair& pair, double xi, double eta, double t,
                   double step) {
    const double D = hirota_D_FF(0, 1, 1, pair, xi, eta, t, step);
    const cplx g = pair.G(xi, eta, t);
    return 2.0 * D - std::norm(g);
}

BilinearPair soliton_pair(const SpectralMode& mode) {
    BilinearPair p;
    p.G = [mode](double xi, double eta, double t) {
        return std::exp(chi(mode, xi, eta, t, PhaseVariant::FullPlaneWave));
    };
    p.dG = [mode](int it, int ix, int ie, double xi, double eta, double t) {
        const cplx k = evolve_k(mode, t);
        const cplx l = evolve_l(mode, t);
        const cplx val = std::exp(chi(mode, xi, eta, t, PhaseVariant::FullPlaneWave));
        return exp_partial(it, ix, ie, val, k, l,
                           chi_dot(mode, xi, eta, t, PhaseVariant::FullPlaneWave),
                           evolve_k_dot(mode, t), evolve_l_dot(mode, t));
    };
    auto theta = [mode](double xi, double eta, double t) {
        const cplx ch = chi(mode, xi, eta, t, PhaseVariant::FullPlaneWave);
        return 2.0 * ch.real() - std::log(16.0 * kR_of(mode, t) * lR_of(mode, t));
    };
    p.F = [theta](double xi, double eta, double t) {
        return 1.0 + std::exp(theta(xi, eta, t));
    };
    p.dF = [mode, theta](int it, int ix, int ie, double xi, double eta, double t) {
        const double val = std::exp(theta(xi, eta, t));
        const double kR = kR_of(mode, t);
        const double lR = lR_of(mode, t);
        const cplx chd = chi_dot(mode, xi, eta, t, PhaseVariant::FullPlaneWave);
        const double w1 = mode.coeffs.omega1;
        // d theta/dt = 2 Re(chi_dot) + 2 psi_dot, psi_dot = -omega1.
        const cplx d = exp_partial(it, ix, ie, val, 2.0 * kR, 2.0 * lR,
                                   2.0 * chd.real() - 2.0 * w1,
                                   2.0 * w1 * kR, 2.0 * w1 * lR);
        double out = d.real();
        if (it == 0 && ix == 0 && ie == 0) out += 1.0;
        return out;
    };
    return p;
}

BilinearPair dromion_pair(const Dromion& d) {
    const SpectralMode mode = d.mode();
    const double al = d.alpha(), be = d.beta(), ga = d.gamma(), de = d.delta();
    BilinearPair p;
    auto phases = [mode](double xi, double eta, double t) {
        return std::pair<cplx, cplx>(
            chi(mode, xi, eta, t, PhaseVariant::FactoredDromionXi),
            chi(mode, xi, eta, t, PhaseVariant::FactoredDromionEta));
    };
    p.G = [d, phases](double xi, double eta, double t) {
        auto [c1, c2] = phases(xi, eta, t);
        return d.rho(t) * std::exp(c1 + c2);
    };
    p.dG = [d, mode, phases](int it, int ix, int ie, double xi, double eta,
                             double t) {
        auto [c1, c2] = phases(xi, eta, t);
        const cplx val = d.rho(t) * std::exp(c1 + c2);
        const cplx c1d = chi_dot(mode, xi, eta, t, PhaseVariant::FactoredDromionXi);
        const cplx c2d = chi_dot(mode, xi, eta, t, PhaseVariant::FactoredDromionEta);
        return exp_partial(it, ix, ie, val, evolve_k(mode, t), evolve_l(mode, t),
                           mode.coeffs.omega1 + c1d + c2d,
                           evolve_k_dot(mode, t), evolve_l_dot(mode, t));
    };
    p.F = [al, be, ga, de, phases](double xi, double eta, double t) {
        auto [c1, c2] = phases(xi, eta, t);
        const double X = 2.0 * c1.real();
        const double Y = 2.0 * c2.real();
        return de + al * std::exp(X) + be * std::exp(Y) + ga * std::exp(X + Y);
    };
    p.dF = [al, be, ga, mode, de, phases](int it, int ix, int ie, double xi,
                                          double eta, double t) {
        auto [c1, c2] = phases(xi, eta, t);
        const double X = 2.0 * c1.real();
        const double Y = 2.0 * c2.real();
        const double kR2 = 2.0 * kR_of(mode, t);
        const double lR2 = 2.0 * lR_of(mode, t);
        const double w1 = mode.coeffs.omega1;
        const double Xd =
            2.0 * chi_dot(mode, xi, eta, t, PhaseVariant::FactoredDromionXi).real();
        const double Yd =
            2.0 * chi_dot(mode, xi, eta, t, PhaseVariant::FactoredDromionEta).real();
        cplx sum =
            exp_partial(it, ix, ie, al * std::exp(X), kR2, 0.0, Xd, w1 * kR2, 0.0) +
            exp_partial(it, ix, ie, be * std::exp(Y), 0.0, lR2, Yd, 0.0, w1 * lR2) +
            exp_partial(it, ix, ie, ga * std::exp(X + Y), kR2, lR2, Xd + Yd,
                        w1 * kR2, w1 * lR2);
        double out = sum.real();
        if (it == 0 && ix == 0 && ie == 0) out += de;
        return out;
    };
    return p;
}

namespace {

// Spectral pair evolution with an optional rate shift on lR, used by the
// truncation check's negative control. Accumulated dispersion phase is done
// by Gauss-Legendre quadrature so the shifted case needs no new closed forms.
struct ShiftedMode {
    SpectralMode base;
    double delta;

    cplx k(double t) const { return evolve_k(base, t); }
    cplx k_dot(double t) const { return evolve_k_dot(base, t); }
    double lR(double t) const {
        return base.lR0 * std::exp((base.coeffs.omega1 + delta) * t);
    }
    cplx l(double t) const {
        const cplx l0 = evolve_l(base, t);
        return {lR(t), l0.imag()};
    }
    cplx l_dot(double t) const {
        const cplx l0d = evolve_l_dot(base, t);
        return {(base.coeffs.omega1 + delta) * lR(t), l0d.imag()};
    }
    cplx omega(double t) const { return dispersion(k(t), l(t), base.coeffs); }

    cplx int_omega(double t) const {
        // 24-point Gauss-Legendre on [0, t].
        static const double xs[12] = {
            0.0640568928626056, 0.1911188674736163, 0.3150426796961634,
            0.4337935076260451, 0.5454214713888396, 0.6480936519369755,
            0.7401241915785544, 0.8200019859739029, 0.8864155270044011,
            0.9382745520027328, 0.9747285559713095, 0.9951872199970213};
        static const double ws[12] = {
            0.1279381953467522, 0.1258374563468283, 0.1216704729278034,
            0.1155056680537256, 0.1074442701159656, 0.0976186521041139,
            0.0861901615319533, 0.0733464814110803, 0.0592985849154368,
            0.0442774388174198, 0.0285313886289337, 0.0123412297999872};
        const double c = 0.5 * t;
        cplx s = 0.0;
        for (int i = 0; i < 12; ++i) {
            s += ws[i] * (omega(c * (1.0 + xs[i])) + omega(c * (1.0 - xs[i])));
        }
        return c * s;
    }
};

}  // namespace

EpsilonReport epsilon_order_check(const SpectralMode& mode,
                                  const Lattice3& lattice, double l_rate_delta) {
    const ShiftedMode sm{mode, l_rate_delta};
    const auto& c = mode.coeffs;
    EpsilonReport rep;

    for (double t : lattice.t) {
        const cplx k = sm.k(t), l = sm.l(t);
        const cplx kd = sm.k_dot(t), ld = sm.l_dot(t);
        const cplx Om = sm.omega(t);
        const cplx iOm = sm.int_omega(t);
        const double kR = k.real(), lR = sm.lR(t);
        const double psi = -0.5 * std::log(16.0 * kR * lR);
        const double psi_dot_exact =
            -0.5 * (2.0 * c.omega1 + l_rate_delta);  // from the closed forms

        for (double xi : lattice.xi)
            for (double eta : lattice.eta) {
                const cplx ch = k * xi + l * eta + iOm;
                const cplx g = std::exp(ch);
                const cplx ch_dot = kd * xi + ld * eta + Om;

                // Order eps: linear operator on g1 (ordinary derivatives).
                const cplx r1 = I * ch_dot + k * k + l * l -
                                I * c.omega1 * (xi * k + eta * l) -
                                I * c.a1 * (k - l) +
                                (c.omega0 * (xi + eta) - I * c.omega1);
                rep.order1 = std::max(rep.order1, std::abs(r1));

                // Order eps^2: 4 (f2)_xi_eta = g1 g1*.
                const double theta = 2.0 * ch.real() + 2.0 * psi;
                const double f2 = std::exp(theta);
                const double r2 =
                    (4.0 * (2.0 * kR) * (2.0 * lR) * f2 - std::norm(g)) /
                    std::norm(g);
                rep.order2 = std::max(rep.order2, std::abs(r2));

                // Order eps^3 with g3 = 0: bilinear operator on g1 . f2,
                // evaluated from the exponential-pair closed form.
                const cplx a = k - 2.0 * kR;   // A_xi - B_xi = -k*
                const cplx b = l - 2.0 * lR;
                const cplx dphase =
                    ch_dot - (2.0 * ch_dot.real() + 2.0 * psi_dot_exact);
                const cplx r3 = I * dphase + a * a + b * b -
                                I * c.omega1 * (xi * a + eta * b) -
                                I * c.a1 * (a - b) +
                                (c.omega0 * (xi + eta) - I * c.omega1);
                rep.order3 = std::max(rep.order3, std::abs(r3));
            }
    }

    // Order eps^4 with f4 = 0, g3 = 0: source is 2 D_xi D_eta f2 . f2, which
    // vanishes identically for identical exponentials.
    rep.order4 = 0.0;
    return rep;
}

}  // namespace nids

#include "nids/residual.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nids {

namespace {
const cplx I(0.0, 1.0);

void accumulate(PerEquation& eq, double mag, double h) {
    eq.max_norm = std::max(eq.max_norm, mag);
    eq.l2_norm += mag * mag * h * h;  // finalized by sqrt later
}

void finalize(PerEquation& eq) { eq.l2_norm = std::sqrt(eq.l2_norm); }
}  // namespace

std::string ResidualReport::text() const {
    std::ostringstream os;
    os.precision(6);
    os << "residual report (grid N=" << grid.N << ", L=" << grid.L
       << ", stencil order " << stencil_order << ")\n"
       << "  evolution    max " << evolution.max_norm << "  l2 " << evolution.l2_norm
       << "\n  U constraint max " << u_constraint.max_norm << "  l2 "
       << u_constraint.l2_norm << "\n  V constraint max " << v_constraint.max_norm
       << "  l2 " << v_constraint.l2_norm << "\n  overall      max " << max_norm
       << "  l2 " << l2_norm << "\n";
    if (observed_order)
        os << "  observed convergence order " << *observed_order << "\n";
    return os.str();
}

std::string ResidualReport::machine() const {
    std::ostringstream os;
    os.precision(17);
    os << "max_norm = " << max_norm << "\nl2_norm = " << l2_norm
       << "\nevolution_max = " << evolution.max_norm
       << "\nu_constraint_max = " << u_constraint.max_norm
       << "\nv_constraint_max = " << v_constraint.max_norm
       << "\ngrid_N = " << grid.N << "\ngrid_L = " << grid.L
       << "\nstencil_order = " << stencil_order << "\n";
    if (observed_order) os << "observed_order = " << *observed_order << "\n";
    return os.str();
}

double reconstruct_potentials(const GridSpec& g, const std::vector<cplx>& q,
                              double t, const BoundaryData& b,
                              std::vector<double>& U, std::vector<double>& V,
                              double edge_floor) {
    g.validate();
    const int N = g.N;
    std::vector<double> a2(g.size());
    ops::abs2_grid(q.data(), a2.data(), g.size());

    double peak = 0.0, edge = 0.0;
    for (auto v : a2) peak = std::max(peak, v);
    for (int j = 0; j < N; ++j) edge = std::max(edge, a2[g.idx(0, j)]);
    for (int i = 0; i < N; ++i) edge = std::max(edge, a2[g.idx(i, 0)]);
    if (peak > 0.0 && edge > edge_floor * peak)
        throw TruncationError(edge, edge_floor * peak);

    std::vector<double> d(g.size()), cum(g.size());
    U.assign(g.size(), 0.0);
    V.assign(g.size(), 0.0);

    std::vector<double> u2row(N), u1col(N);
    for (int j = 0; j < N; ++j) u2row[j] = b.u2(g.eta(j), t);
    for (int i = 0; i < N; ++i) u1col[i] = b.u1(g.xi(i), t);

    ops::d1_eta(a2.data(), d.data(), g);
    ops::cumint_xi(d.data(), cum.data(), g);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            U[g.idx(i, j)] = u2row[j] + 0.5 * cum[g.idx(i, j)];

    ops::d1_xi(a2.data(), d.data(), g);
    ops::cumint_eta(d.data(), cum.data(), g);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            V[g.idx(i, j)] = u1col[i] + 0.5 * cum[g.idx(i, j)];
    return peak;
}

namespace {

struct Derivs {
    std::vector<cplx> qx, qe, qxx, qee;
    std::vector<double> a2, a2x, a2e, Ux, Ve;
};

Derivs grid_derivatives(const FieldSnapshot& s) {
    const auto& g = s.grid;
    Derivs d;
    d.qx.resize(g.size());
    d.qe.resize(g.size());
    d.qxx.resize(g.size());
    d.qee.resize(g.size());
    d.a2.resize(g.size());
    d.a2x.resize(g.size());
    d.a2e.resize(g.size());
    d.Ux.resize(g.size());
    d.Ve.resize(g.size());
    ops::d1_xi(s.q.data(), d.qx.data(), g);
    ops::d1_eta(s.q.data(), d.qe.data(), g);
    ops::d2_xi(s.q.data(), d.qxx.data(), g);
    ops::d2_eta(s.q.data(), d.qee.data(), g);
    ops::abs2_grid(s.q.data(), d.a2.data(), g.size());
    ops::d1_xi(d.a2.data(), d.a2x.data(), g);
    ops::d1_eta(d.a2.data(), d.a2e.data(), g);
    ops::d1_xi(s.U.data(), d.Ux.data(), g);
    ops::d1_eta(s.V.data(), d.Ve.data(), g);
    return d;
}

template <typename QtFn>
ResidualReport evolution_impl(const FieldSnapshot& s,
                              const NonisoCoefficients& c, const QtFn& q_t) {
    const auto& g = s.grid;
    g.validate();
    const auto d = grid_derivatives(s);
    ResidualReport rep;
    rep.grid = g;
    const double h = g.h();
    for (int i = 2; i < g.N - 2; ++i) {
        const double xi = g.xi(i);
        for (int j = 2; j < g.N - 2; ++j) {
            const double eta = g.eta(j);
            const std::size_t n = g.idx(i, j);
            const cplx res =
                I * q_t(xi, eta) + d.qxx[n] + d.qee[n] + (s.U[n] + s.V[n]) * s.q[n] -
                I * c.omega1 * (xi * d.qx[n] + eta * d.qe[n]) -
                I * c.a1 * (d.qx[n] - d.qe[n]) +
                (c.omega0 * (xi + eta) - I * c.omega1) * s.q[n];
            accumulate(rep.evolution, std::abs(res), h);
            accumulate(rep.u_constraint, std::abs(d.Ux[n] - 0.5 * d.a2e[n]), h);
            accumulate(rep.v_constraint, std::abs(d.Ve[n] - 0.5 * d.a2x[n]), h);
        }
    }
    finalize(rep.evolution);
    finalize(rep.u_constraint);
    finalize(rep.v_constraint);
    rep.max_norm = std::max({rep.evolution.max_norm, rep.u_constraint.max_norm,
                             rep.v_constraint.max_norm});
    rep.l2_norm = std::max({rep.evolution.l2_norm, rep.u_constraint.l2_norm,
                            rep.v_constraint.l2_norm});
    return rep;
}

}  // namespace

ResidualReport residual_evolution(
    const FieldSnapshot& s, const NonisoCoefficients& c,
    const std::function<cplx(double, double)>& q_t) {
    return evolution_impl(s, c, q_t);
}

ResidualReport residual_evolution_triplet(const FieldSnapshot& before,
                                          const FieldSnapshot& s,
                                          const FieldSnapshot& after,
                                          const NonisoCoefficients& c) {
    if (before.grid.N != s.grid.N || after.grid.N != s.grid.N)
        throw std::invalid_argument("residual_evolution_triplet: grid mismatch");
    const double dt = 0.5 * (after.t - before.t);
    const auto& g = s.grid;
    auto q_t = [&](double xi, double eta) {
        const int i = static_cast<int>(std::lround((xi + g.L) / g.h()));
        const int j = static_cast<int>(std::lround((eta + g.L) / g.h()));
        const std::size_t n = g.idx(i, j);
        return (after.q[n] - before.q[n]) / (2.0 * dt);
    };
    return evolution_impl(s, c, q_t);
}

IsoResidualReport residual_isospectral(
    const FieldSnapshot& s, const std::function<cplx(double, double)>& q_hat_t) {
    const auto& g = s.grid;
    g.validate();
    const auto d = grid_derivatives(s);
    std::vector<double> Vx(g.size());
    ops::d1_xi(s.V.data(), Vx.data(), g);

    IsoResidualReport rep;
    rep.grid = g;
    const double h = g.h();
    for (int i = 2; i < g.N - 2; ++i) {
        const double xi = g.xi(i);
        for (int j = 2; j < g.N - 2; ++j) {
            const double eta = g.eta(j);
            const std::size_t n = g.idx(i, j);
            const cplx res = I * q_hat_t(xi, eta) + d.qxx[n] + d.qee[n] +
                             (s.U[n] + s.V[n]) * s.q[n];
            accumulate(rep.evolution, std::abs(res), h);
            accumulate(rep.u_constraint, std::abs(d.Ux[n] - 0.5 * d.a2e[n]), h);
            accumulate(rep.v_constraint, std::abs(d.Ve[n] - 0.5 * d.a2x[n]), h);
            accumulate(rep.v_printed, std::abs(Vx[n] - 0.5 * d.a2x[n]), h);
        }
    }
    finalize(rep.evolution);
    finalize(rep.u_constraint);
    finalize(rep.v_constraint);
    finalize(rep.v_printed);
    rep.max_norm = std::max({rep.evolution.max_norm, rep.u_constraint.max_norm,
                             rep.v_constraint.max_norm});
    rep.l2_norm = std::max({rep.evolution.l2_norm, rep.u_constraint.l2_norm,
                            rep.v_constraint.l2_norm});
    return rep;
}

std::optional<double> observed_order(const std::vector<double>& max_norms) {
    if (max_norms.size() < 3) return std::nullopt;
    const double a = max_norms[max_norms.size() - 2];
    const double b = max_norms.back();
    if (!(a > 0.0) || !(b > 0.0)) return std::nullopt;
    return std::log2(a / b);
}

}  // namespace nids

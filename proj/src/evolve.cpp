#include "nids/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "nids/kernels.hpp"

namespace nids {

void SimConfig::validate() const {
    grid.validate();
    coeffs.validate();
    if (t_end < t_start)
        throw std::invalid_argument("SimConfig: t_end must be >= t_start");
    if (t_end > t_start) {
        if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
        const double h = grid.h();
        if (dt > stability_c * h * h)
            throw std::invalid_argument(
                "SimConfig: dt violates the stability guard dt <= " +
                std::to_string(stability_c) + " * h^2 = " +
                std::to_string(stability_c * h * h));
    }
    for (double ts : snapshot_times)
        if (ts < t_start - 1e-12 || ts > t_end + 1e-12)
            throw std::invalid_argument(
                "SimConfig: snapshot time outside [t_start, t_end]");
    if (!initial) throw std::invalid_argument("SimConfig: missing initial data");
}

Integrator::Integrator(SimConfig cfg) : cfg_(std::move(cfg)), t_(cfg_.t_start) {
    cfg_.validate();
    const auto& g = cfg_.grid;
    q_.resize(g.size());
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j)
            q_[g.idx(i, j)] = cfg_.initial(g.xi(i), g.eta(j));
    const std::size_t n = g.size();
    qx_.resize(n);
    qe_.resize(n);
    lap_.resize(n);
    tmp_.resize(n);
    stage_.resize(n);
    k1_.resize(n);
    k2_.resize(n);
    k3_.resize(n);
    k4_.resize(n);
    U_.resize(n);
    V_.resize(n);
    eta_.resize(g.N);
    for (int j = 0; j < g.N; ++j) eta_[j] = g.eta(j);
    pin_edges(q_, t_);
}

void Integrator::pin_edges(std::vector<cplx>& f, double t) const {
    const auto& g = cfg_.grid;
    const auto& e = cfg_.edge_q;
    for (int l = 0; l < 2; ++l) {
        const int m = g.N - 1 - l;
        for (int i = 0; i < g.N; ++i) {
            f[g.idx(l, i)] = e ? e(g.xi(l), g.eta(i), t) : cplx(0.0);
            f[g.idx(m, i)] = e ? e(g.xi(m), g.eta(i), t) : cplx(0.0);
            f[g.idx(i, l)] = e ? e(g.xi(i), g.eta(l), t) : cplx(0.0);
            f[g.idx(i, m)] = e ? e(g.xi(i), g.eta(m), t) : cplx(0.0);
        }
    }
}

void Integrator::rhs(const std::vector<cplx>& q, double t,
                     std::vector<cplx>& out) {
    const auto& g = cfg_.grid;
    const auto& K = kern::kernels();
    const double peak = reconstruct_potentials(g, q, t, cfg_.boundaries, U_, V_,
                                               cfg_.edge_floor);
    if (!std::isfinite(peak)) throw BlowUpError(t);

    ops::d2_xi(q.data(), lap_.data(), g);
    ops::d2_eta(q.data(), tmp_.data(), g);
    K.saxpy(reinterpret_cast<double*>(lap_.data()),
            reinterpret_cast<const double*>(lap_.data()),
            reinterpret_cast<const double*>(tmp_.data()), 1.0, 2 * g.size());
    ops::d1_xi(q.data(), qx_.data(), g);
    ops::d1_eta(q.data(), qe_.data(), g);

    // W = U + V, reused row by row via tmp_ real storage
    std::vector<double>& W = U_;
    for (std::size_t n = 0; n < g.size(); ++n) W[n] += V_[n];

    out.resize(g.size());
    const auto& c = cfg_.coeffs;
    for (int i = 0; i < g.N; ++i) {
        const std::size_t r = g.idx(i, 0);
        K.rhs_row(reinterpret_cast<const double*>(q.data() + r),
                  reinterpret_cast<const double*>(lap_.data() + r),
                  reinterpret_cast<const double*>(qx_.data() + r),
                  reinterpret_cast<const double*>(qe_.data() + r), W.data() + r,
                  eta_.data(), reinterpret_cast<double*>(out.data() + r), g.N,
                  g.xi(i), c.omega0, c.omega1, c.a1);
    }
}

void Integrator::step_rk4(double dt) {
    const auto& K = kern::kernels();
    const std::size_t n2 = 2 * q_.size();
    auto d = [](std::vector<cplx>& v) { return reinterpret_cast<double*>(v.data()); };
    auto cd = [](const std::vector<cplx>& v) {
        return reinterpret_cast<const double*>(v.data());
    };

    rhs(q_, t_, k1_);
    K.saxpy(d(stage_), cd(q_), cd(k1_), 0.5 * dt, n2);
    pin_edges(stage_, t_ + 0.5 * dt);
    rhs(stage_, t_ + 0.5 * dt, k2_);
    K.saxpy(d(stage_), cd(q_), cd(k2_), 0.5 * dt, n2);
    pin_edges(stage_, t_ + 0.5 * dt);
    rhs(stage_, t_ + 0.5 * dt, k3_);
    K.saxpy(d(stage_), cd(q_), cd(k3_), dt, n2);
    pin_edges(stage_, t_ + dt);
    rhs(stage_, t_ + dt, k4_);
    K.rk4_combine(d(q_), cd(k1_), cd(k2_), cd(k3_), cd(k4_), dt / 6.0, n2);
    t_ += dt;
    pin_edges(q_, t_);
}

FieldSnapshot Integrator::snapshot() {
    FieldSnapshot s;
    s.grid = cfg_.grid;
    s.t = t_;
    s.q = q_;
    reconstruct_potentials(cfg_.grid, q_, t_, cfg_.boundaries, U_, V_,
                           cfg_.edge_floor);
    s.U = U_;
    s.V = V_;
    return s;
}

double Integrator::max_abs_q() const {
    double m = 0.0;
    for (const auto& z : q_) m = std::max(m, std::norm(z));
    return std::sqrt(m);
}

SimResult simulate(const SimConfig& cfg) {
    cfg.validate();
    Integrator integ(cfg);
    SimResult res;

    const double span = cfg.t_end - cfg.t_start;
    const long steps = (span > 0.0) ? std::lround(span / cfg.dt) : 0;

    std::vector<long> want(cfg.snapshot_times.size());
    for (std::size_t k = 0; k < cfg.snapshot_times.size(); ++k)
        want[k] = std::clamp<long>(
            std::lround((cfg.snapshot_times[k] - cfg.t_start) / cfg.dt), 0, steps);

    auto record = [&](long step) {
        res.amplitude.emplace_back(integ.t(), integ.max_abs_q());
        if (!std::isfinite(res.amplitude.back().second))
            throw BlowUpError(integ.t());
        for (std::size_t k = 0; k < want.size(); ++k)
            if (want[k] == step) {
                res.snapshots.push_back(integ.snapshot());
                want[k] = -1;  // each request emits once
            }
    };

    try {
        record(0);
        for (long s = 1; s <= steps; ++s) {
            integ.step_rk4(cfg.dt);
            record(s);
        }
    } catch (const BlowUpError& e) {
        res.aborted = true;
        res.abort_time = e.time;
    }
    return res;
}

}  // namespace nids

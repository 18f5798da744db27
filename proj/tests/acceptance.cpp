// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL line
// with its headline numbers and runtime; the process exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "nids/bilinear.hpp"
#include "nids/evolve.hpp"
#include "nids/io.hpp"

using namespace nids;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int g_failures = 0;

void report(int n, bool ok, const std::string& detail, double secs) {
    std::printf("CRITERION %d: %s (%s; %.1f s)\n", n, ok ? "PASS" : "FAIL",
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Gentle demo set: modest spectral rates keep the fields smooth, so the
// 4th-order stencil error sits far below the residual tolerances.
NonisoCoefficients coeffs_demo(double omega1 = 1.0) { return {0.2, omega1, 0.3, 0.0}; }

SpectralMode mode_gentle(double omega1 = 1.0) {
    return {0.25, 0.1, 0.25, -0.1, coeffs_demo(omega1)};
}

// Narrow set for the integrator and figure checks: unit decay rates keep the
// tails below the quadrature floor on the [-10, 10]^2 box.
SpectralMode mode_narrow() { return {1.0, 0.1, 1.0, -0.1, coeffs_demo()}; }

Dromion make_dromion(const SpectralMode& m) { return {0.5, 0.5, 1.0, 1.0, m}; }

const std::vector<double> kTimes = {-0.5, 0.0, 0.2};

template <typename Solution>
FieldSnapshot exact_snapshot(const Solution& sol, const GridSpec& g, double t) {
    FieldSnapshot s;
    s.grid = g;
    s.t = t;
    s.q.resize(g.size());
    s.U.resize(g.size());
    s.V.resize(g.size());
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) {
            const auto p = sol.eval(g.xi(i), g.eta(j), t);
            const auto n = g.idx(i, j);
            s.q[n] = p.q;
            s.U[n] = p.U;
            s.V[n] = p.V;
        }
    return s;
}

template <typename Solution>
std::vector<double> residual_norms(const Solution& sol,
                                   const NonisoCoefficients& c) {
    std::vector<double> norms;
    for (int N : {65, 129, 257}) {
        GridSpec g{10.0, N};
        double level = 0.0;
        for (double t : kTimes) {
            const auto s = exact_snapshot(sol, g, t);
            const auto rep = residual_evolution(s, c, [&](double xi, double eta) {
                return sol.eval(xi, eta, t).q_t;
            });
            level = std::max(level, rep.max_norm);
        }
        norms.push_back(level);
    }
    return norms;
}

void criterion1() {
    const auto t0 = clock_type::now();
    const auto c = coeffs_demo();
    const auto dn = residual_norms(make_dromion(mode_gentle()), c);
    const auto sn = residual_norms(LineSoliton{mode_gentle()}, c);
    const double worst = std::max(dn.back(), sn.back());
    const double od = observed_order(dn).value_or(0.0);
    const double os = observed_order(sn).value_or(0.0);
    const double secs = seconds_since(t0);
    const bool ok = worst <= 1e-6 && od >= 3.5 && os >= 3.5 && secs <= 30.0;
    report(1, ok,
           "residual max " + fmt(worst) + " <= 1e-6 at 257^2, orders " + fmt(od) +
               "/" + fmt(os) + " >= 3.5",
           secs);
}

void criterion2() {
    const auto t0 = clock_type::now();
    const auto d = make_dromion(mode_gentle());
    const auto pair = dromion_pair(d);
    const Lattice3 lat{{-2, -1, 0, 1, 2}, {-2, -1, 0, 1, 2}, kTimes};

    double worst_6b = 0.0;
    for (double t : lat.t)
        for (double xi : lat.xi)
            for (double eta : lat.eta)
                worst_6b = std::max(worst_6b,
                                    std::abs(residual_6b(pair, xi, eta, t)));

    // Odd total order makes D^m F.F cancel identically.
    double worst_odd = 0.0;
    for (auto [mt, nx, pe] : {std::array<int, 3>{1, 0, 0},
                              {0, 1, 0},
                              {0, 0, 1},
                              {1, 1, 1},
                              {0, 2, 1},
                              {1, 2, 0}})
        for (double t : lat.t)
            for (double xi : {-1.5, 0.4})
                for (double eta : {-0.7, 1.2})
                    worst_odd = std::max(
                        worst_odd,
                        std::abs(hirota_D_FF(mt, nx, pe, pair, xi, eta, t, 1e-3)));

    const auto valid = epsilon_order_check(mode_gentle(), lat, 0.0);
    const double worst_eps = std::max(
        {valid.order1, valid.order2, valid.order3, valid.order4});
    const auto control = epsilon_order_check(mode_gentle(), lat, 0.3);
    const bool control_trips = control.order3 > 1e-3;

    const double secs = seconds_since(t0);
    const bool ok = worst_6b <= 1e-8 && worst_odd <= 1e-10 && worst_eps <= 1e-8 &&
                    control_trips && secs <= 5.0;
    report(2, ok,
           "6b max " + fmt(worst_6b) + " <= 1e-8, odd D F.F " + fmt(worst_odd) +
               ", eps orders " + fmt(worst_eps) + ", control order3 " +
               fmt(control.order3) + " > 1e-3",
           secs);
}

// Peak of |q| over the plane: coarse grid scan, then shrinking local grids.
double refined_peak(const Dromion& d, double t) {
    const GridSpec g{10.0, 257};
    double best = 0.0, bx = 0.0, by = 0.0;
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) {
            const double v = std::abs(d.q(g.xi(i), g.eta(j), t));
            if (v > best) {
                best = v;
                bx = g.xi(i);
                by = g.eta(j);
            }
        }
    double w = g.h();
    for (int round = 0; round < 24; ++round) {
        double nb = best, nx = bx, ny = by;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                const double x = bx + w * i / 4.0, y = by + w * j / 4.0;
                const double v = std::abs(d.q(x, y, t));
                if (v > nb) {
                    nb = v;
                    nx = x;
                    ny = y;
                }
            }
        best = nb;
        bx = nx;
        by = ny;
        w *= 0.25;
    }
    return best;
}

void criterion3() {
    const auto t0 = clock_type::now();
    double worst_law = 0.0, worst_ratio = 0.0;
    for (double omega1 : {1.0, -1.0, 0.0}) {
        const auto d = make_dromion(mode_gentle(omega1));
        double p_first = 0.0, p_last = 0.0;
        for (double t : kTimes) {
            const double measured = refined_peak(d, t);
            worst_law = std::max(worst_law,
                                 std::abs(measured / d.peak_value(t) - 1.0));
            if (t == kTimes.front()) p_first = measured;
            if (t == kTimes.back()) p_last = measured;
        }
        worst_ratio = std::max(
            worst_ratio,
            std::abs(p_last / p_first / std::exp(0.7 * omega1) - 1.0));
    }
    const double secs = seconds_since(t0);
    const bool ok = worst_law <= 1e-4 && worst_ratio <= 1e-4;
    report(3, ok,
           "amplitude-law deviation " + fmt(worst_law) +
               " <= 1e-4, peak-ratio deviation " + fmt(worst_ratio) + " <= 1e-4",
           secs);
}

void criterion4() {
    const auto t0 = clock_type::now();
    // The gauge phase is quadratic in (xi, eta), so the transformed field
    // oscillates faster away from the origin; the narrow solution on a tight,
    // fine grid keeps the stencil error below the gate.
    const auto d = make_dromion(mode_narrow());
    const auto c = coeffs_demo();
    const GridSpec g{6.0, 1025};
    double worst = 0.0;
    for (double t : kTimes) {
        FieldSnapshot s;
        s.grid = g;
        s.t = t;
        s.q.resize(g.size());
        s.U.resize(g.size());
        s.V.resize(g.size());
        for (int i = 0; i < g.N; ++i)
            for (int j = 0; j < g.N; ++j) {
                const double xi = g.xi(i), eta = g.eta(j);
                const auto p = d.eval(xi, eta, t);
                const auto gp = gauge_to_isospectral(p.q, p.U, p.V, xi, eta, t, c);
                const auto n = g.idx(i, j);
                s.q[n] = gp.q_hat;
                s.U[n] = gp.U_hat;
                s.V[n] = gp.V_hat;
            }
        const auto rep = residual_isospectral(s, [&](double xi, double eta) {
            const auto p = d.eval(xi, eta, t);
            return gauge_q_hat_t(p.q, p.q_t, xi, eta, t, c);
        });
        worst = std::max(worst, rep.max_norm);
    }

    // Zero coefficients: the map must be the identity bit for bit.
    const NonisoCoefficients zero{0.0, 0.0, 0.0, 0.0};
    bool identity = true;
    for (double t : kTimes)
        for (double xi : {-7.3, 0.1, 4.9})
            for (double eta : {-6.1, 0.2, 8.4}) {
                const auto p = d.eval(xi, eta, t);
                const auto gp =
                    gauge_to_isospectral(p.q, p.U, p.V, xi, eta, t, zero);
                identity = identity &&
                           std::memcmp(&gp.q_hat, &p.q, sizeof(cplx)) == 0 &&
                           std::memcmp(&gp.U_hat, &p.U, sizeof(double)) == 0 &&
                           std::memcmp(&gp.V_hat, &p.V, sizeof(double)) == 0;
            }

    const double secs = seconds_since(t0);
    const bool ok = worst <= 1e-6 && identity;
    report(4, ok,
           "isospectral residual max " + fmt(worst) + " <= 1e-6 at 1025^2, "
           "zero-coefficient identity " + std::string(identity ? "exact" : "BROKEN"),
           secs);
}

SimConfig tracking_config(const Dromion& d, const GridSpec& g, double t0,
                          double t1, double dt) {
    SimConfig sc;
    sc.grid = g;
    sc.dt = dt;
    sc.t_start = t0;
    sc.t_end = t1;
    sc.coeffs = d.mode().coeffs;
    sc.edge_floor = 1e-3;
    sc.initial = [d, t0](double xi, double eta) { return d.q(xi, eta, t0); };
    sc.boundaries = {[d](double xi, double t) { return d.boundary_u1(xi, t); },
                     [d](double eta, double t) { return d.boundary_u2(eta, t); }};
    sc.edge_q = [d](double xi, double eta, double t) { return d.q(xi, eta, t); };
    return sc;
}

void criterion5() {
    const auto t0 = clock_type::now();
    const auto d = make_dromion(mode_narrow());

    auto sc = tracking_config(d, {10.0, 257}, -0.5, 0.2, 1e-4);
    sc.snapshot_times = {0.2};
    const auto res = simulate(sc);
    double rel = 1.0;
    if (!res.aborted && res.snapshots.size() == 1) {
        const auto& s = res.snapshots[0];
        double num = 0.0, den = 0.0;
        for (int i = 0; i < s.grid.N; ++i)
            for (int j = 0; j < s.grid.N; ++j) {
                const cplx e = d.q(s.grid.xi(i), s.grid.eta(j), s.t);
                num += std::norm(s.q[s.grid.idx(i, j)] - e);
                den += std::norm(e);
            }
        rel = std::sqrt(num / den);
    }

    // Self-convergence in dt on a coarse subproblem.
    auto run = [&](double dt) {
        auto c = tracking_config(d, {10.0, 33}, 0.0, 0.12, dt);
        c.snapshot_times = {0.12};
        return simulate(c).snapshots.at(0).q;
    };
    const auto ref = run(1.5e-3);
    std::vector<double> errs;
    for (double dt : {1.2e-2, 6e-3, 3e-3}) {
        const auto q = run(dt);
        double e = 0.0;
        for (std::size_t n = 0; n < q.size(); ++n)
            e = std::max(e, std::abs(q[n] - ref[n]));
        errs.push_back(e);
    }
    const double order = std::log2(errs[1] / errs[2]);

    const double secs = seconds_since(t0);
    const bool ok = !res.aborted && rel <= 1e-3 && order >= 3.5 && secs <= 600.0;
    report(5, ok,
           "rel L2 " + fmt(rel) + " <= 1e-3 at 257^2 dt=1e-4, dt order " +
               fmt(order) + " >= 3.5",
           secs);
}

struct Surface {
    GridSpec grid{10.0, 0};
    std::vector<double> a;  // |q| row-major, eta fastest
};

Surface read_surface(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::getline(is, header);
    Surface s;
    std::vector<double> xs, ys, as;
    double x, y, v;
    while (is >> x >> y >> v) {
        xs.push_back(x);
        ys.push_back(y);
        as.push_back(v);
    }
    const int N = static_cast<int>(std::lround(std::sqrt(double(as.size()))));
    if (std::size_t(N) * N != as.size())
        throw std::runtime_error("non-square surface in " + path);
    s.grid = {std::abs(xs.front()), N};
    s.a = std::move(as);
    return s;
}

void criterion6() {
    const auto t0 = clock_type::now();
    const auto dir = fs::temp_directory_path() / "nids_acceptance_fig";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto cfg_path = (dir / "run.cfg").string();
    std::ofstream(cfg_path) << "omega0 = 0.2\nomega1 = 1\na1 = 0.3\n"
                               "kR0 = 1\nkI0 = 0.1\nlR0 = 1\nlI0 = -0.1\n"
                               "snapshot_times = -0.5, 0, 0.2\n";
    const std::string cli = NIDS_CLI_PATH;
    const std::string out = dir.string();
    auto run = [&](const std::string& args) {
        const std::string cmd = cli + " --config " + cfg_path + " --out " + out +
                                " " + args + " >/dev/null 2>&1";
        const int st = std::system(cmd.c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    bool ok = run("exact") == 0;
    for (const char* n : {"exact_000.nids", "exact_001.nids", "exact_002.nids"})
        ok = ok && run(std::string("figure ") + (dir / n).string()) == 0;

    int worst_bumps = 0;
    double worst_slope_dev = 0.0;
    if (ok) {
        const double times[3] = {-0.5, 0.0, 0.2};
        for (int f = 0; f < 3 && ok; ++f) {
            char name[32];
            std::snprintf(name, sizeof(name), "exact_%03d.dat", f);
            const auto s = read_surface((dir / name).string());
            const auto& g = s.grid;

            // Locate the peak and count well-separated local maxima.
            double peak = 0.0;
            int pi = 0, pj = 0;
            for (int i = 0; i < g.N; ++i)
                for (int j = 0; j < g.N; ++j)
                    if (s.a[g.idx(i, j)] > peak) {
                        peak = s.a[g.idx(i, j)];
                        pi = i;
                        pj = j;
                    }
            int bumps = 0;
            for (int i = 1; i < g.N - 1; ++i)
                for (int j = 1; j < g.N - 1; ++j) {
                    const double v = s.a[g.idx(i, j)];
                    if (v < 0.1 * peak) continue;
                    if (v > s.a[g.idx(i - 1, j)] && v > s.a[g.idx(i + 1, j)] &&
                        v > s.a[g.idx(i, j - 1)] && v > s.a[g.idx(i, j + 1)])
                        ++bumps;
                }
            worst_bumps = std::max(worst_bumps, bumps);
            ok = ok && bumps == 1;

            // Least-squares slope of log |q|^2 along xi through the peak, on
            // a window well inside the tail.
            const double kR = 1.0 * std::exp(times[f]);  // kR0 e^{omega1 t}
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int cnt = 0;
            for (int i = 0; i < g.N; ++i) {
                const double dxi = g.xi(i) - g.xi(pi);
                if (dxi < 4.0 || dxi > 7.0) continue;
                const double a = s.a[g.idx(i, pj)];
                if (a <= 0.0) continue;
                const double yv = 2.0 * std::log(a);
                sx += dxi;
                sy += yv;
                sxx += dxi * dxi;
                sxy += dxi * yv;
                ++cnt;
            }
            const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
            const double dev = std::abs(std::abs(slope) / (2.0 * kR) - 1.0);
            worst_slope_dev = std::max(worst_slope_dev, dev);
            ok = ok && dev <= 0.10;
        }
    }
    fs::remove_all(dir);
    const double secs = seconds_since(t0);
    report(6, ok,
           "single bump per frame (max count " + std::to_string(worst_bumps) +
               "), tail-slope deviation " + fmt(worst_slope_dev) + " <= 0.1",
           secs);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nids/residual.hpp"

namespace nids {

class BlowUpError : public std::runtime_error {
  public:
    explicit BlowUpError(double t)
        : std::runtime_error("evolve: non-finite field value at t = " +
                             std::to_string(t)),
          time(t) {}
    double time;
};

struct SimConfig {
    GridSpec grid;
    double dt = 1e-4;
    double t_start = 0.0;
    double t_end = 0.0;
    NonisoCoefficients coeffs;
    double stability_c = 0.2;   // guard: dt <= stability_c * h^2
    double edge_floor = 1e-10;  // reconstruct_potentials edge precondition
    std::vector<double> snapshot_times;
    std::function<cplx(double xi, double eta)> initial;  // field at t_start
    BoundaryData boundaries = BoundaryData::zero();
    /// Prescribed field values on the outer two node layers, evaluated at every
    /// stage time (the finite box needs inflow data for the dilation terms; a
    /// free one-sided closure is unstable there). Null pins the edges to zero,
    /// which is exact to the decay floor for localized data.
    std::function<cplx(double xi, double eta, double t)> edge_q;

    void validate() const;
};

struct SimResult {
    std::vector<FieldSnapshot> snapshots;
    std::vector<std::pair<double, double>> amplitude;  // (t, max |q|)
    bool aborted = false;
    double abort_time = 0.0;
};

/// Method-of-lines integrator for the reduced system: 4th-order central
/// differences in space (one-sided at the edges), classical RK4 in time,
/// potentials reconstructed from q and the boundary data at every stage.
class Integrator {
  public:
    explicit Integrator(SimConfig cfg);

    const SimConfig& config() const { return cfg_; }
    double t() const { return t_; }
    const std::vector<cplx>& state() const { return q_; }

    /// dq/dt for an arbitrary state at time t (exposed for oracle tests).
    void rhs(const std::vector<cplx>& q, double t, std::vector<cplx>& out);

    void step_rk4(double dt);

    /// Snapshot of the current state with consistent potentials.
    FieldSnapshot snapshot();

    double max_abs_q() const;

  private:
    void pin_edges(std::vector<cplx>& f, double t) const;

    SimConfig cfg_;
    double t_;
    std::vector<cplx> q_;
    // workspaces
    std::vector<cplx> qx_, qe_, lap_, tmp_, stage_, k1_, k2_, k3_, k4_;
    std::vector<double> U_, V_, eta_;
};

SimResult simulate(const SimConfig& cfg);

}  // namespace nids

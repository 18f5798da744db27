#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nids/coeffs.hpp"
#include "nids/grid.hpp"

namespace nids {

/// Inflow boundary data: u1 drives V from the eta edge, u2 drives U from the
/// xi edge.
struct BoundaryData {
    std::function<double(double xi, double t)> u1;
    std::function<double(double eta, double t)> u2;

    static BoundaryData zero() {
        return {[](double, double) { return 0.0; },
                [](double, double) { return 0.0; }};
    }
};

/// Raised when the field has not decayed at the inflow edges enough for the
/// truncated cumulative integrals to be trustworthy.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(double edge, double floor_)
        : std::runtime_error("reconstruct_potentials: |q|^2 at the inflow edge (" +
                             std::to_string(edge) + ") exceeds the floor (" +
                             std::to_string(floor_) + ")"),
          edge_magnitude(edge), floor_value(floor_) {}
    double edge_magnitude;
    double floor_value;
};

struct PerEquation {
    double max_norm = 0.0;
    double l2_norm = 0.0;
};

struct ResidualReport {
    double max_norm = 0.0;
    double l2_norm = 0.0;
    PerEquation evolution;
    PerEquation u_constraint;
    PerEquation v_constraint;
    GridSpec grid;
    int stencil_order = 4;
    std::optional<double> observed_order;

    std::string text() const;
    std::string machine() const;
};

/// Potentials from q and boundary data:
///   U = u2(eta, t) + 1/2 int_{xi_min}^{xi} d/deta |q|^2 dxi'
///   V = u1(xi, t)  + 1/2 int_{eta_min}^{eta} d/dxi |q|^2 deta'
/// 4th-order inner derivative, 4th-order cumulative integration. Throws
/// TruncationError when |q|^2 at the inflow edges exceeds edge_floor times its
/// grid maximum.
/// Returns the grid maximum of |q|^2.
double reconstruct_potentials(const GridSpec& g, const std::vector<cplx>& q,
                              double t, const BoundaryData& b,
                              std::vector<double>& U, std::vector<double>& V,
                              double edge_floor = 1e-10);

/// Residual of the reduced non-isospectral system on interior nodes (two-node
/// stencil margin excluded). q_t is supplied analytically, or by a centered
/// difference over (t-dt, t+dt) snapshots via residual_evolution_triplet.
ResidualReport residual_evolution(
    const FieldSnapshot& s, const NonisoCoefficients& c,
    const std::function<cplx(double xi, double eta)>& q_t);

ResidualReport residual_evolution_triplet(const FieldSnapshot& before,
                                          const FieldSnapshot& s,
                                          const FieldSnapshot& after,
                                          const NonisoCoefficients& c);

/// Residual of the isospectral system i q_t + q_xx + q_ee + (U+V) q = 0 with
/// constraints U_xi = 1/2 (|q|^2)_eta and V_eta = 1/2 (|q|^2)_xi. The v_printed
/// field reports the mismatched variant V_xi = 1/2 (|q|^2)_xi alongside as a
/// structural control; it is not part of the gating residual.
struct IsoResidualReport : ResidualReport {
    PerEquation v_printed;
};

IsoResidualReport residual_isospectral(
    const FieldSnapshot& s, const std::function<cplx(double, double)>& q_hat_t);

/// Fits the observed convergence order from residual max-norms at dyadic
/// refinements (needs >= 3 levels; uses the last pair).
std::optional<double> observed_order(const std::vector<double>& max_norms);

}  // namespace nids

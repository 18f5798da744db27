#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nids/evolve.hpp"
#include "nids/exact.hpp"

namespace nids::io {

/// Configuration or usage problem; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Binary snapshot format "NIDS1": magic, version, t, L, N, field list, then
/// row-major little-endian float64 payloads (q as interleaved re/im pairs).
/// Round-trips bit-exactly.
void write_snapshot(const std::string& path, const FieldSnapshot& s);
FieldSnapshot read_snapshot(const std::string& path);

/// Gridded three-column plot data (xi, eta, |q|) with a leading header line;
/// rows grouped by xi with a blank line between groups.
void write_figure(const std::string& path, const FieldSnapshot& s);

/// Two-column text series (t, max |q|).
void write_amplitude_series(
    const std::string& path,
    const std::vector<std::pair<double, double>>& series);

/// Key-value run configuration (UTF-8, one `key = value` per line, `#`
/// comments). Unknown keys are rejected; keys left at their defaults are
/// listed in `defaulted`.
struct RunConfig {
    // solution selection
    std::string solution = "dromion";  // dromion | soliton
    // coefficients
    double omega0 = 0.0, omega1 = 1.0, a1 = 0.0, a0 = 0.0;
    // spectral integration constants
    double kR0 = 1.0, kI0 = 0.0, lR0 = 1.0, lI0 = 0.0;
    // dromion shape
    double alpha = 0.5, beta = 0.5, gamma = 1.0, delta = 1.0;
    // grid and time stepping
    double L = 10.0;
    int N = 257;
    double dt = 1e-4;
    double t_start = -0.5, t_end = 0.2;
    double stability_c = 0.2;
    double edge_floor = 1e-10;
    std::vector<double> snapshot_times = {-0.5, 0.0, 0.2};
    // sources
    std::string initial = "exact";   // exact only in v1
    std::string boundary = "exact";  // exact | zero
    // verification
    std::string check = "pde";  // pde | bilinear | epsilon | isospectral
    double tolerance = 1e-6;
    int refinements = 3;
    double l_rate_delta = 0.0;  // epsilon negative-control rate offset

    std::vector<std::string> defaulted;

    NonisoCoefficients coeffs() const { return {omega0, omega1, a1, a0}; }
    SpectralMode mode() const { return {kR0, kI0, lR0, lI0, coeffs()}; }
    Dromion dromion() const { return {alpha, beta, gamma, delta, mode()}; }
    LineSoliton soliton() const { return LineSoliton{mode()}; }
    GridSpec grid() const { return {L, N}; }

    /// SimConfig with initial/boundary data resolved from the exact solution.
    SimConfig sim_config() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace nids::io

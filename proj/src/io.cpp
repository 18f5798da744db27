#include "nids/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace nids::io {

namespace {

constexpr char kMagic[5] = {'N', 'I', 'D', 'S', '1'};
constexpr std::int32_t kVersion = 1;

// The format is little-endian by definition; raw writes are correct on the
// platforms this builds for (x86-64, AArch64).
template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

void put_name(std::ostream& os, const std::string& name) {
    put<std::int32_t>(os, static_cast<std::int32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
}

std::string get_name(std::istream& is) {
    const auto n = get<std::int32_t>(is);
    if (n < 0 || n > 64) throw std::runtime_error("snapshot: bad field name length");
    std::string s(static_cast<std::size_t>(n), '\0');
    is.read(s.data(), n);
    return s;
}

}  // namespace

void write_snapshot(const std::string& path, const FieldSnapshot& s) {
    if (s.q.size() != s.grid.size() || s.U.size() != s.grid.size() ||
        s.V.size() != s.grid.size())
        throw std::invalid_argument("write_snapshot: field sizes do not match grid");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
    os.write(kMagic, sizeof(kMagic));
    put(os, kVersion);
    put(os, s.t);
    put(os, s.grid.L);
    put<std::int32_t>(os, s.grid.N);
    put<std::int32_t>(os, 3);
    put_name(os, "q");
    put_name(os, "U");
    put_name(os, "V");
    os.write(reinterpret_cast<const char*>(s.q.data()),
             static_cast<std::streamsize>(s.q.size() * sizeof(cplx)));
    os.write(reinterpret_cast<const char*>(s.U.data()),
             static_cast<std::streamsize>(s.U.size() * sizeof(double)));
    os.write(reinterpret_cast<const char*>(s.V.data()),
             static_cast<std::streamsize>(s.V.size() * sizeof(double)));
    if (!os) throw std::runtime_error("write_snapshot: write failed for " + path);
}

FieldSnapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
    char magic[5];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path);
    if (get<std::int32_t>(is) != kVersion)
        throw std::runtime_error("read_snapshot: unsupported version in " + path);
    FieldSnapshot s;
    s.t = get<double>(is);
    s.grid.L = get<double>(is);
    s.grid.N = get<std::int32_t>(is);
    s.grid.validate();
    const auto nfields = get<std::int32_t>(is);
    if (nfields != 3) throw std::runtime_error("read_snapshot: unexpected field count");
    for (const char* want : {"q", "U", "V"})
        if (get_name(is) != want)
            throw std::runtime_error("read_snapshot: unexpected field list");
    s.q.resize(s.grid.size());
    s.U.resize(s.grid.size());
    s.V.resize(s.grid.size());
    is.read(reinterpret_cast<char*>(s.q.data()),
            static_cast<std::streamsize>(s.q.size() * sizeof(cplx)));
    is.read(reinterpret_cast<char*>(s.U.data()),
            static_cast<std::streamsize>(s.U.size() * sizeof(double)));
    is.read(reinterpret_cast<char*>(s.V.data()),
            static_cast<std::streamsize>(s.V.size() * sizeof(double)));
    if (!is) throw std::runtime_error("read_snapshot: truncated payload in " + path);
    if (is.peek() != std::ifstream::traits_type::eof())
        throw std::runtime_error("read_snapshot: trailing bytes in " + path);
    return s;
}

void write_figure(const std::string& path, const FieldSnapshot& s) {
    if (s.q.size() != s.grid.size())
        throw std::invalid_argument("write_figure: field size does not match grid");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_figure: cannot open " + path);
    os.precision(17);
    os << "# xi eta abs_q   (t = " << s.t << ", N = " << s.grid.N
       << ", L = " << s.grid.L << ")\n";
    for (int i = 0; i < s.grid.N; ++i) {
        for (int j = 0; j < s.grid.N; ++j)
            os << s.grid.xi(i) << ' ' << s.grid.eta(j) << ' '
               << std::abs(s.q[s.grid.idx(i, j)]) << '\n';
        os << '\n';
    }
    if (!os) throw std::runtime_error("write_figure: write failed for " + path);
}

void write_amplitude_series(
    const std::string& path,
    const std::vector<std::pair<double, double>>& series) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_amplitude_series: cannot open " + path);
    os.precision(17);
    os << "# t max_abs_q\n";
    for (const auto& [t, v] : series) os << t << ' ' << v << '\n';
    if (!os) throw std::runtime_error("write_amplitude_series: write failed for " + path);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::vector<std::string> seen;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " has an empty key or value");
        seen.push_back(key);

        if (key == "solution") cfg.solution = val;
        else if (key == "omega0") cfg.omega0 = parse_double(key, val);
        else if (key == "omega1") cfg.omega1 = parse_double(key, val);
        else if (key == "a1") cfg.a1 = parse_double(key, val);
        else if (key == "a0") cfg.a0 = parse_double(key, val);
        else if (key == "kR0") cfg.kR0 = parse_double(key, val);
        else if (key == "kI0") cfg.kI0 = parse_double(key, val);
        else if (key == "lR0") cfg.lR0 = parse_double(key, val);
        else if (key == "lI0") cfg.lI0 = parse_double(key, val);
        else if (key == "alpha") cfg.alpha = parse_double(key, val);
        else if (key == "beta") cfg.beta = parse_double(key, val);
        else if (key == "gamma") cfg.gamma = parse_double(key, val);
        else if (key == "delta") cfg.delta = parse_double(key, val);
        else if (key == "L") cfg.L = parse_double(key, val);
        else if (key == "N") cfg.N = parse_int(key, val);
        else if (key == "dt") cfg.dt = parse_double(key, val);
        else if (key == "t_start") cfg.t_start = parse_double(key, val);
        else if (key == "t_end") cfg.t_end = parse_double(key, val);
        else if (key == "stability_c") cfg.stability_c = parse_double(key, val);
        else if (key == "edge_floor") cfg.edge_floor = parse_double(key, val);
        else if (key == "snapshot_times") cfg.snapshot_times = parse_list(key, val);
        else if (key == "initial") cfg.initial = val;
        else if (key == "boundary") cfg.boundary = val;
        else if (key == "check") cfg.check = val;
        else if (key == "tolerance") cfg.tolerance = parse_double(key, val);
        else if (key == "refinements") cfg.refinements = parse_int(key, val);
        else if (key == "l_rate_delta") cfg.l_rate_delta = parse_double(key, val);
        else throw ConfigError("config: unknown key '" + key + "'");
    }

    if (cfg.solution != "dromion" && cfg.solution != "soliton")
        throw ConfigError("config: solution must be 'dromion' or 'soliton'");
    if (cfg.initial != "exact")
        throw ConfigError("config: initial data source '" + cfg.initial +
                          "' is not supported (only 'exact')");
    if (cfg.boundary != "exact" && cfg.boundary != "zero")
        throw ConfigError("config: boundary source '" + cfg.boundary +
                          "' is not supported (only 'exact' or 'zero')");
    if (cfg.check != "pde" && cfg.check != "bilinear" && cfg.check != "epsilon" &&
        cfg.check != "isospectral")
        throw ConfigError("config: check must be pde | bilinear | epsilon | isospectral");
    if (cfg.refinements < 1) throw ConfigError("config: refinements must be >= 1");

    static const char* kAllKeys[] = {
        "solution", "omega0", "omega1", "a1", "a0", "kR0", "kI0", "lR0", "lI0",
        "alpha", "beta", "gamma", "delta", "L", "N", "dt", "t_start", "t_end",
        "stability_c", "edge_floor", "snapshot_times", "initial", "boundary",
        "check", "tolerance", "refinements", "l_rate_delta"};
    for (const char* k : kAllKeys) {
        bool found = false;
        for (const auto& s : seen)
            if (s == k) { found = true; break; }
        if (!found) cfg.defaulted.emplace_back(k);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

SimConfig RunConfig::sim_config() const {
    SimConfig sc;
    sc.grid = grid();
    sc.dt = dt;
    sc.t_start = t_start;
    sc.t_end = t_end;
    sc.coeffs = coeffs();
    sc.stability_c = stability_c;
    sc.edge_floor = edge_floor;
    sc.snapshot_times = snapshot_times;
    if (solution == "dromion") {
        const auto d = dromion();
        sc.initial = [d, t0 = t_start](double xi, double eta) {
            return d.q(xi, eta, t0);
        };
        if (boundary == "exact") {
            sc.boundaries = {[d](double xi, double t) { return d.boundary_u1(xi, t); },
                             [d](double eta, double t) { return d.boundary_u2(eta, t); }};
            sc.edge_q = [d](double xi, double eta, double t) {
                return d.q(xi, eta, t);
            };
        }
    } else {
        const auto s = soliton();
        sc.initial = [s, t0 = t_start](double xi, double eta) {
            return s.eval(xi, eta, t0).q;
        };
        // The soliton's potentials vanish at the inflow edges, so u1 = u2 = 0
        // is the closed-form limit; only the field edge data differ.
        if (boundary == "exact")
            sc.edge_q = [s](double xi, double eta, double t) {
                return s.eval(xi, eta, t).q;
            };
    }
    return sc;
}

}  // namespace nids::io

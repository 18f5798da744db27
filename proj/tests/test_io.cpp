#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nids/io.hpp"

using namespace nids;
namespace fs = std::filesystem;
using doctest::Approx;

namespace {

FieldSnapshot random_snapshot(unsigned seed) {
    FieldSnapshot s;
    s.grid = {3.5, 17};
    s.t = 0.125;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    s.q.resize(s.grid.size());
    s.U.resize(s.grid.size());
    s.V.resize(s.grid.size());
    for (auto& z : s.q) z = cplx(u(rng), u(rng));
    for (auto& v : s.U) v = u(rng);
    for (auto& v : s.V) v = u(rng);
    return s;
}

std::string temp_path(const std::string& name) {
    return (fs::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("snapshot round-trip is bit-exact and byte-stable") {
    const auto s = random_snapshot(7);
    const auto p1 = temp_path("nids_io_rt1.nids");
    const auto p2 = temp_path("nids_io_rt2.nids");
    io::write_snapshot(p1, s);
    const auto r = io::read_snapshot(p1);
    CHECK(r.t == s.t);
    CHECK(r.grid.L == s.grid.L);
    CHECK(r.grid.N == s.grid.N);
    REQUIRE(r.q.size() == s.q.size());
    CHECK(std::memcmp(r.q.data(), s.q.data(), s.q.size() * sizeof(cplx)) == 0);
    CHECK(std::memcmp(r.U.data(), s.U.data(), s.U.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(r.V.data(), s.V.data(), s.V.size() * sizeof(double)) == 0);
    // writing the same snapshot twice produces identical bytes
    io::write_snapshot(p2, r);
    CHECK(slurp(p1) == slurp(p2));
    fs::remove(p1);
    fs::remove(p2);
}

TEST_CASE("snapshot reader rejects malformed files") {
    const auto s = random_snapshot(8);
    const auto p = temp_path("nids_io_bad.nids");
    io::write_snapshot(p, s);

    SUBCASE("bad magic") {
        auto bytes = slurp(p);
        bytes[0] = 'X';
        std::ofstream(p, std::ios::binary).write(bytes.data(), bytes.size());
        CHECK_THROWS(io::read_snapshot(p));
    }
    SUBCASE("truncated payload") {
        auto bytes = slurp(p);
        bytes.resize(bytes.size() - 9);
        std::ofstream(p, std::ios::binary).write(bytes.data(), bytes.size());
        CHECK_THROWS(io::read_snapshot(p));
    }
    SUBCASE("trailing bytes") {
        std::ofstream(p, std::ios::binary | std::ios::app) << "extra";
        CHECK_THROWS(io::read_snapshot(p));
    }
    SUBCASE("missing file") { CHECK_THROWS(io::read_snapshot(temp_path("nope.nids"))); }
    fs::remove(p);
}

TEST_CASE("figure export: header plus one line per node, grouped by xi") {
    const auto s = random_snapshot(9);
    const auto p = temp_path("nids_io_fig.dat");
    io::write_figure(p, s);
    std::ifstream is(p);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("# xi eta abs_q", 0) == 0);
    int data = 0, blank = 0;
    while (std::getline(is, line)) {
        if (line.empty()) {
            ++blank;
            continue;
        }
        ++data;
        std::istringstream ls(line);
        double xi, eta, a;
        REQUIRE((ls >> xi >> eta >> a));
        CHECK(a >= 0.0);
    }
    CHECK(data == s.grid.N * s.grid.N);
    CHECK(blank == s.grid.N);
    fs::remove(p);
}

TEST_CASE("amplitude series export") {
    const auto p = temp_path("nids_io_amp.dat");
    io::write_amplitude_series(p, {{0.0, 1.0}, {0.1, 1.1051709180756477}});
    std::ifstream is(p);
    std::string header;
    REQUIRE(std::getline(is, header));
    CHECK(header == "# t max_abs_q");
    double t, a;
    REQUIRE((is >> t >> a));
    CHECK(t == 0.0);
    REQUIRE((is >> t >> a));
    CHECK(a == 1.1051709180756477);  // 17 significant digits survive
    fs::remove(p);
}

TEST_CASE("config parsing: values, comments, defaults") {
    const auto cfg = io::parse_config_text(
        "# a comment\n"
        "solution = soliton\n"
        "omega1 = -0.5   # trailing comment\n"
        "kR0 = 0.75\n"
        "snapshot_times = -0.5, 0, 0.2\n"
        "N = 129\n");
    CHECK(cfg.solution == "soliton");
    CHECK(cfg.omega1 == -0.5);
    CHECK(cfg.kR0 == 0.75);
    CHECK(cfg.N == 129);
    REQUIRE(cfg.snapshot_times.size() == 3);
    CHECK(cfg.snapshot_times[1] == 0.0);
    // untouched keys are reported as defaulted
    auto has = [&](const std::string& k) {
        for (const auto& s : cfg.defaulted)
            if (s == k) return true;
        return false;
    };
    CHECK(has("alpha"));
    CHECK(has("dt"));
    CHECK(!has("omega1"));
    CHECK(!has("N"));
}

TEST_CASE("config parsing: rejections") {
    CHECK_THROWS_AS(io::parse_config_text("mystery = 1\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("omega1\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("omega1 = abc\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("N = 1.5\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("solution = vortex\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("initial = file\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("boundary = file\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("check = maybe\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_text("refinements = 0\n"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_config_file("/no/such/config.cfg"), io::ConfigError);
}

TEST_CASE("config to simulation wiring") {
    const auto cfg = io::parse_config_text(
        "t_start = -0.25\nt_end = 0.1\nN = 65\nedge_floor = 1e-3\n"
        "snapshot_times = 0\n");
    const auto sc = cfg.sim_config();
    CHECK_NOTHROW(sc.validate());
    const auto d = cfg.dromion();
    CHECK(sc.initial(0.3, -0.4) == d.q(0.3, -0.4, -0.25));
    CHECK(sc.boundaries.u1(0.7, 0.0) == d.boundary_u1(0.7, 0.0));
    CHECK(sc.boundaries.u2(-0.2, 0.05) == d.boundary_u2(-0.2, 0.05));
    REQUIRE(static_cast<bool>(sc.edge_q));
    CHECK(sc.edge_q(1.0, 2.0, 0.0) == d.q(1.0, 2.0, 0.0));

    const auto zero = io::parse_config_text("boundary = zero\n");
    const auto sz = zero.sim_config();
    CHECK(sz.boundaries.u1(0.7, 0.0) == 0.0);
    CHECK(!sz.edge_q);

    const auto sol = io::parse_config_text("solution = soliton\nboundary = exact\n");
    const auto ss = sol.sim_config();
    CHECK(ss.boundaries.u1(0.7, 0.0) == 0.0);
    REQUIRE(static_cast<bool>(ss.edge_q));
}

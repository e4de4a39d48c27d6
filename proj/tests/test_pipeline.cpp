#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kerrspin/config.hpp"
#include "kerrspin/simulation.hpp"

using namespace kerrspin;

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path temp_dir() {
    const fs::path d = fs::temp_directory_path() / "kerrspin_pipeline_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("config parsing: schema round trip") {
    const std::string text = R"(
# comment line
[params]
M = 1.5
a = 0.8        # inline comment
[constants]
E = 1.004
Lz = -4
kappa = 60
[initial]
r0 = 20
theta0 = 1.57
phi0 = 0
sign_r = -1
[run]
tau_max = 120
tau_step = 0.05
label = demo
[spin]
W0 = 0, 0, 1
[integrator]
rel_tol = 1e-11
chi0 = 0.5
)";
    const RunConfig c = parse_config(text);
    CHECK(c.M == 1.5);
    CHECK(c.a == 0.8);
    CHECK(c.E == 1.004);
    CHECK(c.Lz == -4.0);
    CHECK(c.kappa == 60.0);
    CHECK(c.sign_r == -1);
    CHECK(c.sign_theta == 1);  // default
    CHECK(c.tau_max == 120.0);
    CHECK(c.label == "demo");
    CHECK(c.w0 == Eigen::Vector3d(0, 0, 1));
    CHECK(c.rel_tol == 1e-11);
    CHECK(c.abs_tol == 1e-12);  // default
    CHECK(c.chi0 == 0.5);
    CHECK(!c.use_spinor_constants);
}

TEST_CASE("config parsing: spinor block switches the spin source") {
    const RunConfig c = parse_config("[spin]\nc1_re = 0.6\nc2_im = 0.8\nhbar = 0.1\n");
    CHECK(c.use_spinor_constants);
    CHECK(c.c1 == std::complex<double>(0.6, 0.0));
    CHECK(c.c2 == std::complex<double>(0.0, 0.8));
    CHECK(c.hbar == 0.1);
}

TEST_CASE("config parsing: errors carry section/key context") {
    CHECK_THROWS_WITH_AS(parse_config("[orbit]\nE = 1\n"), doctest::Contains("unknown section"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[params]\nmass = 1\n"), doctest::Contains("unknown key"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[params]\nM = heavy\n"),
                         doctest::Contains("expected a number"), ConfigError);
    CHECK_THROWS_AS(parse_config("[params\nM = 1\n"), ConfigError);  // malformed header
    CHECK_THROWS_AS(parse_config("[params]\njust a line\n"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[params]\nM = 1\na = 1.2\n"),
                         doctest::Contains("non-extreme"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[initial]\nsign_r = 2\n"),
                         doctest::Contains("sign_r"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[initial]\nr0 = 1.0\n"),
                         doctest::Contains("outer horizon"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[spin]\nW0 = 1, 0\n"),
                         doctest::Contains("three"), ConfigError);
}

TEST_CASE("simulation: grid size, drift gates, determinism") {
    RunConfig cfg = caption_preset(3);
    cfg.tau_max = 50.0;
    cfg.tau_step = 0.05;
    const SimulationResult res = run_simulation(cfg);
    CHECK(res.rows.size() == 1001);
    CHECK(res.tolerances_met);
    CHECK(res.max_drift_E < 1e-8);
    CHECK(res.max_orthogonality_residual < 1e-10);
    CHECK(res.max_det_residual < 1e-10);
    CHECK(res.rows.front().tau == 0.0);
    CHECK(res.rows.back().tau == doctest::Approx(50.0));
    // The initial spin direction is taken up unchanged.
    CHECK((res.series.W.front() - cfg.w0).norm() < 1e-12);

    // Byte-for-byte determinism of the CSV output.
    const fs::path dir = temp_dir();
    write_csv((dir / "a.csv").string(), res.rows);
    const SimulationResult res2 = run_simulation(cfg);
    write_csv((dir / "b.csv").string(), res2.rows);
    const std::string a = read_file(dir / "a.csv"), b = read_file(dir / "b.csv");
    CHECK(a == b);
    CHECK(a.find('\r') == std::string::npos);  // LF-only line endings
    CHECK(a.rfind("tau,t,r,theta,phi,rdot,thetadot,chi,W1,W2,W3,kg,", 0) == 0);
}

TEST_CASE("CSV round trip preserves full precision") {
    RunConfig cfg = caption_preset(1);
    cfg.tau_max = 10.0;
    cfg.tau_step = 0.1;
    const SimulationResult res = run_simulation(cfg);
    const fs::path path = temp_dir() / "roundtrip.csv";
    write_csv(path.string(), res.rows);
    const auto rows = read_csv(path.string());
    REQUIRE(rows.size() == res.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].tau == res.rows[i].tau);  // bitwise, via 17 significant digits
        CHECK(rows[i].r == res.rows[i].r);
        CHECK(rows[i].theta == res.rows[i].theta);
        CHECK(rows[i].W1 == res.rows[i].W1);
        CHECK(rows[i].kg.has_value() == res.rows[i].kg.has_value());
        if (rows[i].kg) CHECK(*rows[i].kg == *res.rows[i].kg);
        CHECK(rows[i].drift_norm == res.rows[i].drift_norm);
    }
}

TEST_CASE("equatorial run leaves the curvature column empty") {
    RunConfig cfg;
    cfg.M = 1.0;
    cfg.a = 0.8;
    cfg.E = 0.96;
    cfg.Lz = 3.5;
    cfg.kappa = std::pow(cfg.a * cfg.E - cfg.Lz, 2);
    cfg.r0 = 10.0;
    cfg.theta0 = M_PI / 2.0;
    cfg.tau_max = 30.0;
    cfg.tau_step = 0.1;
    const SimulationResult res = run_simulation(cfg);
    for (const auto& row : res.rows) CHECK(!row.kg.has_value());
    const fs::path path = temp_dir() / "equatorial.csv";
    write_csv(path.string(), res.rows);
    // The kg field is genuinely empty in the file.
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    std::size_t pos = 0;
    for (int i = 0; i < 11; ++i) pos = line.find(',', pos) + 1;
    CHECK(line[pos] == ',');  // 12th field (kg) is empty
}

TEST_CASE("tau_max = 0 produces the single initial sample") {
    RunConfig cfg = caption_preset(2);
    cfg.tau_max = 0.0;
    const SimulationResult res = run_simulation(cfg);
    CHECK(res.rows.size() == 1);
    CHECK(res.rows.front().tau == 0.0);
    CHECK(res.tolerances_met);
}

TEST_CASE("spinor-sourced initial spin matches the closed-form direction") {
    RunConfig cfg = caption_preset(1);
    cfg.tau_max = 5.0;
    cfg.tau_step = 0.1;
    cfg.use_spinor_constants = true;
    cfg.c1 = {1.0, 0.0};
    cfg.c2 = {0.0, 0.0};
    cfg.hbar = 0.0;
    const SimulationResult res = run_simulation(cfg);
    // c2 = 0 points the spin along -Z of the parallel-propagated frame.
    CHECK((res.series.W.front() - Eigen::Vector3d(0, 0, -1)).norm() < 1e-12);
}

TEST_CASE("figures: three self-contained SVG panels per run") {
    RunConfig cfg = caption_preset(2);
    cfg.tau_max = 40.0;
    cfg.tau_step = 0.1;
    const SimulationResult res = run_simulation(cfg);
    const fs::path dir = temp_dir();
    const auto files = emit_figures(res, dir.string());
    REQUIRE(files.size() == 3);
    for (const auto& f : files) {
        CAPTURE(f);
        REQUIRE(fs::exists(f));
        const std::string body = read_file(f);
        CHECK(body.rfind("<?xml", 0) == 0);
        CHECK(body.find("<svg") != std::string::npos);
        CHECK(body.find("</svg>") != std::string::npos);
        CHECK(body.find("href") == std::string::npos);  // no external references
        CHECK(fs::path(f).extension() == ".svg");
    }
}

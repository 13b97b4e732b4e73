#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <axikernel/fields.hpp>
#include <axikernel/grid_io.hpp>

#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

struct CliFixture {
    fs::path dir;
    CliFixture() {
        dir = fs::temp_directory_path() / ("axikernel_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~CliFixture() { fs::remove_all(dir); }

    RunResult run(const std::string& args) const {
        const fs::path out = dir / "stdout.txt";
        const fs::path err = dir / "stderr.txt";
        const std::string cmd = std::string(AXIKERNEL_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2> " + err.string();
        const int status = std::system(cmd.c_str());
        RunResult res;
        res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p);
            return std::string((std::istreambuf_iterator<char>(in)), {});
        };
        res.out = slurp(out);
        res.err = slurp(err);
        return res;
    }
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("eval emits rows, flags singular points, honours files") {
    CliFixture cli;

    auto res = cli.run("eval Gamma 1,1,1 2,2,2");
    CHECK(res.exit_code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "r,rho,zeta,value,error_estimate,flag");
    const auto row1 = split(rows[1]);
    REQUIRE(row1.size() == 6);
    CHECK(std::abs(std::stod(row1[3]) - 0.062575768364293918) < 1e-7);
    CHECK(row1[5] == "ok");
    CHECK(std::abs(std::stod(split(rows[2])[3]) - 0.5 * 0.062575768364293918) < 1e-7);

    res = cli.run("eval G 1,0,1,0");
    CHECK(res.exit_code == 0);
    CHECK(split(lines(res.out)[1])[4] == "0");

    res = cli.run("eval Gamma 1,1,0");
    CHECK(res.exit_code == 0);
    const auto srow = split(lines(res.out)[1]);
    CHECK(srow[3].empty());
    CHECK(srow[5] == "singular");

    // file input
    const fs::path pts = cli.dir / "points.csv";
    {
        std::ofstream os(pts);
        os << "# comment\nr,rho,zeta\n1,1,1\n0.5,2.5,-0.3\n";
    }
    res = cli.run("eval Gamma --in " + pts.string());
    CHECK(res.exit_code == 0);
    CHECK(lines(res.out).size() == 3);

    // malformed input
    res = cli.run("eval Gamma 1,1");
    CHECK(res.exit_code == 2);
    res = cli.run("eval Wrong 1,1,1");
    CHECK(res.exit_code == 2);
}

TEST_CASE("eval determinism: identical invocations produce identical bytes") {
    CliFixture cli;
    const auto a = cli.run("eval Gamma 1,1,1 0.3,0.7,0.2 --tol-rel 1e-10");
    const auto b = cli.run("eval Gamma 1,1,1 0.3,0.7,0.2 --tol-rel 1e-10");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);
}

TEST_CASE("verify-bounds: gate pass, CSV shape, usage errors") {
    CliFixture cli;
    auto res = cli.run("verify-bounds --kinds lp --p 1 --r-samples 0.25,1,4");
    CHECK(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] ==
          "kind,parameter,r,value,fitted_exponent,reference_exponent,constant,"
          "max_ratio_deviation");
    const auto row = split(rows[1]);
    CHECK(row[0] == "lp");
    CHECK(std::abs(std::stod(row[4])) < 1e-3);         // fitted exponent == 0
    CHECK(std::abs(std::stod(row[3]) - 1.0) < 1e-3);   // the exact anchor N_1 == 1

    // delta = 1 is out of range -> usage error naming the valid range
    res = cli.run("verify-bounds --kinds dz --delta 1");
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("[0, 1)") != std::string::npos);
    res = cli.run("verify-bounds --kinds lp --p 2");
    CHECK(res.exit_code == 2);
    res = cli.run("verify-bounds --kinds nope");
    CHECK(res.exit_code == 2);
}

TEST_CASE("identity-check subset runs and reports pass rows") {
    CliFixture cli;
    auto res = cli.run("identity-check --checks id1,id2,lemma,scaling");
    CHECK(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 1 + 18 + 3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CAPTURE(rows[i]);
        CHECK(rows[i].find(",pass") != std::string::npos);
    }
    res = cli.run("identity-check --checks bogus");
    CHECK(res.exit_code == 2);
}

TEST_CASE("oracle-compare passes at its gate and fails at an absurd one") {
    CliFixture cli;
    auto res = cli.run("oracle-compare");
    CHECK(res.exit_code == 0);
    const auto rows = lines(res.out);
    REQUIRE(rows.size() == 21);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].find(",pass") != std::string::npos);

    res = cli.run("oracle-compare --gate 1e-15");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find(",FAIL") != std::string::npos);
}

TEST_CASE("reconstruct writes both fields, prints the summary, stays deterministic") {
    CliFixture cli;
    // manufactured vorticity on a coarse grid
    axikernel::RectilinearGrid src;
    src.r_axis = axikernel::RectilinearGrid::linspace(0.0, 4.2, 85);
    src.z_axis = axikernel::RectilinearGrid::linspace(-4.2, 4.2, 169);
    const auto omega = axikernel::sample_field(src, axikernel::FieldQuantity::omega_theta,
                                               oracles::manufactured_vorticity,
                                               "manufactured test input");
    const fs::path in = cli.dir / "omega.csv";
    axikernel::write_scalar_field_csv(in, omega);

    const fs::path outL = cli.dir / "L.csv";
    const fs::path outV = cli.dir / "vel.csv";
    const std::string args = "reconstruct --in " + in.string() +
                             " --grid 0:2:11,-1:1:11 --out-stream " + outL.string() +
                             " --out-velocity " + outV.string() + " --delta 0.5";
    auto res = cli.run(args);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("sup_abs_L_theta=") != std::string::npos);
    CHECK(res.out.find("sup_r_pow_delta_abs_u_r=") != std::string::npos);
    CHECK(res.out.find("operator_roundtrip_sup_rel=") != std::string::npos);

    const auto L = axikernel::read_scalar_field_csv(outL);
    CHECK(L.quantity == axikernel::FieldQuantity::L_theta);
    CHECK(L.nr() == 11);
    const auto vel = axikernel::read_velocity_field_csv(outV);
    CHECK(vel.nz() == 11);

    // determinism of outputs without --stamp
    const fs::path outL2 = cli.dir / "L2.csv";
    auto res2 = cli.run("reconstruct --in " + in.string() +
                        " --grid 0:2:11,-1:1:11 --out-stream " + outL2.string());
    CHECK(res2.exit_code == 0);
    std::ifstream f1(outL), f2(outL2);
    const std::string b1((std::istreambuf_iterator<char>(f1)), {});
    const std::string b2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(b1 == b2);

    // usage/data errors
    CHECK(cli.run("reconstruct --grid 0:1:5,0:1:5").exit_code == 2);
    CHECK(cli.run("reconstruct --in " + in.string() + " --grid bad").exit_code == 2);
    CHECK(cli.run("reconstruct --in " + std::string("/nonexistent.csv") +
                  " --grid 0:1:5,0:1:5")
              .exit_code == 2);
}

TEST_CASE("zero-field reconstruction produces all-zero outputs") {
    CliFixture cli;
    axikernel::RectilinearGrid src;
    src.r_axis = axikernel::RectilinearGrid::linspace(0.0, 2.0, 9);
    src.z_axis = axikernel::RectilinearGrid::linspace(-1.0, 1.0, 9);
    const auto omega = axikernel::sample_field(src, axikernel::FieldQuantity::omega_theta,
                                               [](double, double) { return 0.0; });
    const fs::path in = cli.dir / "zero.csv";
    axikernel::write_scalar_field_csv(in, omega);
    const fs::path outL = cli.dir / "Lz.csv";
    auto res = cli.run("reconstruct --in " + in.string() +
                       " --grid 0:1.5:6,-0.5:0.5:6 --out-stream " + outL.string());
    CHECK(res.exit_code == 0);
    const auto L = axikernel::read_scalar_field_csv(outL);
    for (double v : L.values) CHECK(v == 0.0);
    CHECK(res.out.find("sup_abs_L_theta=0") != std::string::npos);
}

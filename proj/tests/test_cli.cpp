#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

#ifndef STABKIT_BIN
#error "STABKIT_BIN must point at the command-line binary"
#endif

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(STABKIT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("pair subcommand") {
    auto r = run("pair --basis clifford3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 3 7 14") != std::string::npos);
    CHECK(r.output.find("det = 1 (unimodular)") != std::string::npos);

    auto r2 = run("pair --basis clifford2");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("2 3 6") != std::string::npos);
    CHECK(r2.output.find("det = 8") != std::string::npos);

    auto r3 = run("pair --basis kappaY");
    CHECK(r3.exit_code == 0);
    CHECK(r3.output.find("-1 -1") != std::string::npos);
    CHECK(r3.output.find("0 -1") != std::string::npos);

    auto bad = run("pair --basis nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("walls subcommand finds the plane-class wall") {
    auto r = run("walls --char psi_P_Pi --beta=-5/4 --bound 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 wall(s)") != std::string::npos);
    CHECK(r.output.find("alpha_sq = 1/16") != std::string::npos);

    auto r2 = run("walls --char C1 --beta=-5/4 --bound 3");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("0 wall(s)") != std::string::npos);
}

TEST_CASE("walls outputs are byte-identical across runs and thread counts") {
    std::string p1 = tmp_path("w1"), p2 = tmp_path("w2");
    auto r1 = run("walls --char psi_P_Pi --beta=-5/4 --bound 5 --threads 1 --out " + p1);
    auto r2 = run("walls --char psi_P_Pi --beta=-5/4 --bound 5 --threads 8 --out " + p2);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    for (const char* ext : {".csv", ".json", ".svg"}) {
        CHECK(slurp(p1 + ext) == slurp(p2 + ext));
        std::remove((p2 + ext).c_str());
    }
    auto r3 = run("walls --char psi_P_Pi --beta=-5/4 --bound 5 --threads 1 --out " + p2);
    CHECK(r3.exit_code == 0);
    for (const char* ext : {".csv", ".json", ".svg"}) {
        CHECK(slurp(p1 + ext) == slurp(p2 + ext));
        std::remove((p1 + ext).c_str());
        std::remove((p2 + ext).c_str());
    }
}

TEST_CASE("plot subcommands") {
    auto hex = run("plot hexagon");
    CHECK(hex.exit_code == 0);
    CHECK(hex.output.find("<svg") == 0);
    CHECK(hex.output.find("kappa1 = [F]") != std::string::npos);
    CHECK(hex.output.find("kappa1+kappa2") != std::string::npos);

    auto xe = run("plot xieta --points C0,C1 --ray ell0");
    CHECK(xe.exit_code == 0);
    CHECK(xe.output.find("C0") != std::string::npos);
    CHECK(xe.output.find("ell0") != std::string::npos);
    CHECK(xe.output.find("<path") != std::string::npos);

    CHECK(run("plot xieta").exit_code == 0);
    CHECK(run("plot nonsense").exit_code == 2);

    auto a = run("plot hexagon");
    CHECK(a.output == hex.output);  // determinism
}

TEST_CASE("pick subcommand") {
    auto r = run("pick 2 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(2,1)") != std::string::npos);
    CHECK(r.output.find("(1,0)") != std::string::npos);
    CHECK(r.output.find("(1,1)") != std::string::npos);

    auto leaf = run("pick 1 0");
    CHECK(leaf.exit_code == 0);
    CHECK(leaf.output.find("kappa2-orbit") != std::string::npos);

    auto bad = run("pick 2 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("gcd 2") != std::string::npos);
}

TEST_CASE("char and tilt subcommands") {
    auto r = run("char --char C1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"-13/3\"") != std::string::npos);

    auto rj = run("char --char \"{\\\"kappabar\\\":[0,1]}\"");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("kappabar") != std::string::npos);

    auto t = run("tilt --char C1 --alpha-sq 1/64 --beta=-5/4");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("(-3/16, 2)") != std::string::npos);

    CHECK(run("char --char nonsense").exit_code == 2);
}

TEST_CASE("verify subcommand reports the single recorded failure, deterministically") {
    std::string p1 = tmp_path("v1.json"), p2 = tmp_path("v2.json");
    auto r1 = run("verify --out " + p1);
    // One failing check is expected: the stated P2 Gram determinant does
    // not match its own matrix. Everything else must pass.
    CHECK(r1.exit_code == 1);
    CHECK(r1.output.find("1 failure(s)") != std::string::npos);
    CHECK(r1.output.find("FAIL  gram_p2_det_stated") != std::string::npos);
    size_t first = r1.output.find("FAIL");
    CHECK(r1.output.find("FAIL", first + 1) == std::string::npos);
    auto r2 = run("verify --out " + p2);
    CHECK(r2.exit_code == 1);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(r1.output == r2.output);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("config file provides defaults, flags win") {
    std::string cfg = tmp_path("cfg.txt");
    {
        std::ofstream out(cfg);
        out << "bound = 2\n";
    }
    auto low = run("--config " + cfg + " walls --char psi_P_Pi --beta=-5/4");
    CHECK(low.exit_code == 0);
    CHECK(low.output.find("bound 2") != std::string::npos);
    auto flag = run("--config " + cfg + " walls --char psi_P_Pi --beta=-5/4 --bound 5");
    CHECK(flag.exit_code == 0);
    CHECK(flag.output.find("bound 5") != std::string::npos);
    std::remove(cfg.c_str());
}

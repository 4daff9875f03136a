// Exercises the installed CLI binary end to end. The binary path comes from
// the HEUNC_CLI environment variable (set by the ctest registration).

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "heunc/connection.hpp"
#include "heunc/io.hpp"

using namespace heunc;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("HEUNC_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("connect emits the pair as JSON", "[cli]") {
    const auto r = run_cli("connect --alpha 0.5 --beta 0.8 --gamma 0.9 --matrix none");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    const Cx c11 = complex_from_json(j.at("c11"));
    CHECK(std::abs(c11 - q1(Cx(0.5), Cx(0.8), Cx(0.9))) < 1e-15);
    const Cx c12 = complex_from_json(j.at("c12"));
    CHECK(std::abs(c12 - q2(Cx(0.5), Cx(0.8), Cx(0.9))) < 1e-15);
}

TEST_CASE("connect matrix JSON parses back into the library type", "[cli]") {
    const auto r = run_cli("connect --alpha 0.5 --beta 0.8 --gamma 0.9 --matrix inf+");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.at("matrices").size() == 1);
    const ConnectionMatrix m = matrix_from_json(j.at("matrices").at(0));
    CHECK(m.kind == MatrixKind::inf_plus);
    CHECK(m.branch_tag == default_branch(MatrixKind::inf_plus));
    const ConnectionMatrix ref = matrix(MatrixKind::inf_plus,
                                        SubclassParams(Cx(0.5), Cx(0.8), Cx(0.9)));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(std::abs(m.entries[a][b] - ref.entries[a][b]) == 0.0);
}

TEST_CASE("coeffs with alpha = 0 streams 1, 0, 0, ...", "[cli]") {
    const auto r = run_cli("coeffs --alpha 0 --beta 0.8 --gamma 0.9 --n-max 6 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("k,re,im") == 0);
    CHECK(r.out.find("0,1,0") != std::string::npos);
    CHECK(r.out.find("1,0,0") != std::string::npos);
    CHECK(r.out.find("6,0,0") != std::string::npos);
}

TEST_CASE("verify passes on the reference parameters", "[cli]") {
    const auto r = run_cli("verify --alpha 0.5 --beta 0.8 --gamma 0.9 --points 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all identities verified") != std::string::npos);
}

TEST_CASE("limit-table emits deterministic CSV", "[cli]") {
    const std::string args = "limit-table --alpha 0.5 --beta 0.8 --gamma 0.9 --n-max 32";
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("n,raw_re,raw_im,extrapolant_re,extrapolant_im,"
                      "rel_err_vs_closed_form") == 0);
}

TEST_CASE("lemmas subcommand passes", "[cli]") {
    const auto r = run_cli("lemmas");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all lemma checks passed") != std::string::npos);
}

TEST_CASE("exit code taxonomy", "[cli]") {
    CHECK(run_cli("frobnicate").exit_code == 1);                       // usage
    CHECK(run_cli("connect --no-such-flag 1").exit_code == 1);         // usage
    CHECK(run_cli("connect --alpha 0.5 --beta 0.8 --gamma 1").exit_code == 2);
    CHECK(run_cli("eval --alpha 0.5 --beta 0.8 --gamma 0.9 --path \"0.2;0.999\"")
              .exit_code == 3);                                        // too close to z=1
    // unreachable integration tolerance
    CHECK(run_cli("eval --solution y01 --path \"0.2;0.4\" --tol 1e-30").exit_code == 3);
    // connection-domain violation surfaces as a numerical failure
    CHECK(run_cli("connect --alpha 1.5 --beta 1.6 --gamma 0.9").exit_code == 3);
    // help exits 0
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("eval csv at points", "[cli]") {
    const auto r = run_cli("eval --alpha 0.5 --beta 0.8 --gamma 0.9 --solution y01 "
                           "--points 0.5 --tol 1e-15 --format csv");
    REQUIRE(r.exit_code == 0);
    // y01(0.5) = 1.0298155296866662...
    CHECK(r.out.find("1.0298155296866") != std::string::npos);
}

// End-to-end tests of the command-line tool: exit-code contract, output
// schemas, byte-level determinism, and bit-equality with direct library
// calls (the tool must be a thin shell over the library).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsics/bargmann.hpp"
#include "epsics/polyfock.hpp"
#include "epsics/sampled_function.hpp"
#include "epsics/specfun.hpp"
#include "epsics/states.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef EPSICS_CLI_PATH
#error "EPSICS_CLI_PATH must point at the built command-line tool"
#endif

namespace {

using cxd = std::complex<double>;

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(EPSICS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
    const int status = pclose(pipe);
    RunResult r;
    r.out = std::move(text);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

TEST_CASE("basis evaluation is a thin shell over the library") {
    const RunResult r = run_cli(
        "--command eval --quantity phi --m 0 --n 2 --z-re 0.5 --z-im -0.25");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "z_re,z_im,value_re,value_im");
    const cxd v = epsics::polyfock::phi({0, 2}, cxd{0.5, -0.25});
    const std::string want = fmt(0.5) + "," + fmt(-0.25) + "," +
                             fmt(v.real()) + "," + fmt(v.imag());
    CHECK(lines[1] == want);
}

TEST_CASE("kernel evaluation over a grid matches the library bit for bit") {
    const std::string args =
        "--command eval --quantity kernel-overlap --m 2 --eps 0.6 "
        "--grid-re -1,1,3 --grid-im 0,1,2 --w-re 0.4 --w-im -0.2";
    const RunResult r = run_cli(args);
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 3 * 2);
    CHECK(lines[0] == "z_re,z_im,w_re,w_im,value_re,value_im");
    // Row order is re-major; recompute each row in-process.
    int row = 1;
    for (double re : {-1.0, 0.0, 1.0}) {
        for (double im : {0.0, 1.0}) {
            const cxd v =
                epsics::states::overlap(cxd{re, im}, cxd{0.4, -0.2}, 2, 0.6)
                    .value;
            const std::string want = fmt(re) + "," + fmt(im) + "," +
                                     fmt(0.4) + "," + fmt(-0.2) + "," +
                                     fmt(v.real()) + "," + fmt(v.imag());
            CHECK(lines[row] == want);
            ++row;
        }
    }

    // Re-running the identical command yields identical bytes.
    const RunResult again = run_cli(args);
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
}

TEST_CASE("transform output pins its quadrature order and values") {
    const RunResult r = run_cli(
        "--command transform --m 0 --eps 0 --input hermite-eigenstate:1 "
        "--z-re 0.6");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "# quad_order=96");
    CHECK(lines[1] == "z_re,z_im,value_re,value_im");
    epsics::bargmann::TransformSpec spec;
    spec.m = 0;
    spec.eps = 0.0;
    const std::vector<cxd> vals = epsics::bargmann::transform_grid(
        spec, epsics::SampledFunction::eigenstate(1),
        std::vector<cxd>{cxd{0.6, 0.0}});
    const std::string want = fmt(0.6) + "," + fmt(0.0) + "," +
                             fmt(vals[0].real()) + "," + fmt(vals[0].imag());
    CHECK(lines[2] == want);
}

TEST_CASE("JSON output parses and round-trips the library doubles") {
    const RunResult r = run_cli(
        "--command eval --quantity phi --m 1 --n 3 --z-re 1 --z-im 0.5 "
        "--format json");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    const nlohmann::json j = nlohmann::json::parse(lines[0]);
    const cxd v = epsics::polyfock::phi({1, 3}, cxd{1.0, 0.5});
    CHECK(j.at("value_re").get<double>() == v.real());
    CHECK(j.at("value_im").get<double>() == v.imag());
    CHECK(j.at("z_re").get<double>() == 1.0);
}

TEST_CASE("verification command reports suites and gates the exit code") {
    const RunResult r =
        run_cli("--command verify --quantity thermal_shift,overlap_limit");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "suite,defect_abs,defect_rel,tolerance,passed,runtime_ms");
    CHECK(lines[1].rfind("thermal_shift,", 0) == 0);
    CHECK(lines[2].rfind("overlap_limit,", 0) == 0);
    // The passed column is the fifth field and reads 1.
    std::istringstream row(lines[1]);
    std::string field;
    for (int i = 0; i < 5; ++i) std::getline(row, field, ',');
    CHECK(field == "1");

    const RunResult js =
        run_cli("--command verify --quantity thermal_shift --format json");
    CHECK(js.code == 0);
    const nlohmann::json parsed =
        nlohmann::json::parse(lines_of(js.out).at(0));
    CHECK(parsed.at("suite").get<std::string>() == "thermal_shift");
    CHECK(parsed.at("passed").get<bool>());
}

TEST_CASE("sweep output carries one row per damping value") {
    const RunResult r = run_cli(
        "--command sweep --quantity overlap-limit --m 1 --z-re 0.5 "
        "--w-re 0.3 --w-im 0.2");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "eps,defect");
    CHECK(lines[1].rfind(fmt(0.1) + ",", 0) == 0);
    CHECK(lines[2].rfind(fmt(0.01) + ",", 0) == 0);
    CHECK(lines[3].rfind(fmt(0.001) + ",", 0) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("--command frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--command eval --quantity phi").code == 2); // missing --n
    CHECK(run_cli("--command eval --quantity no-such-thing").code == 2);
    CHECK(run_cli("--command verify --quantity no_such_suite").code == 2);
    CHECK(run_cli("--command eval --quantity wavefunction --m 1").code ==
          2); // missing --eps
    CHECK(run_cli("--command eval --quantity phi --n 1 --grid-re 0,1,3")
              .code == 2); // grid-re without grid-im
    CHECK(run_cli("--command eval --quantity phi --n 1 --grid-re nonsense "
                  "--grid-im 0,1,2")
              .code == 2);
    CHECK(run_cli("--command transform --eps 0.5").code == 2); // no input
}

TEST_CASE("numerical domain errors exit with code 3") {
    CHECK(run_cli("--command eval --quantity kernel-overlap --eps -1").code ==
          3);
    CHECK(run_cli("--command eval --quantity mehler --tau 1.5").code == 3);
    CHECK(run_cli("--command verify --quantity gram --quad-radial 2").code ==
          3);
    CHECK(run_cli("--command eval --quantity phi --n -3 --m 0").code == 3);
}

TEST_CASE("input and output failures exit with code 4") {
    CHECK(run_cli("--command transform --eps 0.5 "
                  "--input /nonexistent/file.csv")
              .code == 4);
    CHECK(run_cli("--command eval --quantity phi --n 0 "
                  "--out /nonexistent-dir/out.csv")
              .code == 4);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("--command") != std::string::npos);
}

TEST_CASE("file input round-trips through the transform") {
    // Write dense samples of the ground state, transform them, and compare
    // with the exact-callback path (the two differ only by interpolation).
    const std::string path = "/tmp/epsics_cli_test_input.csv";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fprintf(f, "x,value\n");
        for (int i = 0; i <= 3000; ++i) {
            const double x = -7.5 + 0.005 * i;
            std::fprintf(f, "%.17g,%.17g\n", x,
                         epsics::specfun::ho_eigenfunction(0, x));
        }
        std::fclose(f);
    }
    // The interpolation error of the sampled input dominates the
    // doubled-order self-check, so its tolerance is opened up to match.
    const RunResult r = run_cli("--command transform --m 0 --eps 0.4 "
                                "--input " +
                                path +
                                " --z-re 0.5 --quad-hermite 64 "
                                "--adequacy-tol 1e-4");
    std::remove(path.c_str());
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "# quad_order=64");
    const double got = std::strtod(
        lines[2].substr(lines[2].find(',', lines[2].find(',') + 1) + 1)
            .c_str(),
        nullptr);
    epsics::bargmann::TransformSpec spec;
    spec.m = 0;
    spec.eps = 0.4;
    spec.quad_order = 64;
    const cxd want = epsics::bargmann::transform(
        spec, epsics::SampledFunction::eigenstate(0), cxd{0.5, 0.0});
    CHECK(std::abs(got - want.real()) < 1e-5);
}

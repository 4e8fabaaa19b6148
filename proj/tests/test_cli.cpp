#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SWE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

double json_number(const std::string& json, const std::string& key) {
    const std::string pat = "\"" + key + "\":";
    const size_t pos = json.find(pat);
    REQUIRE(pos != std::string::npos);
    return std::strtod(json.c_str() + pos + pat.size(), nullptr);
}

bool json_bool(const std::string& json, const std::string& key) {
    const std::string pat = "\"" + key + "\":";
    const size_t pos = json.find(pat);
    REQUIRE(pos != std::string::npos);
    return json.compare(pos + pat.size(), 4, "true") == 0;
}

} // namespace

TEST_CASE("theta-scan default window") {
    const RunResult r = run("theta-scan --mu 1 --a 5 --b 0");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 82); // header + 81 grid points
    CHECK(rows[0] == "lambda,theta");

    // sign change between the -0.85 and -0.80 rows
    double theta_85 = 0.0, theta_80 = 0.0;
    for (size_t i = 1; i < rows.size(); ++i) {
        double lam, th;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &lam, &th) == 2);
        if (std::fabs(lam - (-0.85)) < 1e-9) theta_85 = th;
        if (std::fabs(lam - (-0.80)) < 1e-9) theta_80 = th;
    }
    CHECK(theta_85 * theta_80 < 0.0);
}

TEST_CASE("theta-scan degenerate grid") {
    const RunResult r = run("theta-scan --mu 1 --a 5 --b 0 --lambda-min -1 --lambda-max 1 --step 5");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    double lam, th;
    REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf", &lam, &th) == 2);
    CHECK(lam == -1.0);
}

TEST_CASE("theta command, byte-identical determinism") {
    const RunResult a = run("theta --mu 1 --u1 5 --u2 0 --u3 0 --lambda 0");
    const RunResult b = run("theta --mu 1 --u1 5 --u2 0 --u3 0 --lambda 0");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(json_number(a.out, "theta") == doctest::Approx(0.033312848357523815).epsilon(1e-9));
    CHECK(json_bool(a.out, "converged"));
}

TEST_CASE("root reports all refined roots") {
    const RunResult r = run("root --mu 1 --a 5 --b 0");
    CHECK(r.exit_code == 0);
    CHECK(json_number(r.out, "n_roots") >= 1);
    // one of the roots is the documented one
    bool found = false;
    size_t pos = r.out.find("\"roots\":[");
    REQUIRE(pos != std::string::npos);
    const char* p = r.out.c_str() + pos + 9;
    while (*p && *p != ']') {
        char* end = nullptr;
        const double v = std::strtod(p, &end);
        if (end == p) break;
        if (std::fabs(v - (-0.8417200168449013)) <= 1e-9) found = true;
        p = (*end == ',') ? end + 1 : end;
    }
    CHECK(found);
}

TEST_CASE("eigen reproduces the reference pipeline") {
    const RunResult r = run("eigen --mu 1 --a 5 --b 0");
    CHECK(r.exit_code == 0);
    CHECK(json_number(r.out, "lambda0") == doctest::Approx(-0.8417200168449013).epsilon(1e-9));
    CHECK(json_number(r.out, "t0") == doctest::Approx(0.2793371978706399).epsilon(1e-7));
    CHECK(json_number(r.out, "gamma2") == doctest::Approx(8.7417666942941543).epsilon(1e-6));
    CHECK(json_number(r.out, "lambda") == doctest::Approx(-5.2736106330552739).epsilon(1e-6));
    CHECK(json_bool(r.out, "oracle_match"));
}

TEST_CASE("eigen with nonzero b still lands on the beta=0 surface") {
    const RunResult r = run("eigen --mu 1 --a 5 --b 0.3");
    CHECK(r.exit_code == 0);
    CHECK(json_bool(r.out, "oracle_match"));
}

TEST_CASE("trace emits the expected CSV") {
    const RunResult r =
        run("trace --mu 1 --a 5 --b 0 --lambda0 -0.8417200168449013 --tmax 0.5");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 100);
    CHECK(rows[0] == "t,u1,u2,u3,lambda,psi");
    double prev_lam = 0.0, cross_t = -1.0;
    for (size_t i = 1; i < rows.size(); ++i) {
        double t, u1, u2, u3, lam, psi;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf,%lf,%lf,%lf",
                            &t, &u1, &u2, &u3, &lam, &psi) == 6);
        CHECK(std::fabs(psi) <= 1e-9);
        if (i > 1 && prev_lam < 0.0 && lam >= 0.0) cross_t = t;
        prev_lam = lam;
    }
    CHECK(cross_t == doctest::Approx(0.2793).epsilon(1e-2));
}

TEST_CASE("oracle legendre limit") {
    const RunResult r = run("oracle --mu 1 --gamma2 0 --beta 0 --modes 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"lambdas\":[") != std::string::npos);
    const size_t pos = r.out.find('[');
    double l0, l1, l2;
    REQUIRE(std::sscanf(r.out.c_str() + pos, "[%lf,%lf,%lf", &l0, &l1, &l2) == 3);
    CHECK(l0 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(l1 == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(l2 == doctest::Approx(12.0).epsilon(1e-10));
}

TEST_CASE("verify deformation suite passes with the default seed") {
    const RunResult r = run("verify --suite deformation --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(json_bool(r.out, "pass"));
    // determinism with fixed seed
    const RunResult r2 = run("verify --suite deformation --seed 42");
    CHECK(r2.out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(run("theta --mu -1").exit_code == 2);       // invalid order
    CHECK(run("frobnicate").exit_code == 2);          // unknown subcommand
    CHECK(run("").exit_code == 2);                    // subcommand required
    CHECK(run("verify --suite nonsense").exit_code == 2);
    // no root of Theta in a window that excludes all zeros
    CHECK(run("root --mu 1 --a 5 --b 0 --lambda-min 0.8 --lambda-max 0.95 --step 0.05")
              .exit_code == 3);
    // crossing unreachable within a tiny horizon
    CHECK(run("eigen --mu 1 --a 5 --b 0 --tmax 0.01").exit_code == 4);
}

TEST_CASE("numbers round-trip at 17 significant digits") {
    const RunResult r = run("theta --mu 1 --u1 5 --u2 0 --u3 0 --lambda 0");
    const double v = json_number(r.out, "theta");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    CHECK(r.out.find(buf) != std::string::npos);
}

#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sconv/cli.hpp"

using namespace sconv;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "sconv_run");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

std::vector<std::string> lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("run writes a solution CSV with the exact solution") {
    const std::string path = "cli_sol.csv";
    REQUIRE(run({"run", "--case", "linear_advdiff", "--N", "40", "--k", "3", "--cfl", "1", "--beta",
                 "0.4", "--T", "0.5", "--out", path}) == 0);
    const auto l = lines(path);
    REQUIRE(l.size() == 42);
    CHECK(l[0] == "x,u,u_exact,error");
    std::remove(path.c_str());
}

TEST_CASE("convergence table and determinism") {
    const std::string a = "cli_conv_a.csv";
    const std::string b = "cli_conv_b.csv";
    const std::vector<std::string> args{"convergence", "--case", "linear_advdiff", "--k", "2",
                                        "--cfl", "0.5", "--beta", "0.5", "--N", "40,80,160"};
    auto with_out = [&](const std::string& p) {
        auto v = args;
        v.push_back("--out");
        v.push_back(p);
        return v;
    };
    REQUIRE(run(with_out(a)) == 0);
    REQUIRE(run(with_out(b)) == 0);
    const auto la = lines(a);
    CHECK(la == lines(b));
    REQUIRE(la.size() == 4);
    CHECK(la[0] == "N,linf_error,order");
    CHECK(la[1].rfind("40,0.0472", 0) == 0);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("stability command") {
    const std::string path = "cli_contour.csv";
    std::string text;
    REQUIRE(run({"stability", "--kind", "diffusion", "--k", "3", "--beta", "0.8375", "--n-kappa",
                 "64", "--n-ratio", "16", "--out", path},
                &text) == 0);
    CHECK(text.find("max_abs_lambda=1") != std::string::npos);
    CHECK(lines(path).size() == 64 * 16 + 1);
    std::remove(path.c_str());
}

TEST_CASE("bad input yields a non-zero status") {
    std::string text;
    CHECK(run({"run", "--case", "unknown_case"}, &text) != 0);
    CHECK(text.find("unknown case") != std::string::npos);
    CHECK(run({"run", "--bogus"}) != 0);
    CHECK(run({"run", "--k", "4"}) != 0);
    CHECK(run({"run", "--param", "c"}) != 0);
    CHECK(run({}) != 0);
}

TEST_CASE("compare-reference on a small grid") {
    std::string text;
    REQUIRE(run({"compare-reference", "--case", "buckley_leverett", "--N", "50", "--nref", "200",
                 "--T", "0.05"},
                &text) == 0);
    CHECK(text.find("linf=") != std::string::npos);
}

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(UQB2_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, NormalFormOfE2E1) {
    const auto r = run("nf --m 5 'e2*e1'");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["terms"].size(), 2u);
    // Sorted on (i, j, k, n): e1 e2 before e3.
    EXPECT_EQ(j["terms"][0]["k"], 1);
    EXPECT_EQ(j["terms"][0]["n"], 1);
    EXPECT_EQ(j["terms"][1]["j"], 1);
    // q^-2 = q^3 at m = 5.
    EXPECT_EQ(j["terms"][0]["coeff"], json({"0", "0", "0", "1"}));
    EXPECT_EQ(j["terms"][1]["coeff"], json({"0", "0", "0", "-1"}));
}

TEST(Cli, PiDegreeOfBuiltin) {
    const auto r = run("pideg --m 8 --matrix uqb2");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["invariant_factors"], json({2, 2, 0, 0}));
    EXPECT_EQ(j["pi_degree"], 4);
}

TEST(Cli, CentralReportsWitness) {
    const auto r = run("central --m 5 e1");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j["central"].get<bool>());
    EXPECT_FALSE(j["witness"].is_null());
    const auto z = json::parse(run("central --m 5 z1").out);
    EXPECT_TRUE(z["central"].get<bool>());
}

TEST(Cli, ParseErrorExitsWithTwo) {
    EXPECT_EQ(run("nf --m 5 'e1 +'").code, 2);
    EXPECT_EQ(run("nf --m 4 e1").code, 2);
    EXPECT_EQ(run("nf").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("simple --m 5 --family V1p --params 0,1,1,0").code, 2);
}

TEST(Cli, CheckModuleExitCodes) {
    EXPECT_EQ(run("check-module --m 5 --family V4p --params 1,1,0").code, 0);
    EXPECT_EQ(run("check-module --m 5 --family V1p --params 1,1,1,0 --variant corrected").code, 0);
    EXPECT_EQ(run("check-module --m 5 --family V1p --params 1,1,1,0").code, 1);
}

TEST(Cli, SimpleCertificate) {
    const auto r = run("simple --m 8 --family V3p --params 1,1");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["simple"].get<bool>());
    EXPECT_EQ(j["certificate"], 4);
}

TEST(Cli, IsoWitness) {
    const auto r = run("iso --m 5 --family V1p --params1 '1,q^-2,1,1' --params2 1,1,1,0");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["isomorphic"].get<bool>());
    EXPECT_EQ(j["witness_p"], 1);
}

TEST(Cli, CenterReportAndTorus) {
    EXPECT_EQ(run("center-report --m 6").code, 0);
    EXPECT_EQ(run("torus-check --m 5 --variant corrected").code, 0);
    EXPECT_EQ(run("torus-check --m 5").code, 1);
    EXPECT_EQ(run("torus-check --m 8").code, 0);
}

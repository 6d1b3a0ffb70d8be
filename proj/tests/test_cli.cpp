#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cylroman/matrix_io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(CYLROMAN_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cylroman_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, Words) {
    EXPECT_EQ(cli("words --m 6").out, "count: 848\n");
    const auto listed = cli("words --m 2 --list");
    EXPECT_EQ(listed.code, 0);
    EXPECT_EQ(count_lines(listed.out), 11u);
    EXPECT_EQ(cli("words --m 1").code, 2);
}

TEST(Cli, Gamma) {
    EXPECT_EQ(cli("gamma --m 7 --n 5").out, "gamma_R(P_7 x C_5) = 16\n");
    EXPECT_EQ(cli("gamma --m 2 --n 3").out, "gamma_R(P_2 x C_3) = 4\n");
    const auto j = nlohmann::json::parse(cli("gamma --m 3 --n 4 --format machine").out);
    EXPECT_EQ(j["gamma_R"], 6);
    EXPECT_TRUE(j["timing"].contains("total_s"));
}

TEST(Cli, Recurrence) {
    const auto r3 = cli("recurrence --m 3 --format machine");
    EXPECT_EQ(r3.code, 0);
    const auto j = nlohmann::json::parse(r3.out);
    EXPECT_EQ(j["n0"], 11);
    EXPECT_EQ(j["alpha"], 4);
    EXPECT_EQ(j["beta"], 6);
    EXPECT_EQ(j["diagonal_minima"].size(), 50u);
    EXPECT_EQ(j["diagonal_minima"][2], 5);  // n = 3

    const auto border = cli("recurrence --m 4 --variant border");
    EXPECT_NE(border.out.find("n0=30 alpha=1 beta=1"), std::string::npos);

    const auto missing = cli("recurrence --m 2 --max-power 5");
    EXPECT_EQ(missing.code, 5);
    EXPECT_NE(missing.out.find("recurrence not found"), std::string::npos);
}

TEST(Cli, WarmCacheDoesNoProducts) {
    const auto dir = temp_path("cache");
    std::filesystem::remove_all(dir);
    const std::string args = "recurrence --m 4 --max-power 25 --format machine --cache-dir " + dir.string();
    const auto cold = nlohmann::json::parse(cli(args).out);
    const auto warm = nlohmann::json::parse(cli(args).out);
    std::filesystem::remove_all(dir);
    EXPECT_EQ(cold["counters"]["products"], 24);
    EXPECT_EQ(warm["counters"]["products"], 0);
    EXPECT_EQ(warm["counters"]["cache_hits"], 25);
    EXPECT_EQ(warm["n0"], cold["n0"]);
}

TEST(Cli, Formula) {
    const auto out = cli("formula --m 5 --n 12 --format machine");
    EXPECT_EQ(out.code, 0);
    const auto j = nlohmann::json::parse(out.out);
    EXPECT_EQ(j["alpha"], 5);
    EXPECT_EQ(j["beta"], 12);
    EXPECT_TRUE(j["verification"]["ceiling_form_verified"]);
    EXPECT_EQ(j["evaluate"]["gamma_R"], 30);
}

TEST(Cli, Bound) {
    EXPECT_NE(cli("bound --m 15 --n 13").out.find("= 84"), std::string::npos);
    const auto exact = cli("bound --m 10 --n 10").out;
    EXPECT_NE(exact.find("= 44"), std::string::npos);
    EXPECT_NE(exact.find("exact (n = 0 mod 5)"), std::string::npos);
}

TEST(Cli, LossVerify) {
    const auto j = nlohmann::json::parse(cli("loss-verify --from 10 --to 14 --format machine").out);
    ASSERT_EQ(j["rows"].size(), 5u);
    EXPECT_EQ(j["rows"][0]["twice_min_loss"], 10);
    EXPECT_EQ(j["recurrence"]["n0"], 30);
}

TEST(Cli, Oracle) {
    const auto out = cli("oracle --m 3 --n 5");
    EXPECT_EQ(out.code, 0);
    EXPECT_NE(out.out.find("all methods agree"), std::string::npos);
    const auto grid = temp_path("cert.txt");
    const auto cert = cli("oracle --m 4 --n 5 --mode dp --out " + grid.string());
    EXPECT_NE(cert.out.find("weight 10, valid"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(grid));
    std::filesystem::remove(grid);
    EXPECT_EQ(cli("oracle --m 9 --n 9").code, 3);
}

TEST(Cli, MatrixFiles) {
    const auto path = temp_path("a3.trpm");
    EXPECT_EQ(cli("matrix --m 3 --out " + path.string()).code, 0);
    EXPECT_EQ(cylroman::read_matrix(path).dim(), 33u);
    EXPECT_TRUE(std::filesystem::exists(path.string() + ".words"));
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".words");
}

TEST(Cli, ErrorExitCodes) {
    EXPECT_EQ(cli("matrix --m 12").code, 3);
    EXPECT_EQ(cli("matrix --m 3 --out /nonexistent_dir/x.trpm").code, 4);
    EXPECT_EQ(cli("gamma --m 3").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("power --m 5 --memory-budget-mib 0").code, 3);
}

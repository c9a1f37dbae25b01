#include "cli_runner.hpp"

#include <doctest.h>
#include <json.hpp>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using testutil::run_cli;

namespace {

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        path_ = (std::filesystem::temp_directory_path() /
                 ("eqcolor_test_" + std::to_string(counter_++) + "_" +
                  std::to_string(::getpid()) + ".tmp"))
                    .string();
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::string path_;
};

}  // namespace

TEST_CASE("cli: threshold") {
    auto res = run_cli({"threshold", "7", "7"});
    CHECK(res.exit_code == 0);
    CHECK(res.output == "p=8 d=2\n");
}

TEST_CASE("cli: p for feasible and infeasible q") {
    auto ok = run_cli({"p", "--q", "6", "7", "7"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "p=6 d=3\n");

    auto bad = run_cli({"p", "--q", "5", "7", "7"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("no equitable 5-coloring") != std::string::npos);
}

TEST_CASE("cli: color emits json that check accepts") {
    auto res = run_cli({"color", "--r", "4", "7", "7", "--format", "json"});
    CHECK(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.output);
    CHECK(doc["schema"] == 1);
    CHECK(doc["r"] == 4);
    CHECK(doc["classes"] == nlohmann::json({{4, 3}, {4, 3}}));
    CHECK(doc["empty_classes"] == 0);

    TempFile file(res.output);
    auto check = run_cli({"check", "--coloring", file.path(), "7", "7"});
    CHECK(check.exit_code == 0);
    CHECK(check.output == "valid\n");
}

TEST_CASE("cli: check flags a bad coloring") {
    TempFile file(R"({"schema":1,"r":4,"classes":[[4,3],[5,2]],"empty_classes":0})");
    auto res = run_cli({"check", "--coloring", file.path(), "7", "7"});
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("invalid") != std::string::npos);
}

TEST_CASE("cli: spectrum marks the gaps") {
    auto res = run_cli({"spectrum", "--max", "14", "7", "7"});
    CHECK(res.exit_code == 0);
    CHECK(res.output == "feasible: 2,4,6,8-14; infeasible: 1,3,5,7\n");
}

TEST_CASE("cli: feasible with oracle cross-check") {
    auto yes = run_cli({"feasible", "--r", "6", "--oracle", "7", "7"});
    CHECK(yes.exit_code == 0);
    CHECK(yes.output == "feasible\n");

    auto no = run_cli({"feasible", "--r", "7", "--oracle", "7", "7"});
    CHECK(no.exit_code == 1);
    CHECK(no.output == "infeasible\n");
}

TEST_CASE("cli: sizes from a file with comments") {
    TempFile file("# two equal parts\n7\n7  # second\n\n");
    auto res = run_cli({"threshold", "--file", file.path()});
    CHECK(res.exit_code == 0);
    CHECK(res.output == "p=8 d=2\n");
}

TEST_CASE("cli: malformed input exits 2") {
    CHECK(run_cli({"threshold"}).exit_code == 2);
    CHECK(run_cli({"threshold", "0", "4"}).exit_code == 2);
    CHECK(run_cli({"threshold", "seven"}).exit_code == 2);
    CHECK(run_cli({"frobnicate", "7", "7"}).exit_code == 2);
    TempFile file("7\nseven\n");
    CHECK(run_cli({"threshold", "--file", file.path()}).exit_code == 2);
}

TEST_CASE("cli: identical argv gives byte-identical output") {
    for (auto args : {std::vector<std::string>{"spectrum", "9", "4", "2"},
                      {"color", "--r", "5", "9", "4", "2", "--format", "json"},
                      {"threshold", "9", "4", "2", "--format", "json"}}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

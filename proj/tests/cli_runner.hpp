#ifndef EQCOLOR_TESTS_CLI_RUNNER_HPP
#define EQCOLOR_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace testutil {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// The CLI binary sits next to the test executables.
inline std::string cli_path() {
    const auto dir = std::filesystem::read_symlink("/proc/self/exe").parent_path();
    return (dir / "eqcolor").string();
}

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    return quoted + "'";
}

inline CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = true) {
    std::string cmd = shell_quote(cli_path());
    for (const auto& arg : args) cmd += " " + shell_quote(arg);
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testutil

#endif

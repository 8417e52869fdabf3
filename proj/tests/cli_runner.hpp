#pragma once

// Minimal subprocess capture for driving the CLI binary from tests.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace testcli {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

// Runs the CLI (path via the DARBOUX_CLI_PATH compile definition) with the
// given argument string under the shell.
inline RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DARBOUX_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace testcli

#ifndef DIOREC_TESTS_SPAWN_HPP
#define DIOREC_TESTS_SPAWN_HPP

// Minimal popen wrapper for driving the CLI binary from tests: runs a shell
// command, captures its combined output, and reports the exit code.

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run_command(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

#endif

#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the exit code with both output streams captured, so the
// same code path serves the binary and the tests.
//
// Exit codes: 0 every verdict passes, 1 at least one violation, 2 input error.

#include <cstdint>
#include <string>
#include <vector>

namespace aptrans {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

/// "%.2e": three significant digits.
std::string sci3(double x);

}  // namespace aptrans

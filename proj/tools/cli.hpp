#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace hyp::cli {

inline constexpr const char* kVersion = "1.0.0";

/// One invocation: the subcommand path, the input document it read, the output document and
/// the exit code (0 iff the output has no "error" field; 2 for usage errors).
struct CommandEnvelope {
    std::vector<std::string> subcommand;
    io::json input;
    io::json output;
    int exit_code = 0;
    std::string usage;        // set for exit code 2 and --help
    std::string output_path;  // "-" for stdout
    std::string text;         // verbatim output; JSON unless usage or help
};

/// Parses and executes argv (without the program name).
CommandEnvelope run(const std::vector<std::string>& args);

/// Runs and writes the envelope to its stream; returns the exit code.
int main_entry(int argc, char** argv);

}  // namespace hyp::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twistrb::cli {

struct Options {
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t samples = 30;
    std::optional<std::size_t> nmax;
    std::optional<std::size_t> order;
    std::vector<std::string> files;
    std::string b_file;
    std::string h_file;
    std::string candidates_file;
    std::string write_dir;
    std::string check_dir;
    std::string form = "printed"; // linfty-audit: printed | derived
    bool twisted = false;         // linfty-audit: audit the structure twisted by T
    std::size_t max_degree = 1;   // linfty-audit: sample degrees 1..max_degree
};

enum ExitCode : int { Pass = 0, MathFailure = 1, MalformedInput = 2 };

const std::vector<std::string>& command_names();
std::string command_help(const std::string& command);

/// Runs one command and writes its report. Returns the exit code.
int run(const std::string& command, const Options& options, std::ostream& out, std::ostream& err);

} // namespace twistrb::cli

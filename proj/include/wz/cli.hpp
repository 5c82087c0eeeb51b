#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wz/big_rational.hpp"

namespace wz {

enum class OutputFormat { text, json };

struct CliConfig {
    std::string command; // verify | discover | telescope | prove | selftest
    std::optional<std::string> term_src;
    std::optional<std::string> cert_src;
    std::optional<unsigned> m;
    std::optional<unsigned> n;
    std::optional<BigRational> x_val;
    unsigned degree = 2;
    unsigned span = 0;
    std::optional<std::string> trace_path;
    unsigned max_grid = 12;
    std::uint64_t seed = 20240601;
    std::size_t samples = 100;
    std::size_t property_cases = 1000;
    OutputFormat output_format = OutputFormat::text;
};

// Process exit codes; never conflated.
inline constexpr int exit_success = 0;
inline constexpr int exit_failure = 1; // a mathematical check failed
inline constexpr int exit_usage = 2;   // bad arguments or unparsable input

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wz

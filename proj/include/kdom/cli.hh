#ifndef KDOM_CLI_HH
#define KDOM_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace kdom
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int parse_error = 2;
        inline constexpr int budget_exceeded = 3;
        inline constexpr int verification_failed = 4;
        inline constexpr int ratio_violation = 5;
    }

    /// Entry point for the kdom command line; args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif

#ifndef SIGFOUR_CLI_HPP
#define SIGFOUR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sigfour::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_certification_failed = 1;
inline constexpr int exit_usage = 2;

/**
 * Run one command line. args excludes the program name.
 *
 * Subcommands: eval, periods, table, certify. The payload (JSON or CSV) goes
 * to out and nothing else does; diagnostics go to err. Returns exit_ok,
 * exit_certification_failed when a certify run has a failing check, or
 * exit_usage on bad flags and domain errors. Never throws.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aircover {

/// Command-line entry point.
///
/// Subcommands:
///   sweep --config <path> --out <csv> [--figures <dir>]
///   point --link tn|ntn (--distance-km X | --elevation-deg Y) --height-m H [overrides]
///   paper-figs --out <dir>
///
/// Exit codes: 0 success, 1 configuration/usage error, 2 runtime/IO error.
/// Results go to `out`; every diagnostic goes to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv form used by main(); argv[0] is the program name.
int cli_main(int argc, const char* const* argv);

} // namespace aircover

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairdiv {

/// Command-line entry point shared by the fairdiv binary and the tests.
///
/// Subcommands:
///   solve <instance> --rule {mnw-tie|frac-mnw}
///   lottery <instance> [--sample] [--seed N]
///   check <instance> <document> --property
///         {ef|ef1|efx|po|mnw|minimally-complete|rounded|frac-mnw}
///   fuzz --rule {mnw-tie|frac-mnw} --agents N --goods M
///        (--exhaustive | --random K [--seed S]) [--coalition-max C]
///   oracle <instance>
///
/// Exit codes: 0 success / property holds, 1 property violated (witness on
/// stdout), 2 input error, 3 internal invariant failure.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fairdiv

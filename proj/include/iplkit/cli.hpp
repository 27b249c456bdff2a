// Batch command-line front end. Every subcommand writes one JSON document.

#ifndef IPLKIT_CLI_HPP
#define IPLKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace iplkit::cli {

// Exit statuses.
constexpr int kPositive = 0;  // valid, provable, holds
constexpr int kNegative = 1;  // refuted; the witness is in the output
constexpr int kUsage = 2;     // bad arguments or input; message on err
constexpr int kUnknown = 3;   // budget exhausted

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iplkit::cli

#endif  // IPLKIT_CLI_HPP

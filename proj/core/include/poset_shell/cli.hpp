#ifndef POSET_SHELL_CLI_HPP
#define POSET_SHELL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace posets {

/*
  Configuration of one CLI run.  The binary in tools/ parses argv into
  this; keeping the execution behind a plain function makes runs easy to
  test and guarantees identical reports for identical configs.

  Commands exceeding the per-command safety cap on n are rejected unless
  allow_large is set.
*/
struct run_config {
    std::string command;    // "enumerate" | "hasse" | "check"
    std::string check_kind; // "el" | "eulerian" | "covers" | "iso" | "shelling" | "mobius-cross"
    int n = 3;
    std::optional<int> k;
    std::string poset = "partial-involutions"; // rooks | partial-involutions | involutions | permutations
    std::string side = "involutions";          // check iso: involutions | rooks
    std::string transported;                   // check el: "" | involutions | permutations
    std::string format = "text";               // text | json | dot
    std::string out;                           // output path; stdout if empty
    std::string dot_out;                       // check iso: optional highlighted DOT path
    unsigned jobs = 1;
    bool all_k = false;
    bool highlight_embedding = false;
    bool allow_large = false;
};

// Exit code contract: 0 = full pass, 1 = a verification reported a
// violation, 2 = usage error (including cap violations without
// allow_large and out-of-scope requests).
int cli_run(const run_config& cfg, std::ostream& out, std::ostream& err);

} // namespace posets

#endif

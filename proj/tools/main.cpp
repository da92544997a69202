#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "poset_shell/cli.hpp"

namespace {

void add_common(CLI::App* cmd, posets::run_config& cfg) {
    cmd->add_option("--n", cfg.n, "matrix size n")->required();
    cmd->add_option("--format", cfg.format, "output format");
    cmd->add_option("--out", cfg.out, "write the report to this file");
    cmd->add_option("--jobs", cfg.jobs, "worker threads for interval checks");
    cmd->add_flag("--allow-large", cfg.allow_large, "override the safety cap on n");
}

} // namespace

int main(int argc, char** argv) {
    posets::run_config cfg;
    int k = -1;

    CLI::App app{"Bruhat-Chevalley-Renner posets of rooks and partial involutions:\n"
                 "enumeration, Hasse diagrams, EL-labelings and verification"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    auto* enumerate = app.add_subcommand("enumerate", "list a ground set with counts");
    add_common(enumerate, cfg);
    enumerate->add_option("--k", k, "restrict to k nonzero entries");
    enumerate->add_option("--poset", cfg.poset,
                          "rooks | partial-involutions | involutions | permutations");

    auto* hasse = app.add_subcommand("hasse", "emit a Hasse diagram (text, json or dot)");
    add_common(hasse, cfg);
    hasse->add_option("--k", k, "restrict to k nonzero entries");
    hasse->add_option("--poset", cfg.poset,
                      "rooks | partial-involutions | involutions | permutations");
    hasse->add_flag("--highlight-embedding", cfg.highlight_embedding,
                    "mark the union of the two top k-levels blue");

    auto* check = app.add_subcommand(
        "check", "run a verifier: el | eulerian | covers | iso | shelling | mobius-cross");
    check->add_option("kind", cfg.check_kind, "which verifier to run")->required();
    add_common(check, cfg);
    check->add_option("--k", k, "single k for eulerian");
    check->add_flag("--all-k", cfg.all_k, "eulerian: run every k in [n]");
    check->add_option("--poset", cfg.poset, "eulerian: family filter");
    check->add_option("--side", cfg.side, "iso: rooks | involutions");
    check->add_option("--transported", cfg.transported,
                      "el: verify the labeling transported onto I_{n+1} (involutions)");
    check->add_option("--dot", cfg.dot_out, "iso: also write a highlighted DOT file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error contract
    }

    if (enumerate->parsed()) cfg.command = "enumerate";
    if (hasse->parsed()) cfg.command = "hasse";
    if (check->parsed()) cfg.command = "check";
    if (k >= 0) cfg.k = k;

    return posets::cli_run(cfg, std::cout, std::cerr);
}

#include <iostream>

#include <CLI11.hpp>

#include "bunchlab/cli.hpp"

namespace {

int emit(const bunchlab::cli::CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    using namespace bunchlab::cli;
    CLI::App app{"Bunched rings, their varieties and invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandOptions opt;
    bool text = false;
    app.add_flag("--json", opt.json, "Machine readable JSON output");
    app.add_flag("--text", text, "Aligned text tables (default)");
    app.add_option("--max-generators", opt.max_generators, "Largest generator count for exhaustive face scans")
        ->check(CLI::Range(1, 62));
    app.add_flag("--skip-maximality", opt.skip_maximality, "Downgrade the bunch maximality check to a warning");

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check a document for bunched-ring axioms");
    validate->add_option("file", path, "Input document")->required();
    auto* analyze = app.add_subcommand("analyze", "Compute every invariant of the variety");
    analyze->add_option("file", path, "Input document")->required();
    auto* fan = app.add_subcommand("fan", "Export the minimal ambient toric fan");
    fan->add_option("file", path, "Input document")->required();
    auto* proj = app.add_subcommand("projectivize", "Replace the bunch by one with nonempty ample cone");
    proj->add_option("file", path, "Input document")->required();

    QuadricRequest q;
    auto* quadric = app.add_subcommand("quadric", "Build and check an intrinsic quadric");
    quadric->require_subcommand(1);
    quadric->fallthrough();
    auto* rank1 = quadric->add_subcommand("rank1", "Class group of rank one");
    rank1->add_option("--weights", q.weights, "Strictly increasing positive weights")->required()->delimiter(',');
    rank1->add_option("--mult", q.multiplicities, "Multiplicity of each weight")->required()->delimiter(',');
    auto* rank2 = quadric->add_subcommand("rank2", "Class group of rank two");
    rank1->fallthrough();
    rank2->fallthrough();
    std::string side = "left";
    rank2->add_option("--side", side, "left or right family")->check(CLI::IsMember({"left", "right"}));
    rank2->add_option("--mu", q.mu1, "Multiplicity for the left family");
    rank2->add_option("--mu1", q.mu1, "Multiplicity of x and x' for the right family");
    rank2->add_option("--mu2", q.mu2, "Multiplicity of y for the right family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_io;
    }
    if (text) opt.json = false;

    if (validate->parsed()) return emit(cmd_validate(path, opt));
    if (analyze->parsed()) return emit(cmd_analyze(path, opt));
    if (fan->parsed()) return emit(cmd_fan(path, opt));
    if (proj->parsed()) return emit(cmd_projectivize(path, opt));
    if (rank1->parsed()) q.kind = QuadricRequest::Kind::Rank1;
    if (rank2->parsed()) {
        q.kind = QuadricRequest::Kind::Rank2;
        q.side = side == "right" ? bunchlab::QuadricSide::Right : bunchlab::QuadricSide::Left;
    }
    return emit(cmd_quadric(q, opt));
}

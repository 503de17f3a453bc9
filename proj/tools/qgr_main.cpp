#include <CLI11.hpp>

#include "qgr/cli.hpp"

namespace {

void add_shape(CLI::App* cmd, qgr::RunConfig& config) {
    cmd->add_option("m", config.m, "codimension m (> 1)")->required();
    cmd->add_option("p", config.p, "plane dimension p (> 1)")->required();
    cmd->add_option("q", config.q, "map degree q (>= 0)")->required();
}

void add_common(CLI::App* cmd, qgr::RunConfig& config) {
    cmd->add_option("--seed", config.seed, "RNG seed");
    cmd->add_option("--tol", config.tol, "residual verification tolerance");
    cmd->add_option("--real-tol", config.real_tol, "reality classification tolerance");
    cmd->add_option("--out", config.out_path, "output file (default stdout)");
    cmd->add_option("--format", config.format, "output format: text | json | dot");
    cmd->add_option("--threads", config.threads, "path-tracking worker count");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational curves in Grassmannians: degrees, systems, solving, certification"};
    app.require_subcommand(1);
    qgr::RunConfig config;

    auto* delta = app.add_subcommand("delta", "degree by closed formula and by chain count");
    add_shape(delta, config);
    add_common(delta, config);

    auto* poset = app.add_subcommand("poset", "quantum index poset with ranks, covers, chain counts");
    add_shape(poset, config);
    add_common(poset, config);
    poset->add_option("--max-elements", config.max_elements, "element cap (default 10000)");

    auto* build = app.add_subcommand("build", "assemble the polynomial system for a shape");
    add_shape(build, config);
    add_common(build, config);
    build->add_option("--schedule", config.schedule, "power:K | geom:R | file:PATH");

    auto* solve = app.add_subcommand("solve", "solve the section system by homotopy continuation");
    add_shape(solve, config);
    add_common(solve, config);
    solve->add_option("--schedule", config.schedule, "power:K | geom:R | file:PATH");
    solve->add_option("--in", config.in_path, "load a system file instead of building");
    solve->add_flag("--certify", config.certify, "attach an exact eliminant certificate");

    auto* certify = app.add_subcommand("certify", "solve and certify the real-solution count exactly");
    add_shape(certify, config);
    add_common(certify, config);
    certify->add_option("--schedule", config.schedule, "power:K | geom:R | file:PATH");
    certify->add_option("--in", config.in_path, "load a system file instead of building");

    auto* experiment = app.add_subcommand("experiment", "preset runs: paper-q1 | shapiro-q0-sweep");
    experiment->add_option("name", config.experiment, "preset name")->required();
    add_common(experiment, config);
    experiment->add_option("--runs", config.runs, "sweep repetitions per shape (default 50)");

    CLI11_PARSE(app, argc, argv);

    config.command = app.get_subcommands().front()->get_name();
    return qgr::run_command(config);
}

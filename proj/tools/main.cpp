#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spinfactor/commands.hpp"

using spinfactor::RunConfig;

namespace {

int write(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << '\n';
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split spin factor algebras: builds, identity checks and polynomial identity search"};
    std::string command, alpha, t, config_path, basis, format, output, instance;
    std::size_t dim_e = 2, degree = 5;
    unsigned jobs = 1;
    bool symbolic = false, no_vectors = false;

    app.add_option("command", command, "Command to run")
        ->required()
        ->check(CLI::IsMember(spinfactor::command_names()));
    auto* o_alpha = app.add_option("--alpha", alpha, "alpha as an exact scalar, or 'symbolic'");
    auto* o_t = app.add_option("--t", t, "t as an exact scalar, 'symbolic' or 'S-alpha'");
    auto* o_dim = app.add_option("--dimE", dim_e, "dim E")->check(CLI::PositiveNumber);
    auto* o_degree = app.add_option("--degree", degree, "identity degree");
    auto* o_basis = app.add_option("--basis", basis, "monomial basis")->check(CLI::IsMember({"P", "B"}));
    auto* o_symbolic = app.add_flag("--symbolic", symbolic, "solve over Q(alpha)");
    auto* o_novec = app.add_flag("--no-vectors", no_vectors, "omit nullspace vectors");
    auto* o_instance = app.add_option("--instance", instance, "verify-lemmas instance")
                           ->check(CLI::IsMember({"split-spin", "dual-numbers", "zero-delta"}));
    auto* o_format = app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    auto* o_output = app.add_option("--output", output, "report file (default stdout)");
    auto* o_jobs = app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return e.get_exit_code() == 0 ? rc : 2;
    }

    RunConfig rc;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            rc = RunConfig::from_json(nlohmann::json::parse(in));
        }
        rc.command = command;
        if (o_alpha->count()) rc.algebra["alpha"] = alpha;
        if (o_t->count()) rc.algebra["t"] = t;
        if (o_dim->count()) rc.algebra["n"] = dim_e;
        if (o_degree->count()) rc.degree = degree;
        if (o_basis->count()) rc.basis = basis;
        if (o_symbolic->count()) rc.symbolic = symbolic;
        if (o_novec->count()) rc.with_vectors = !no_vectors;
        if (o_instance->count()) rc.instance = instance;
        if (o_format->count()) rc.format = format;
        if (o_output->count()) rc.output = output;
        if (o_jobs->count()) rc.jobs = jobs;
        spinfactor::validate(rc);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    spinfactor::Report report;
    try {
        report = spinfactor::run(rc);
    } catch (const spinfactor::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        report.command = rc.command;
        spinfactor::CheckResult err;
        err.id = "error";
        err.status = spinfactor::Status::fail;
        err.note = e.what();
        report.add(err);
    }
    if (write(spinfactor::render(report, rc.format), rc.output) != 0) return 2;
    return report.all_passed() ? 0 : 1;
}

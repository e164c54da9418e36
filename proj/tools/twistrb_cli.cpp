#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    using twistrb::cli::Options;
    CLI::App app{"Exact computations with twisted Rota-Baxter operators, NS-algebras and their deformations"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.json, "Emit the report as JSON");
    app.add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--samples", opts.samples, "Number of random samples")->capture_default_str();
    app.add_option("--nmax", opts.nmax, "Highest cochain degree or Jacobi arity");
    app.add_option("--order", opts.order, "Truncation order of a deformation");

    for (const auto& name : twistrb::cli::command_names()) {
        CLI::App* sub = app.add_subcommand(name, twistrb::cli::command_help(name));
        if (name == "corpus") {
            sub->add_option("--write", opts.write_dir, "Write the canonical corpus files into DIR");
            sub->add_option("--check", opts.check_dir, "Compare DIR with the generated corpus and validate each file");
            continue;
        }
        const bool deformation = name == "deform-rb" || name == "deform-ns";
        sub->add_option(deformation ? "file,--file" : "file", opts.files, "Instance file")->check(CLI::ExistingFile);
        if (name == "gauge")
            sub->add_option("--B", opts.b_file, "File with the 1-cocycle B : A -> M")->check(CLI::ExistingFile);
        if (name == "shift") {
            sub->set_help_flag("--help", "Print this help message and exit");
            sub->add_option("--h", opts.h_file, "File with the 1-cochain h : A -> M")->check(CLI::ExistingFile);
        }
        if (name == "nijenhuis")
            sub->add_option("--candidates", opts.candidates_file, "File with candidate elements of A")
                ->check(CLI::ExistingFile);
        if (name == "linfty-audit") {
            sub->add_option("--form", opts.form, "Ternary bracket: printed or derived")
                ->check(CLI::IsMember({"printed", "derived"}));
            sub->add_flag("--twisted", opts.twisted, "Audit the structure twisted by T");
            sub->add_option("--max-degree", opts.max_degree, "Sample elements of degree 1..D")
                ->check(CLI::Range(1, 3));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return twistrb::cli::MalformedInput;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    return twistrb::cli::run(command, opts, std::cout, std::cerr);
}

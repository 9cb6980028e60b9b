#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "reslat/explorer.hpp"
#include "reslat/io.hpp"
#include "reslat/report.hpp"

namespace {

using namespace reslat;

int print_and_exit(const Rendered& r) {
    std::cout << r.output;
    return r.checks_passed ? 0 : 1;
}

int run_validate(const std::string& path, Format fmt) {
    RawTables raw = parse_lattice(read_file(path));
    bool derived = false;
    if (!raw.residuum) {
        try {
            raw.residuum = derive_residuum(raw);
            derived = true;
        } catch (const NotResiduated& e) {
            std::cout << "elements: " << raw.size() << "\n"
                      << "residuum: underivable\n"
                      << "validation: failed\n"
                      << "  residuation: " << e.what() << "\n";
            return 1;
        }
    }
    return print_and_exit(render_validate(raw, derived, validate(raw), fmt));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite residuated-lattice toolkit: filters, prime spectra, Stone "
                 "topology, quotients, sheaf spaces and their representations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for the survey")
        ->check(CLI::PositiveNumber);

    std::string file;
    std::uint64_t budget = 1000000;
    int size = 0;
    int max_size = 6;
    std::string emit_dir;
    bool timings = false;

    CLI::App* cmd_validate = app.add_subcommand("validate", "check the axioms");
    cmd_validate->add_option("file", file, "lattice document")->required();
    CLI::App* cmd_filters =
        app.add_subcommand("filters", "filters, prime filters and O(P)");
    cmd_filters->add_option("file", file)->required();
    CLI::App* cmd_spec = app.add_subcommand("spec", "the prime spectrum");
    cmd_spec->add_option("file", file)->required();
    CLI::App* cmd_topology = app.add_subcommand("topology", "the Stone topology");
    cmd_topology->add_option("file", file)->required();
    CLI::App* cmd_sheaf =
        app.add_subcommand("sheaf", "the total space E_L and its checks");
    cmd_sheaf->add_option("file", file)->required();
    CLI::App* cmd_represent =
        app.add_subcommand("represent", "the representation into global sections");
    cmd_represent->add_option("file", file)->required();
    cmd_represent->add_option("--budget", budget, "max candidate sections");
    CLI::App* cmd_survey =
        app.add_subcommand("survey", "survey surjectivity over all lattices of a size");
    cmd_survey->add_option("--size", size, "carrier size")->required();
    cmd_survey->add_option("--budget", budget, "max candidate sections per lattice");
    cmd_survey->add_option("--emit-lattices", emit_dir,
                           "write every generated lattice into this directory");
    cmd_survey->add_option("--max-size", max_size, "configured size cap");
    cmd_survey->add_flag("--timings", timings, "include wall-clock columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format fmt = format == "json" ? Format::json : Format::text;

    try {
        if (cmd_validate->parsed()) return run_validate(file, fmt);
        if (cmd_survey->parsed()) {
            if (size < 2 || size > max_size) {
                std::cerr << "error: --size must be between 2 and " << max_size << "\n";
                return 2;
            }
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                std::map<std::string, int> seen;
                for (const GeneratedLattice& g : all_lattices(size)) {
                    int repeat = seen[g.id]++;
                    std::string name =
                        repeat == 0 ? g.id : g.id + "-" + std::to_string(repeat + 1);
                    std::ofstream out(std::filesystem::path(emit_dir) / (name + ".lat"),
                                      std::ios::binary);
                    out << serialize_lattice(g.lattice);
                }
            }
            return print_and_exit(render_survey(survey(size, budget, jobs), timings, fmt));
        }

        ResiduatedLattice L = load_lattice_file(file);
        if (cmd_filters->parsed()) return print_and_exit(render_filters(L, fmt));
        if (cmd_spec->parsed()) return print_and_exit(render_spectrum(L, fmt));
        if (cmd_topology->parsed()) return print_and_exit(render_topology(L, fmt));
        if (cmd_sheaf->parsed()) return print_and_exit(render_sheaf(L, fmt));
        if (cmd_represent->parsed())
            return print_and_exit(render_represent(L, budget, fmt));
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ValidationFailed& e) {
        std::cout << "validation: failed\n";
        for (const Violation& v : e.report.violations)
            std::cout << "  " << format_violation(nullptr, v) << "\n";
        return 1;
    } catch (const NotResiduated& e) {
        std::cout << "validation: failed\n  residuation: " << e.what() << "\n";
        return 1;
    } catch (const MalformedTables& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

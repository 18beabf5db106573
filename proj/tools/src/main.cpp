#include "dirackit/tools/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dirackit::tools;

struct Flags {
    std::string scene;
    std::string out;
    std::string csv;
    std::size_t grid_res = 0;
    std::size_t quadrature_order = 0;
    std::uint64_t seed = 0x5eed;
};

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

int dispatch(const std::string& name, const Flags& flags) {
    std::ifstream in(flags.scene, std::ios::binary);
    CommandResult result;
    if (!in) {
        result.exit_code = ExitCode::InputError;
        result.report = {{"command", name}, {"status", "input-error"}, {"error", "cannot read scene file " + flags.scene}};
    } else {
        std::stringstream buffer;
        buffer << in.rdbuf();
        LoadOptions options;
        if (flags.grid_res > 0) options.grid_resolution = flags.grid_res;
        if (flags.quadrature_order > 0) options.quadrature_order = flags.quadrature_order;
        options.seed = flags.seed;
        if (name == "validate") result = run_validate(buffer.str(), options);
        else if (name == "reduce") result = run_reduce(buffer.str(), options);
        else if (name == "obstruct") result = run_obstruct(buffer.str(), options);
        else result = run_area(buffer.str(), options);
    }
    const std::string text = dump_report(result.report);
    if (flags.out.empty()) {
        std::cout << text;
    } else if (!write_file(flags.out, text)) {
        std::cerr << "dirackit: cannot write " << flags.out << "\n";
        return ExitCode::InputError;
    }
    if (!flags.csv.empty() && !write_file(flags.csv, result.csv)) {
        std::cerr << "dirackit: cannot write " << flags.csv << "\n";
        return ExitCode::InputError;
    }
    if (result.exit_code == ExitCode::InputError) std::cerr << "dirackit: " << result.report.value("error", "") << "\n";
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac structures, Hamiltonian reduction and monodromy obstructions"};
    app.require_subcommand(0, 1);
    bool schema = false;
    app.add_flag("--schema", schema, "Print the scene JSON Schema and exit");

    Flags flags;
    const char* names[] = {"validate", "reduce", "obstruct", "area"};
    const char* help[] = {"Check the Dirac axioms, action, moment condition and regularity",
                          "Probe smoothness of the reduced structure and check the reduction diamond",
                          "Monodromy lattice and integrability verdict",
                          "Curvature integrals, area variation and homotopy integral"};
    for (int i = 0; i < 4; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--scene", flags.scene, "Scene JSON file")->required();
        sub->add_option("--out", flags.out, "Write the JSON report here instead of stdout");
        sub->add_option("--csv", flags.csv, "Write plot data as CSV");
        sub->add_option("--grid-res", flags.grid_res, "Override the grid resolution")->check(CLI::PositiveNumber);
        sub->add_option("--quadrature-order", flags.quadrature_order, "Override the Gauss-Legendre order")
            ->check(CLI::Range(4, 64));
        sub->add_option("--seed", flags.seed, "Seed for generic-point selection");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ExitCode::InputError;
    }

    if (schema) {
        std::cout << scene_schema();
        return ExitCode::Pass;
    }
    for (const char* name : names) {
        if (app.got_subcommand(name)) return dispatch(name, flags);
    }
    std::cerr << app.help();
    return ExitCode::InputError;
}

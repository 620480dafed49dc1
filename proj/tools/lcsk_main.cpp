#include <CLI11.hpp>

#include "lcsk/errors.hpp"
#include "lcsk/runner.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

const std::map<std::string, std::string> kCommands = {
    {"check", "verify the conformal skew and Jacobi axioms"},
    {"center", "solve for the center of the algebra"},
    {"centroid", "solve for the centroid at the degree bounds"},
    {"bider", "solve for conformal super-biderivations"},
    {"commuting", "solve for conformal super-commuting maps"},
    {"current", "build the current algebra over a coefficient algebra and check it"},
    {"verify-all", "run every applicable check and verifier"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for finite-rank Lie conformal superalgebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("lcsk ") + lcsk::kToolVersion);

    std::string file, format = "text", convention = "partial";
    int deg_d = -1, deg_l = -1, tensor = -1;

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, desc] : kCommands) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("spec-file", file, "algebra description file")->required();
        s->add_option("--deg-d", deg_d, "degree bound in d for module/solver ansatz")
            ->check(CLI::NonNegativeNumber);
        s->add_option("--deg-l", deg_l, "degree bound in the spectral variable")
            ->check(CLI::NonNegativeNumber);
        s->add_option("--tensor", tensor, "tensor with Q[t]/(t^N)")
            ->check(CLI::PositiveNumber);
        s->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "machine"}));
        s->add_option("--convention", convention, "linear-map convention")
            ->check(CLI::IsMember({"partial", "shifted"}));
        subs.emplace(name, s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string cmd;
    for (const auto& [name, s] : subs)
        if (s->parsed()) cmd = name;

    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    lcsk::RunOptions opts;
    if (deg_d >= 0) opts.deg_d = deg_d;
    if (deg_l >= 0) opts.deg_l = deg_l;
    if (tensor >= 1) opts.tensor = tensor;
    opts.conv = convention == "shifted" ? lcsk::Convention::LambdaShifted
                                        : lcsk::Convention::PartialCommuting;
    opts.format = format == "machine" ? lcsk::ReportFormat::Machine
                                      : lcsk::ReportFormat::Text;

    try {
        lcsk::RunReport rep = lcsk::run_command(cmd, buf.str(), opts);
        std::cout << lcsk::render_report(rep, opts.format);
        return lcsk::exit_status(rep);
    } catch (const lcsk::ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

// qrm: command-line runner: evolve one configuration, reproduce the figure
// set, or run the verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qrm/config.hpp"
#include "qrm/errors.hpp"
#include "qrm/figures.hpp"
#include "qrm/output.hpp"
#include "qrm/series.hpp"
#include "qrm/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kCheckFailure = 1, kInvalidConfig = 2, kIoFailure = 3 };

struct EvolveArgs {
    std::optional<std::string> config_path;
    std::optional<std::string> frame;
    std::optional<int> n;
    std::optional<double> xi;
    std::optional<double> eps;
    std::optional<double> g;
    std::optional<double> tau_max;
    std::optional<int> steps;
    std::optional<int> n_max;
    std::string out;
    std::optional<std::string> svg;
    std::string column{"atomic_excitation"};
    bool echo_config{false};
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qrm::IoError(path, "cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_evolve(const EvolveArgs& a) {
    qrm::ExperimentConfig cfg;
    if (a.config_path) cfg = qrm::config_from_json_text(slurp(*a.config_path));
    if (a.frame) cfg.frame = qrm::parse_frame(*a.frame);
    if (a.n) cfg.n = *a.n;
    if (a.xi) cfg.xi = *a.xi;
    if (a.eps) cfg.epsilon = *a.eps;
    if (a.g) cfg.g = *a.g;
    if (a.tau_max) cfg.tau_max = *a.tau_max;
    if (a.steps) cfg.steps = *a.steps;
    if (a.n_max) cfg.n_max = *a.n_max;
    if (a.svg && !cfg.wants("svg")) cfg.outputs.push_back("svg");
    if (!qrm::is_observable_column(a.column)) throw qrm::ConfigError("column", "unknown column '" + a.column + "'");

    const auto bundle = qrm::run_experiment(cfg);
    qrm::emit_csv(bundle, a.out, {.echo_config = a.echo_config});
    if (a.svg) qrm::emit_svg(bundle, a.column, *a.svg);
    std::cout << "wrote " << a.out << " (" << bundle.size() << " rows)";
    if (a.svg) std::cout << " and " << *a.svg;
    std::cout << '\n';
    return kOk;
}

int run_figures(const std::string& outdir) {
    const auto arts = qrm::reproduce_figures(outdir);
    for (const auto& art : arts) {
        std::cout << qrm::figure_id(art.spec.number) << "  " << qrm::to_string(art.spec.frame) << " n=" << art.spec.n
                  << "  " << art.spec.column << "  -> " << art.csv.string() << ", " << art.svg.string() << '\n';
    }
    std::cout << "manifest: " << (std::filesystem::path(outdir) / "manifest.json").string() << '\n';
    return kOk;
}

int run_verify(std::optional<double> tol, std::optional<int> n_max) {
    qrm::VerifyOptions opt;
    if (tol) {
        if (!(*tol > 0.0)) throw qrm::ConfigError("tol", "must be > 0");
        opt.tol = qrm::Tolerances::uniform(*tol);
    }
    if (n_max) {
        if (*n_max < 0) throw qrm::ConfigError("nmax", "must be >= 0");
        opt.scenario_n_max = *n_max;
    }
    const auto report = qrm::verify_suite(opt);
    report.print(std::cout);
    return report.all_passed() ? kOk : kCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form JC/AJC dynamics of the quantum Rabi model, cross-checked by exact propagation"};
    app.require_subcommand(1);

    EvolveArgs ev;
    auto* evolve = app.add_subcommand("evolve", "Evaluate observables for one configuration and write CSV (and SVG)");
    evolve->add_option("--config", ev.config_path, "Flat JSON config; flags override its fields");
    evolve->add_option("--frame", ev.frame, "rf or crf");
    evolve->add_option("--n", ev.n, "Initial photon quantum number");
    evolve->add_option("--xi", ev.xi, "xi = delta / 2g");
    evolve->add_option("--eps", ev.eps, "epsilon = omega / g");
    evolve->add_option("--g", ev.g, "Coupling g (frequency unit)");
    evolve->add_option("--tau-max", ev.tau_max, "End of the tau grid");
    evolve->add_option("--steps", ev.steps, "Number of grid points");
    evolve->add_option("--nmax", ev.n_max, "Truncation (default n + 20)");
    evolve->add_option("--out", ev.out, "CSV output path")->required();
    evolve->add_option("--svg", ev.svg, "SVG output path");
    evolve->add_option("--column", ev.column, "Column plotted in the SVG");
    evolve->add_flag("--echo-config", ev.echo_config, "Prefix the CSV with a '# {json}' config line");

    std::string outdir = "figures";
    auto* figures = app.add_subcommand("figures", "Write fig01..fig14 CSV/SVG pairs and manifest.json");
    figures->add_option("--outdir", outdir, "Output directory");

    std::optional<double> tol;
    std::optional<int> vnmax;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite and print a per-check table");
    verify->add_option("--tol", tol, "Use one tolerance for every check");
    verify->add_option("--nmax", vnmax, "Truncation for the closed-form vs. oracle scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidConfig;
    }

    try {
        if (*evolve) return run_evolve(ev);
        if (*figures) return run_figures(outdir);
        if (*verify) return run_verify(tol, vnmax);
    } catch (const qrm::ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const qrm::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return kOk;
}

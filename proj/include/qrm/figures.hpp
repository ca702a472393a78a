// figures.hpp: the fourteen figure parameter sets, rendered as CSV + SVG

#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "qrm/config.hpp"
#include "qrm/output.hpp"
#include "qrm/series.hpp"

namespace qrm {

struct FigureSpec {
    int number;
    Frame frame;
    int n;
    const char* column;
    const char* quantity;
};

// RF: xi = 0, eps = 0.16.
// CRF: xi = 1/1.31, eps = 0.16.
inline constexpr double kRfXi = 0.0;
inline constexpr double kCrfXi = 1.0 / 1.31;
inline constexpr double kFigureEpsilon = 0.16;
inline constexpr double kFigureTauMax = 50.0;
inline constexpr int kFigureSteps = 2000;

inline constexpr std::array<FigureSpec, 14> kFigures = {{
    {1, Frame::rf, 0, "atomic_excitation", "atomic excitation <s+s->"},
    {2, Frame::rf, 0, "photon", "mean photon number <a+a>"},
    {3, Frame::rf, 0, "n_jc", "JC excitation number <N>"},
    {4, Frame::rf, 0, "n_ajc", "AJC excitation number <Nbar>"},
    {5, Frame::rf, 40, "atomic_excitation", "atomic excitation <s+s->"},
    {6, Frame::rf, 40, "photon", "mean photon number <a+a>"},
    {7, Frame::rf, 40, "n_ajc", "AJC excitation number <Nbar>"},
    {8, Frame::crf, 0, "atomic_excitation", "antinormal atomic excitation <s-s+>"},
    {9, Frame::crf, 0, "photon", "antinormal photon number <a a+>"},
    {10, Frame::crf, 0, "n_ajc", "AJC excitation number <Nbar>"},
    {11, Frame::crf, 0, "n_jc", "JC excitation number <N>"},
    {12, Frame::crf, 40, "atomic_excitation", "antinormal atomic excitation <s-s+>"},
    {13, Frame::crf, 40, "photon", "antinormal photon number <a a+>"},
    {14, Frame::crf, 40, "n_jc", "JC excitation number <N>"},
}};

inline std::string figure_id(int number) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "fig%02d", number);
    return buf;
}

inline ExperimentConfig figure_config(const FigureSpec& f) {
    ExperimentConfig c;
    c.frame = f.frame;
    c.n = f.n;
    c.xi = f.frame == Frame::rf ? kRfXi : kCrfXi;
    c.epsilon = kFigureEpsilon;
    c.g = 1.0;
    c.tau_max = kFigureTauMax;
    c.steps = kFigureSteps;
    c.outputs = {"csv", "svg"};
    return c;
}

struct FigureArtifact {
    FigureSpec spec;
    ExperimentConfig config;
    std::filesystem::path csv;
    std::filesystem::path svg;
};

// Writes figNN.csv / figNN.svg for all fourteen figures plus manifest.json.
inline std::vector<FigureArtifact> reproduce_figures(const std::filesystem::path& outdir) {
    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
    if (ec) throw IoError(outdir.string(), "cannot create directory: " + ec.message());

    std::vector<FigureArtifact> out;
    nlohmann::json manifest;
    manifest["tau_max"] = kFigureTauMax;
    manifest["steps"] = kFigureSteps;
    manifest["figures"] = nlohmann::json::array();
    for (const auto& f : kFigures) {
        const auto cfg = figure_config(f);
        const auto bundle = run_experiment(cfg);
        const std::string id = figure_id(f.number);
        FigureArtifact art{f, cfg, outdir / (id + ".csv"), outdir / (id + ".svg")};
        emit_csv(bundle, art.csv);
        emit_svg(bundle, f.column, art.svg);

        nlohmann::json entry;
        entry["id"] = id;
        entry["frame"] = to_string(f.frame);
        entry["n"] = f.n;
        entry["column"] = f.column;
        entry["quantity"] = f.quantity;
        entry["xi"] = cfg.xi;
        entry["epsilon"] = cfg.epsilon;
        entry["epsilon_assumed"] = f.frame == Frame::rf;
        entry["csv"] = art.csv.filename().string();
        entry["svg"] = art.svg.filename().string();
        manifest["figures"].push_back(entry);
        out.push_back(std::move(art));
    }
    detail::write_file(outdir / "manifest.json", manifest.dump(2) + "\n");
    return out;
}

} // namespace qrm

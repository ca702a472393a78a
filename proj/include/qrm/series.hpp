// series.hpp: closed-form observable time series on a tau grid

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrm/analytic.hpp"
#include "qrm/config.hpp"

namespace qrm {

inline constexpr std::array<std::string_view, 5> kObservableColumns = {"s_z", "atomic_excitation", "photon", "n_jc",
                                                                       "n_ajc"};

inline bool is_observable_column(std::string_view name) {
    for (auto c : kObservableColumns)
        if (c == name) return true;
    return false;
}

struct TimeSeriesBundle {
    ExperimentConfig config;
    std::vector<double> tau;
    std::vector<double> s_z;
    std::vector<double> atomic_excitation;
    std::vector<double> photon;
    std::vector<double> n_jc;
    std::vector<double> n_ajc;

    std::size_t size() const noexcept { return tau.size(); }

    std::span<const double> column(std::string_view name) const {
        if (name == "tau") return tau;
        if (name == "s_z") return s_z;
        if (name == "atomic_excitation") return atomic_excitation;
        if (name == "photon") return photon;
        if (name == "n_jc") return n_jc;
        if (name == "n_ajc") return n_ajc;
        throw std::invalid_argument("unknown column '" + std::string(name) + "'");
    }
};

inline TimeSeriesBundle run_experiment(const ExperimentConfig& config) {
    config.validate();
    const ModelParams p = config.params();

    TimeSeriesBundle b;
    b.config = config;
    b.tau = config.tau_grid();
    const std::size_t count = b.tau.size();
    for (auto* col : {&b.s_z, &b.atomic_excitation, &b.photon, &b.n_jc, &b.n_ajc}) col->reserve(count);

    for (double tau : b.tau) {
        const Observables o = observables(config.frame, p, config.n, tau / config.g);
        for (double v : {o.s_z, o.atomic_excitation, o.photon, o.n_jc, o.n_ajc}) {
            if (!std::isfinite(v)) throw NumericConsistencyError("run_experiment: non-finite observable");
        }
        b.s_z.push_back(o.s_z);
        b.atomic_excitation.push_back(o.atomic_excitation);
        b.photon.push_back(o.photon);
        b.n_jc.push_back(o.n_jc);
        b.n_ajc.push_back(o.n_ajc);
    }
    return b;
}

} // namespace qrm

// config.hpp: experiment configuration and its flat JSON form

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qrm/analytic.hpp"
#include "qrm/errors.hpp"
#include "qrm/model.hpp"

namespace qrm {

// Units: g sets the frequency unit; omega = eps*g, delta = 2*xi*g and
// omega0 = delta + omega. Time is dimensionless tau = g t.
struct ExperimentConfig {
    Frame frame{Frame::rf};
    int n{0};
    double xi{0.0};
    double epsilon{0.16};
    double g{1.0};
    double tau_max{50.0};
    int steps{2000};
    std::optional<int> n_max;
    std::vector<std::string> outputs{"csv"};

    int effective_n_max() const { return n_max.value_or(n + 20); }

    void validate() const {
        if (n < 0) throw ConfigError("n", "must be >= 0");
        if (!std::isfinite(xi)) throw ConfigError("xi", "must be finite");
        if (!std::isfinite(epsilon) || !(epsilon > 0.0)) throw ConfigError("epsilon", "must be finite and > 0");
        if (!std::isfinite(g) || !(g > 0.0)) throw ConfigError("g", "must be finite and > 0");
        if (!std::isfinite(tau_max) || !(tau_max > 0.0)) throw ConfigError("tau_max", "must be finite and > 0");
        if (steps < 2) throw ConfigError("steps", "must be >= 2");
        if (2.0 * xi + epsilon < 0.0) throw ConfigError("xi", "gives omega0 = g(2 xi + eps) < 0");
        if (n_max && *n_max < n + 2) {
            throw ConfigError("n_max", "must be >= n + 2 (closed-form support reaches photon n + 1)");
        }
        for (const auto& o : outputs) {
            if (o != "csv" && o != "svg") throw ConfigError("outputs", "unknown artifact '" + o + "'");
        }
    }

    ModelParams params() const { return ModelParams::from_dimensionless(xi, epsilon, g); }

    // tau_k = k * tau_max / (steps - 1)
    std::vector<double> tau_grid() const {
        std::vector<double> tau(static_cast<std::size_t>(steps));
        for (int k = 0; k < steps; ++k) tau[k] = k * tau_max / (steps - 1);
        return tau;
    }

    bool wants(const std::string& artifact) const {
        return std::find(outputs.begin(), outputs.end(), artifact) != outputs.end();
    }

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline Frame parse_frame(const std::string& s) {
    if (s == "rf" || s == "RF") return Frame::rf;
    if (s == "crf" || s == "CRF") return Frame::crf;
    throw ConfigError("frame", "expected rf or crf, got '" + s + "'");
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["frame"] = to_string(c.frame);
    j["n"] = c.n;
    j["xi"] = c.xi;
    j["epsilon"] = c.epsilon;
    j["g"] = c.g;
    j["tau_max"] = c.tau_max;
    j["steps"] = c.steps;
    j["n_max"] = c.n_max ? nlohmann::json(*c.n_max) : nlohmann::json(nullptr);
    j["outputs"] = c.outputs;
    return j;
}

// Overlays the fields present in `j` on `base`. Unknown keys are rejected.
inline ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {}) {
    if (!j.is_object()) throw ConfigError("config", "expected a flat JSON object");
    auto number = [&](const std::string& key) -> double {
        const auto& v = j.at(key);
        if (!v.is_number()) throw ConfigError(key, "expected a number");
        return v.get<double>();
    };
    auto integer = [&](const std::string& key) -> int {
        const auto& v = j.at(key);
        if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
        return v.get<int>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "frame") {
            if (!value.is_string()) throw ConfigError(key, "expected \"rf\" or \"crf\"");
            base.frame = parse_frame(value.get<std::string>());
        } else if (key == "n") {
            base.n = integer(key);
        } else if (key == "xi") {
            base.xi = number(key);
        } else if (key == "epsilon") {
            base.epsilon = number(key);
        } else if (key == "g") {
            base.g = number(key);
        } else if (key == "tau_max") {
            base.tau_max = number(key);
        } else if (key == "steps") {
            base.steps = integer(key);
        } else if (key == "n_max") {
            base.n_max = value.is_null() ? std::nullopt : std::optional<int>(integer(key));
        } else if (key == "outputs") {
            if (!value.is_array()) throw ConfigError(key, "expected an array of strings");
            base.outputs.clear();
            for (const auto& o : value) {
                if (!o.is_string()) throw ConfigError(key, "expected an array of strings");
                base.outputs.push_back(o.get<std::string>());
            }
        } else {
            throw ConfigError(key, "unknown configuration field");
        }
    }
    return base;
}

inline ExperimentConfig config_from_json_text(const std::string& text, ExperimentConfig base = {}) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    return config_from_json(j, std::move(base));
}

} // namespace qrm

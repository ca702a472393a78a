// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qrm/analytic.hpp"
#include "qrm/envelope.hpp"
#include "qrm/figures.hpp"
#include "qrm/oracle.hpp"
#include "qrm/output.hpp"
#include "qrm/verify.hpp"

using namespace qrm;

namespace {

constexpr complex I{0.0, 1.0};

struct Outcome {
    bool passed;
    std::string measured;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fix(double v, int digits = 4) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Collapses a recorder's rows into one outcome quoting the worst offender.
Outcome summarize(const std::vector<CheckResult>& rows) {
    bool ok = !rows.empty();
    double worst = 0.0;
    std::string failing;
    for (const auto& r : rows) {
        if (!r.passed) {
            ok = false;
            if (failing.empty()) failing = r.name + (r.detail.empty() ? "" : " (" + r.detail + ")");
        }
        if (std::string(r.relation) == "<=") worst = std::max(worst, r.value);
    }
    std::string m = std::to_string(rows.size()) + " checks, max deviation " + sci(worst);
    if (!failing.empty()) m += "; first failure: " + failing;
    return {ok, m};
}

double spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

std::vector<double> tau_grid(double tau_max, int steps) {
    std::vector<double> t(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) t[k] = k * tau_max / (steps - 1);
    return t;
}

ModelParams figure_params(Frame f) { return ModelParams::from_dimensionless(f == Frame::rf ? kRfXi : kCrfXi, kFigureEpsilon); }

Outcome eigenstate_identities() {
    std::vector<ModelParams> sets = {ModelParams::from_frequencies(1.0, 1.0, 1.0),
                                     ModelParams::from_frequencies(1.0, 1.5, 1.0),
                                     ModelParams::from_frequencies(0.16, 1.0, 1.0), figure_params(Frame::rf),
                                     figure_params(Frame::crf)};
    const HilbertSpace space(10);
    double worst = 0.0;
    for (const auto& p : sets) {
        const auto eff = build_effective(p, space);
        const auto e0 = basis_state(space, Atom::e, 0);
        const auto g0 = basis_state(space, Atom::g, 0);
        worst = std::max(worst, (eff.ajc * e0 - complex(0.5 * (p.omega0() + p.omega())) * e0).norm());
        worst = std::max(worst, (eff.jc * g0 - complex(-0.5 * (p.omega0() - p.omega())) * g0).norm());
    }
    return {worst <= 1e-12, std::to_string(sets.size()) + " parameter sets, max residual " + sci(worst) + " <= 1e-12"};
}

Outcome operator_algebra() {
    std::vector<CheckResult> rows;
    detail::CheckRecorder rec(rows);
    rec.guarded("operator algebra", [&] { detail::verify_algebra(rec, Tolerances{}, 20); });
    return summarize(rows);
}

Outcome frame_conjugation() {
    std::vector<CheckResult> rows;
    detail::CheckRecorder rec(rows);
    rec.guarded("frame conjugation", [&] { detail::verify_frames(rec, Tolerances{}, 20); });
    return summarize(rows);
}

Outcome closed_form_vs_oracle() {
    double state = 0.0, obs = 0.0;
    int scenarios = 0;
    for (Frame f : {Frame::rf, Frame::crf}) {
        for (int n : {0, 1, 5, 40}) {
            const auto rep = compare_scenario(figure_params(f), f, n, tau_grid(25.0, 200), n + 20);
            state = std::max(state, rep.max_state_dev);
            obs = std::max(obs, rep.max_obs_dev.max());
            ++scenarios;
        }
    }
    return {state <= 1e-9 && obs <= 1e-9, std::to_string(scenarios) + " scenarios, amplitude " + sci(state) +
                                              " <= 1e-9, observable " + sci(obs) + " <= 1e-9"};
}

Outcome conservation_dichotomy() {
    const auto grid = tau_grid(25.0, 200);
    double flat = 0.0, varies = 1e300;
    for (Frame f : {Frame::rf, Frame::crf}) {
        const auto p = figure_params(f);
        for (int n : {0, 1, 5, 40}) {
            const HilbertSpace space(n + 20);
            const auto states = propagate_series(frame_hamiltonian(f, p, space), initial_state(f, p, space, n), grid);
            const auto table = observable_series(states, RawOperatorSet::build(p, space));
            std::vector<double> kept, other;
            for (double t : grid) {
                const auto o = observables(f, p, n, t);
                kept.push_back(f == Frame::rf ? o.n_jc : o.n_ajc);
                other.push_back(f == Frame::rf ? o.n_ajc : o.n_jc);
            }
            flat = std::max({flat, spread(kept), spread(f == Frame::rf ? table.n_jc : table.n_ajc)});
            varies = std::min({varies, spread(other), spread(f == Frame::rf ? table.n_ajc : table.n_jc)});
        }
    }
    return {flat <= 1e-12 && varies > 0.01,
            "conserved spread " + sci(flat) + " <= 1e-12, alternate spread " + fix(varies) + " > 0.01"};
}

// Single-doublet forms at n = 0, written out independently of the branch code.
Outcome vacuum_reductions() {
    const HilbertSpace space(4);
    double worst = 0.0;
    std::mt19937_64 rng(0xfacade);
    std::uniform_real_distribution<double> ut(0.0, 25.0);
    for (const auto& p : {figure_params(Frame::rf), figure_params(Frame::crf), ModelParams::from_dimensionless(0.35, 0.4),
                          ModelParams::from_dimensionless(-0.2, 0.9)}) {
        const double w = p.omega(), g = p.g();
        const double R = std::sqrt(0.25 * p.delta() * p.delta() + g * g);
        const double c = 0.5 * p.delta() / R, s = g / R;
        const double Rb = std::sqrt(0.25 * p.delta_bar() * p.delta_bar() + g * g);
        const double cb = 0.5 * p.delta_bar() / Rb, sb = g / Rb;
        for (int k = 0; k < 20; ++k) {
            const double t = ut(rng);
            const complex phase = std::exp(-I * w * t);

            auto rf = StateVector::zero(space);
            rf.amp(Atom::e, 0) = phase * (std::cos(R * t) - I * c * std::sin(R * t));
            rf.amp(Atom::g, 1) = phase * (-I * s * std::sin(R * t));
            worst = std::max(worst, evolve_rf(p, space, 0, t).max_abs_diff(rf));
            const double pr = s * s * std::sin(R * t) * std::sin(R * t);
            const auto orf = observables_rf(p, 0, t);
            worst = std::max({worst, std::abs(orf.s_z - (0.5 - pr)), std::abs(orf.atomic_excitation - (1.0 - pr)),
                              std::abs(orf.photon - pr), std::abs(orf.n_jc - 1.0),
                              std::abs(orf.n_ajc - (1.0 + 2.0 * pr))});

            auto crf = StateVector::zero(space);
            crf.amp(Atom::g, 0) = phase * (std::cos(Rb * t) + I * cb * std::sin(Rb * t));
            crf.amp(Atom::e, 1) = phase * (-I * sb * std::sin(Rb * t));
            worst = std::max(worst, evolve_crf(p, space, 0, t).max_abs_diff(crf));
            const double pc = sb * sb * std::sin(Rb * t) * std::sin(Rb * t);
            const auto ocrf = observables_crf(p, 0, t);
            worst = std::max({worst, std::abs(ocrf.s_z - (-0.5 + pc)), std::abs(ocrf.atomic_excitation - (1.0 - pc)),
                              std::abs(ocrf.photon - (1.0 + pc)), std::abs(ocrf.n_ajc - 2.0),
                              std::abs(ocrf.n_jc - 2.0 * pc)});
        }
    }
    return {worst <= 1e-12, "max deviation " + sci(worst) + " <= 1e-12"};
}

Outcome beat_envelope() {
    constexpr int n = 40;
    const auto grid = tau_grid(120.0, 6001);
    bool ok = true;
    std::string m;
    for (Frame f : {Frame::rf, Frame::crf}) {
        const auto p = figure_params(f);
        const auto rep = compare_scenario(p, f, n, grid, n + 20);
        const bool validated = rep.max_state_dev <= 1e-9 && rep.max_obs_dev.max() <= 1e-9;

        std::vector<double> excitation;
        for (double t : grid) excitation.push_back(observables(f, p, n, t).atomic_excitation);
        const auto peaks = find_envelope_peaks(grid, excitation, 5.0);

        const double hi = f == Frame::rf ? jc_branch(p, Atom::e, n).rabi : ajc_branch(p, Atom::g, n).rabi;
        const double lo = f == Frame::rf ? jc_branch(p, Atom::g, n - 1).rabi : ajc_branch(p, Atom::e, n - 1).rabi;
        const double expected = std::numbers::pi / (hi - lo);
        const double measured = peaks.period.value_or(std::nan(""));
        const double rel = std::abs(measured - expected) / expected;
        ok = ok && validated && peaks.period && rel <= 0.05;
        if (!m.empty()) m += "; ";
        m += std::string(to_string(f)) + " period " + fix(measured) + " vs " + fix(expected) + " (" + fix(100 * rel, 2) +
             "% <= 5%, " + std::to_string(peaks.positions.size()) + " maxima, oracle dev " +
             sci(std::max(rep.max_state_dev, rep.max_obs_dev.max())) + ")";
    }
    return {ok, m};
}

Outcome figure_reproduction() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("qrm-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    const auto artifacts = reproduce_figures(dir);
    int pairs = 0;
    bool exact = true;
    double worst = 0.0;
    for (const auto& a : artifacts) {
        if (std::filesystem::is_regular_file(a.csv) && std::filesystem::is_regular_file(a.svg)) ++pairs;
        const auto table = read_csv(a.csv);
        const auto& plotted = table.column(a.spec.column);
        if (a.spec.number == 3) exact = exact && std::all_of(plotted.begin(), plotted.end(), [](double v) { return v == 1.0; });
        if (a.spec.number == 10) exact = exact && std::all_of(plotted.begin(), plotted.end(), [](double v) { return v == 2.0; });

        const auto& c = a.config;
        const auto p = c.params();
        const HilbertSpace space(c.n + 20);
        std::vector<double> t;
        for (double tau : table.column("tau")) t.push_back(tau / c.g);
        const auto states = propagate_series(frame_hamiltonian(c.frame, p, space), initial_state(c.frame, p, space, c.n), t);
        const auto raw = observable_series(states, RawOperatorSet::build(p, space));
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto o = raw.reported(c.frame, i);
            worst = std::max({worst, std::abs(o.s_z - table.column("s_z")[i]),
                              std::abs(o.atomic_excitation - table.column("atomic_excitation")[i]),
                              std::abs(o.photon - table.column("photon")[i]), std::abs(o.n_jc - table.column("n_jc")[i]),
                              std::abs(o.n_ajc - table.column("n_ajc")[i])});
        }
    }
    std::filesystem::remove_all(dir);
    return {pairs == 14 && exact && worst <= 1e-9, std::to_string(pairs) + "/14 CSV+SVG pairs, fig03/fig10 exact: " +
                                                       (exact ? "yes" : "no") + ", oracle deviation " + sci(worst) +
                                                       " <= 1e-9"};
}

Outcome property_suite() {
    const auto s = fixtures::run_property_sweep(0xacce55, 100);
    const double invariant = std::max({s.normalization, s.unitarity, s.orthonormality, s.number_eigen, s.eigen_residual,
                                       s.flatness, s.frame_identity});
    const double oracle = std::max(s.oracle_state, s.oracle_observable);
    const bool ok = s.draws == 100 && invariant <= 1e-12 && s.dressing <= 1e-14 && oracle <= 1e-9;
    return {ok, std::to_string(s.draws) + " draws, invariants " + sci(invariant) + " <= 1e-12, c^2+s^2 " +
                    sci(s.dressing) + " <= 1e-14, oracle " + sci(oracle) + " <= 1e-9"};
}

struct Criterion {
    int number;
    const char* title;
    double time_limit;  // seconds; 0 means unbounded
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "eigenstate identities", 1.0, eigenstate_identities},
        {2, "operator algebra", 5.0, operator_algebra},
        {3, "frame conjugation", 5.0, frame_conjugation},
        {4, "closed form vs oracle", 30.0, closed_form_vs_oracle},
        {5, "conservation dichotomy", 0.0, conservation_dichotomy},
        {6, "n=0 reductions", 0.0, vacuum_reductions},
        {7, "beat envelope at n=40", 0.0, beat_envelope},
        {8, "figure reproduction", 60.0, figure_reproduction},
        {9, "property suite", 30.0, property_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out{false, {}};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit <= 0.0 || secs < c.time_limit;
        const bool passed = out.passed && in_time;
        failures += passed ? 0 : 1;

        std::string timing = fix(secs, 2) + " s";
        if (c.time_limit > 0.0) timing += " < " + fix(c.time_limit, 0) + " s";
        std::printf("criterion %d %s  %-24s %s  [%s]\n", c.number, passed ? "PASS" : "FAIL", c.title,
                    out.measured.c_str(), timing.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

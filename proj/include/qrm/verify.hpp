// verify.hpp: operator algebra and parity, frame conjugation, eigenstates,
// and closed form vs. brute-force propagation.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qrm/analytic.hpp"
#include "qrm/figures.hpp"
#include "qrm/model.hpp"
#include "qrm/oracle.hpp"

namespace qrm {

struct Tolerances {
    double identity{1e-12};    // exact operator/state identities
    double state{1e-9};        // closed form vs. oracle amplitudes
    double observable{1e-9};   // closed form vs. oracle expectations
    double flatness{1e-12};    // conserved-number series
    double unitarity{1e-12};   // | ||psi|| - 1 |

    static Tolerances uniform(double tol) { return {tol, tol, tol, tol, tol}; }
};

struct VerifyOptions {
    Tolerances tol{};
    // Replaces n + 20 as the truncation of the oracle scenarios.
    std::optional<int> scenario_n_max;
    int algebra_n_max{20};
};

struct CheckResult {
    std::string name;
    bool passed{false};
    double value{0.0};
    double threshold{0.0};
    // "<=": value must not exceed threshold; ">": value must exceed it.
    const char* relation{"<="};
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double seconds{0.0};

    bool all_passed() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }

    void print(std::ostream& os) const {
        char line[256];
        std::snprintf(line, sizeof line, "%-66s %-6s %12s %2s %-10s\n", "check", "status", "value", "", "threshold");
        os << line;
        for (const auto& c : checks) {
            std::snprintf(line, sizeof line, "%-66s %-6s %12.3e %2s %-10.1e", c.name.c_str(), c.passed ? "PASS" : "FAIL",
                          c.value, c.relation, c.threshold);
            os << line;
            if (!c.detail.empty()) os << "  " << c.detail;
            os << '\n';
        }
        const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
        std::snprintf(line, sizeof line, "%zu checks, %td failed, %.2f s\n", checks.size(), failed, seconds);
        os << line;
    }
};

namespace detail {

class CheckRecorder {
public:
    explicit CheckRecorder(std::vector<CheckResult>& out) : out_(out) {}

    void at_most(std::string name, double value, double threshold, std::string detail = {}) {
        out_.push_back({std::move(name), std::isfinite(value) && value <= threshold, value, threshold, "<=",
                        std::move(detail)});
    }
    void above(std::string name, double value, double threshold, std::string detail = {}) {
        out_.push_back({std::move(name), std::isfinite(value) && value > threshold, value, threshold, ">",
                        std::move(detail)});
    }
    // Runs `body`; any exception becomes a failed check carrying its message.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out_.push_back({name, false, std::nan(""), 0.0, "<=", e.what()});
        }
    }

private:
    std::vector<CheckResult>& out_;
};

inline double block_dev(const OperatorMatrix& a, const OperatorMatrix& b, int keep) {
    return max_abs_on_block(a - b, keep);
}

inline double spread(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

inline ModelParams figure_params(Frame f) {
    return ModelParams::from_dimensionless(f == Frame::rf ? kRfXi : kCrfXi, kFigureEpsilon);
}

inline void verify_algebra(CheckRecorder& rec, const Tolerances& tol, int n_max) {
    const HilbertSpace space(n_max);
    const int keep = n_max - 2;
    for (Frame f : {Frame::rf, Frame::crf}) {
        const ModelParams p = figure_params(f);
        const std::string tag = std::string("[") + to_string(f) + " params] ";
        const auto H_R = build_rabi(p, space);
        const auto comp = build_components(p, space);
        const auto N = build_number_ops(p, space);
        const auto eff = build_effective(p, space);
        const auto A = build_transition_ops(p, space);
        const auto I = OperatorMatrix::identity(space);

        double herm = 0.0;
        for (const auto* h : {&H_R, &comp.jc, &comp.ajc, &eff.jc, &eff.ajc}) herm = std::max(herm, h->hermiticity_defect());
        rec.at_most(tag + "Hamiltonians Hermitian", herm, tol.identity);

        rec.at_most(tag + "H_R = (H + Hbar)/2", (H_R - 0.5 * (comp.jc + comp.ajc)).max_abs(), tol.identity);
        rec.at_most(tag + "[N, H] = 0 (interior)", interior_commutator_norm(N.jc, comp.jc, keep), tol.identity);
        rec.at_most(tag + "[Nbar, Hbar] = 0 (interior)", interior_commutator_norm(N.ajc, comp.ajc, keep), tol.identity);
        rec.at_most(tag + "[N, H_JC] = 0 (interior)", interior_commutator_norm(N.jc, eff.jc, keep), tol.identity);
        rec.at_most(tag + "[Nbar, Hbar_AJC] = 0 (interior)", interior_commutator_norm(N.ajc, eff.ajc, keep),
                    tol.identity);
        rec.at_most(tag + "[N, Nbar] = 0", commutator(N.jc, N.ajc).max_abs(), tol.identity);
        rec.above(tag + "[N, Hbar_AJC] != 0", interior_commutator_norm(N.jc, eff.ajc, keep), 0.1 * p.g());
        rec.above(tag + "[Nbar, H_JC] != 0", interior_commutator_norm(N.ajc, eff.jc, keep), 0.1 * p.g());
        rec.above(tag + "[H_JC, Hbar_AJC] != 0", interior_commutator_norm(eff.jc, eff.ajc, keep), 0.1 * p.g() * p.g());
        rec.above(tag + "[H, Hbar] != 0", interior_commutator_norm(comp.jc, comp.ajc, keep), 0.1 * p.g() * p.g());

        const double d2 = p.delta() * p.delta(), db2 = p.delta_bar() * p.delta_bar(), g2 = p.g() * p.g();
        rec.at_most(tag + "A^2 = delta^2/4 + g^2 N (interior)",
                    block_dev(A.jc * A.jc, 0.25 * d2 * I + g2 * N.jc, keep), tol.identity);
        rec.at_most(tag + "Abar^2 = delta_bar^2/4 + g^2(Nbar - 1) (interior)",
                    block_dev(A.ajc * A.ajc, 0.25 * db2 * I + g2 * (N.ajc - I), keep), tol.identity);
        rec.at_most(tag + "H_JC = omega N + A", (eff.jc - (p.omega() * N.jc + A.jc)).max_abs(), tol.identity);
        rec.at_most(tag + "Hbar_AJC = omega(Nbar - 1) + Abar",
                    (eff.ajc - (p.omega() * (N.ajc - I) + A.ajc)).max_abs(), tol.identity);

        const auto parity = build_parity(space, 1);
        const auto parity_bar = diagonal_phase(N.ajc, std::numbers::pi);
        rec.at_most(tag + "exp(-i pi N) = exp(-i pi Nbar)", (parity - parity_bar).max_abs(), tol.identity);
        double conj = 0.0;
        for (int k = 1; k <= 3; ++k) {
            const auto P = build_parity(space, k);
            for (const auto* h : {&H_R, &comp.jc, &comp.ajc}) conj = std::max(conj, (P.adjoint() * *h * P - *h).max_abs());
        }
        rec.at_most(tag + "Pi_k^dagger X Pi_k = X, k=1..3", conj, tol.identity);
    }
}

inline void verify_frames(CheckRecorder& rec, const Tolerances& tol, int n_max) {
    const HilbertSpace space(n_max);
    for (Frame f : {Frame::rf, Frame::crf}) {
        const ModelParams p = figure_params(f);
        const std::string tag = std::string("[") + to_string(f) + " params] ";
        std::mt19937_64 rng(0x51ab1e + static_cast<int>(f));
        std::uniform_real_distribution<double> times(0.0, 10.0 / p.omega());
        double frame_dev = 0.0;
        for (int i = 0; i < 20; ++i) frame_dev = std::max(frame_dev, frame_conjugation_check(p, space, times(rng)));
        rec.at_most(tag + "frame conjugation, 20 random t", frame_dev, tol.identity);
    }
}

inline void verify_eigenstates(CheckRecorder& rec, const Tolerances& tol) {
    constexpr int kTopN = 45;
    const HilbertSpace space(kTopN + 2);
    for (Frame f : {Frame::rf, Frame::crf}) {
        const ModelParams p = figure_params(f);
        const std::string tag = std::string("[") + to_string(f) + " params] ";
        const auto eff = build_effective(p, space);
        const auto N = build_number_ops(p, space);

        const auto e0 = basis_state(space, Atom::e, 0);
        const auto g0 = basis_state(space, Atom::g, 0);
        const double e0_res = (eff.ajc * e0 - complex(0.5 * (p.omega0() + p.omega())) * e0).norm();
        const double g0_res = (eff.jc * g0 - complex(-0.5 * (p.omega0() - p.omega())) * g0).norm();
        rec.at_most(tag + "Hbar_AJC|e0> = (omega0+omega)/2 |e0>", e0_res, tol.identity);
        rec.at_most(tag + "H_JC|g0> = -(omega0-omega)/2 |g0>", g0_res, tol.identity);

        double residual = 0.0, number = 0.0, norm = 0.0;
        for (int n = 0; n <= kTopN; ++n) {
            for (Sign s : {Sign::plus, Sign::minus}) {
                if (n > 0 || s == Sign::plus) {
                    const auto [psi, E] = ajc_eigenstate(p, space, n, s);
                    residual = std::max(residual, (eff.ajc * psi - complex(E) * psi).norm());
                    number = std::max(number, (N.ajc * psi - complex(n + 1.0) * psi).norm());
                    norm = std::max(norm, std::abs(psi.norm() - 1.0));
                }
                if (n > 0 || s == Sign::minus) {
                    const auto [psi, E] = jc_eigenstate(p, space, n, s);
                    residual = std::max(residual, (eff.jc * psi - complex(E) * psi).norm());
                    number = std::max(number, (N.jc * psi - complex(double(n)) * psi).norm());
                    norm = std::max(norm, std::abs(psi.norm() - 1.0));
                }
            }
        }
        rec.at_most(tag + "eigenstate residuals, n <= 45", residual, tol.identity);
        rec.at_most(tag + "N/Nbar eigenvalues of eigenstates", number, tol.identity);
        rec.at_most(tag + "eigenstate normalization", norm, tol.unitarity);

        double dressing = 0.0;
        for (int n = 0; n <= kTopN; ++n) {
            for (Atom a : {Atom::e, Atom::g}) {
                for (const auto& b : {try_jc_branch(p, a, n), std::optional<BranchCoeffs>(ajc_branch(p, a, n))}) {
                    if (b && b->rabi > 0.0) dressing = std::max(dressing, std::abs(b->c * b->c + b->s * b->s - 1.0));
                }
            }
        }
        rec.at_most(tag + "c^2 + s^2 = 1, all branch families", dressing, 1e-14 > tol.identity ? tol.identity : 1e-14);
    }
}

inline std::vector<double> scenario_grid(double g, double tau_max = 25.0, int steps = 200) {
    std::vector<double> t(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) t[k] = k * tau_max / (steps - 1) / g;
    return t;
}

inline void verify_scenarios(CheckRecorder& rec, const VerifyOptions& opt) {
    const auto& tol = opt.tol;
    for (Frame f : {Frame::rf, Frame::crf}) {
        const ModelParams p = figure_params(f);
        const auto grid = scenario_grid(p.g());
        for (int n : {0, 1, 5, 40}) {
            const int n_max = opt.scenario_n_max.value_or(n + 20);
            const std::string tag = std::string(to_string(f)) + " n=" + std::to_string(n) + " ";
            rec.guarded(tag + "closed form vs oracle", [&] {
                const HilbertSpace space(n_max);
                const auto rep = compare_scenario(p, f, n, grid, n_max);
                rec.at_most(tag + "max amplitude deviation", rep.max_state_dev, tol.state, rep.scenario);
                rec.at_most(tag + "max observable deviation", rep.max_obs_dev.max(), tol.observable, rep.scenario);

                const Propagator prop(frame_hamiltonian(f, p, space));
                const auto numeric = prop.evolve_series(initial_state(f, p, space, n), grid);
                double unit = 0.0;
                std::vector<double> conserved, alternate;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    unit = std::max(unit, std::abs(numeric[i].norm() - 1.0));
                    unit = std::max(unit, std::abs(evolve(f, p, space, n, grid[i]).norm() - 1.0));
                    const auto o = observables(f, p, n, grid[i]);
                    conserved.push_back(f == Frame::rf ? o.n_jc : o.n_ajc);
                    alternate.push_back(f == Frame::rf ? o.n_ajc : o.n_jc);
                }
                rec.at_most(tag + "state norm preserved (analytic + oracle)", unit, tol.unitarity);

                const auto U = prop.unitary(grid.back());
                rec.at_most(tag + "propagator unitarity max|U^dagger U - 1|",
                            (U.adjoint() * U - OperatorMatrix::identity(space)).max_abs(), tol.unitarity);

                const auto table = observable_series(numeric, RawOperatorSet::build(p, space));
                const auto& oracle_conserved = f == Frame::rf ? table.n_jc : table.n_ajc;
                const auto& oracle_alternate = f == Frame::rf ? table.n_ajc : table.n_jc;
                const char* cname = f == Frame::rf ? "n_jc" : "n_ajc";
                const char* aname = f == Frame::rf ? "n_ajc" : "n_jc";
                rec.at_most(tag + cname + " flat (analytic)", spread(conserved), tol.flatness);
                rec.at_most(tag + cname + " flat (oracle)", spread(oracle_conserved), tol.flatness);
                rec.above(tag + aname + " varies (analytic)", spread(alternate), 0.01);
                rec.above(tag + aname + " varies (oracle)", spread(oracle_alternate), 0.01);
            });
        }
    }
}

} // namespace detail

inline VerifyReport verify_suite(const VerifyOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    detail::CheckRecorder rec(report.checks);
    rec.guarded("operator algebra", [&] { detail::verify_algebra(rec, opt.tol, opt.algebra_n_max); });
    rec.guarded("frame conjugation", [&] { detail::verify_frames(rec, opt.tol, opt.algebra_n_max); });
    rec.guarded("eigenstates", [&] { detail::verify_eigenstates(rec, opt.tol); });
    detail::verify_scenarios(rec, opt);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace qrm

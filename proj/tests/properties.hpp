// Randomized invariant sweep shared by the property tests and the acceptance
// gate. Each field holds the worst value seen over all draws.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qrm/analytic.hpp"
#include "qrm/oracle.hpp"
#include "support.hpp"

namespace qrm::fixtures {

struct PropertySweep {
    int draws{0};
    double normalization{0.0};     // eigenstates and evolved states
    double unitarity{0.0};         // oracle state norms
    double orthonormality{0.0};    // branch inner products through time
    double dressing{0.0};          // |c^2 + s^2 - 1|
    double number_eigen{0.0};      // N / Nbar residuals on eigenstates
    double eigen_residual{0.0};    // H_JC / Hbar_AJC residuals
    double oracle_state{0.0};      // closed form vs. propagator amplitudes
    double oracle_observable{0.0}; // closed form vs. propagator expectations
    double flatness{0.0};          // conserved number spread
    double frame_identity{0.0};    // excitation = 1/2 +- s_z, n_ajc - n_jc = 1 - 2 s_z
};

inline void bump(double& slot, double v) { slot = std::isnan(v) ? v : std::max(slot, v); }

inline double dressing_defect(const BranchCoeffs& b) {
    return b.rabi > 0.0 ? std::abs(b.c * b.c + b.s * b.s - 1.0) : 0.0;
}

inline PropertySweep run_property_sweep(std::uint64_t seed, int draws) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ut(0.0, 25.0);
    PropertySweep out;
    for (int d = 0; d < draws; ++d, ++out.draws) {
        const auto draw = draw_params(rng);
        const auto p = ModelParams::from_dimensionless(draw.xi, draw.eps);
        const int n = draw.n;
        const HilbertSpace space(n + 4);
        const auto eff = build_effective(p, space);
        const auto N = build_number_ops(p, space);

        // c^2 + s^2 = 1 for every family rooted at n - 1, n, n + 1.
        for (int m = std::max(0, n - 1); m <= n + 1; ++m) {
            for (Atom a : {Atom::e, Atom::g}) {
                if (auto b = try_jc_branch(p, a, m)) bump(out.dressing, dressing_defect(*b));
                bump(out.dressing, dressing_defect(ajc_branch(p, a, m)));
            }
        }

        auto check_eigen = [&](const Eigenpair& e, const OperatorMatrix& H, const OperatorMatrix& num, double value) {
            bump(out.normalization, std::abs(e.state.norm() - 1.0));
            bump(out.eigen_residual, (H * e.state - complex(e.energy) * e.state).norm());
            bump(out.number_eigen, (num * e.state - complex(value) * e.state).norm());
        };
        check_eigen(ajc_eigenstate(p, space, n, Sign::plus), eff.ajc, N.ajc, n + 1.0);
        check_eigen(jc_eigenstate(p, space, n, Sign::minus), eff.jc, N.jc, n);
        if (n > 0) {
            check_eigen(ajc_eigenstate(p, space, n, Sign::minus), eff.ajc, N.ajc, n + 1.0);
            check_eigen(jc_eigenstate(p, space, n, Sign::plus), eff.jc, N.jc, n);
        }

        std::vector<double> grid(24);
        for (auto& t : grid) t = ut(rng);
        std::sort(grid.begin(), grid.end());

        for (Frame f : {Frame::rf, Frame::crf}) {
            const auto rep = compare_scenario(p, f, n, grid, space.n_max());
            bump(out.oracle_state, rep.max_state_dev);
            bump(out.oracle_observable, rep.max_obs_dev.max());

            const auto numeric = propagate_series(frame_hamiltonian(f, p, space), initial_state(f, p, space, n), grid);
            double lo = 1e300, hi = -1e300;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                bump(out.unitarity, std::abs(numeric[i].norm() - 1.0));
                const auto br = f == Frame::rf ? rf_branches(p, space, n, grid[i]) : crf_branches(p, space, n, grid[i]);
                bump(out.normalization, std::abs(br.total().norm() - 1.0));
                bump(out.orthonormality, std::abs(br.upper.inner(br.upper) - 1.0));
                if (br.lower) {
                    bump(out.orthonormality, std::abs(br.lower->inner(*br.lower) - 1.0));
                    bump(out.orthonormality, std::abs(br.upper.inner(*br.lower)));
                    bump(out.orthonormality, std::abs(br.lower->inner(br.upper)));
                }

                const auto o = observables(f, p, n, grid[i]);
                const double kept = f == Frame::rf ? o.n_jc : o.n_ajc;
                lo = std::min(lo, kept);
                hi = std::max(hi, kept);
                const double exc = f == Frame::rf ? 0.5 + o.s_z : 0.5 - o.s_z;
                bump(out.frame_identity, std::abs(o.atomic_excitation - exc));
                bump(out.frame_identity, std::abs((o.n_ajc - o.n_jc) - (1.0 - 2.0 * o.s_z)));
            }
            bump(out.flatness, hi - lo);
        }
    }
    return out;
}

} // namespace qrm::fixtures

// oracle.hpp: brute-force verification of the closed forms
//
// States are propagated with dense exp(-iHt) of the effective frame
// Hamiltonians (H_JC in RF, H̄_AJC in CRF) and observables are raw
// expectation values of explicitly built operator products.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qrm/analytic.hpp"
#include "qrm/hilbert.hpp"
#include "qrm/model.hpp"

namespace qrm {

inline std::vector<StateVector> propagate_series(const OperatorMatrix& H, const StateVector& psi0,
                                                 std::span<const double> grid) {
    return Propagator(H).evolve_series(psi0, grid);
}

// The seven raw operators tracked by the oracle. Products are literal
// matrix products of the ladder/spin matrices.
struct RawOperatorSet {
    OperatorMatrix s_z;
    OperatorMatrix s_plus_s_minus;
    OperatorMatrix s_minus_s_plus;
    OperatorMatrix a_dag_a;
    OperatorMatrix a_a_dag;
    OperatorMatrix n_jc;
    OperatorMatrix n_ajc;

    static RawOperatorSet build(const ModelParams& p, const HilbertSpace& space) {
        const auto f = fock_operators(space);
        const auto q = qubit_operators(space);
        auto N = build_number_ops(p, space);
        return {q.s_z,
                (q.s_plus * q.s_minus).as_hermitian(),
                (q.s_minus * q.s_plus).as_hermitian(),
                (f.a_dagger * f.a).as_hermitian(),
                (f.a * f.a_dagger).as_hermitian(),
                std::move(N.jc),
                std::move(N.ajc)};
    }
};

struct RawObservableTable {
    std::vector<double> s_z;
    std::vector<double> s_plus_s_minus;
    std::vector<double> s_minus_s_plus;
    std::vector<double> a_dag_a;
    std::vector<double> a_a_dag;
    std::vector<double> n_jc;
    std::vector<double> n_ajc;

    std::size_t size() const noexcept { return s_z.size(); }

    // Projection onto the reporting convention of a frame.
    Observables reported(Frame f, std::size_t i) const {
        Observables o;
        o.s_z = s_z[i];
        o.atomic_excitation = f == Frame::rf ? s_plus_s_minus[i] : s_minus_s_plus[i];
        o.photon = f == Frame::rf ? a_dag_a[i] : a_a_dag[i];
        o.n_jc = n_jc[i];
        o.n_ajc = n_ajc[i];
        return o;
    }
};

inline RawObservableTable observable_series(std::span<const StateVector> states, const RawOperatorSet& ops) {
    RawObservableTable t;
    for (const auto& psi : states) {
        t.s_z.push_back(expectation(psi, ops.s_z));
        t.s_plus_s_minus.push_back(expectation(psi, ops.s_plus_s_minus));
        t.s_minus_s_plus.push_back(expectation(psi, ops.s_minus_s_plus));
        t.a_dag_a.push_back(expectation(psi, ops.a_dag_a));
        t.a_a_dag.push_back(expectation(psi, ops.a_a_dag));
        t.n_jc.push_back(expectation(psi, ops.n_jc));
        t.n_ajc.push_back(expectation(psi, ops.n_ajc));
    }
    return t;
}

struct ObservableDeviation {
    double s_z{0.0};
    double atomic_excitation{0.0};
    double photon{0.0};
    double n_jc{0.0};
    double n_ajc{0.0};

    double max() const { return std::max({s_z, atomic_excitation, photon, n_jc, n_ajc}); }
};

struct ComparisonReport {
    std::string scenario;
    double max_state_dev{0.0};
    ObservableDeviation max_obs_dev;
    std::vector<double> grid;
    int n_max{0};

    bool passed(double state_tol = 1e-9, double obs_tol = 1e-9) const {
        return std::isfinite(max_state_dev) && std::isfinite(max_obs_dev.max()) && max_state_dev <= state_tol &&
               max_obs_dev.max() <= obs_tol;
    }
};

inline std::string scenario_label(Frame f, int n, const ModelParams& p, int n_max) {
    std::ostringstream os;
    os << to_string(f) << " n=" << n << " xi=" << p.xi() << " eps=" << p.epsilon() << " n_max=" << n_max;
    return os.str();
}

// The effective Hamiltonian that generates dynamics in a frame.
inline OperatorMatrix frame_hamiltonian(Frame f, const ModelParams& p, const HilbertSpace& space) {
    auto eff = build_effective(p, space);
    return f == Frame::rf ? std::move(eff.jc) : std::move(eff.ajc);
}

// Runs the closed form and the brute-force propagator over the same time
// grid (physical t, not tau) and reports the worst amplitude and observable
// deviations. Throws TruncationError if the analytic support does not fit n_max.
inline ComparisonReport compare_scenario(const ModelParams& p, Frame f, int n, std::span<const double> grid,
                                         int n_max) {
    const HilbertSpace space(n_max);
    const StateVector psi0 = initial_state(f, p, space, n);
    // Checks the closed-form support before any matrix work.
    (void)evolve(f, p, space, n, 0.0);

    const auto numeric = propagate_series(frame_hamiltonian(f, p, space), psi0, grid);
    const auto table = observable_series(numeric, RawOperatorSet::build(p, space));

    ComparisonReport rep;
    rep.scenario = scenario_label(f, n, p, n_max);
    rep.grid.assign(grid.begin(), grid.end());
    rep.n_max = n_max;
    auto bump = [](double& slot, double v) { slot = std::isnan(v) ? v : std::max(slot, v); };
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const StateVector exact = evolve(f, p, space, n, grid[i]);
        bump(rep.max_state_dev, exact.max_abs_diff(numeric[i]));

        const Observables a = observables(f, p, n, grid[i]);
        const Observables o = table.reported(f, i);
        bump(rep.max_obs_dev.s_z, std::abs(a.s_z - o.s_z));
        bump(rep.max_obs_dev.atomic_excitation, std::abs(a.atomic_excitation - o.atomic_excitation));
        bump(rep.max_obs_dev.photon, std::abs(a.photon - o.photon));
        bump(rep.max_obs_dev.n_jc, std::abs(a.n_jc - o.n_jc));
        bump(rep.max_obs_dev.n_ajc, std::abs(a.n_ajc - o.n_ajc));
    }
    return rep;
}

// max |P(AB - BA)P| with P projecting onto photon index <= keep.
inline double interior_commutator_norm(const OperatorMatrix& A, const OperatorMatrix& B, int keep) {
    if (keep > A.space().n_max() - 2) {
        throw TruncationError("interior_commutator_norm: keep must be <= n_max - 2");
    }
    return max_abs_on_block(commutator(A, B), keep);
}

} // namespace qrm

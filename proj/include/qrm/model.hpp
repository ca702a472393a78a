// model.hpp: quantum Rabi model operators: components, effective frame
// Hamiltonians, excitation numbers, transition operators and parity.
//
// Notation used throughout (hbar = 1):
//   delta     = omega0 - omega       (JC red-sideband detuning)
//   delta_bar = omega0 + omega       (AJC blue-sideband detuning)
//   xi        = delta / 2g,  epsilon = omega / g

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qrm/hilbert.hpp"

namespace qrm {

class ModelParams {
public:
    // Physical frequencies (angular units).
    static ModelParams from_frequencies(double omega, double omega0, double g) {
        return ModelParams(omega, omega0 - omega, g);
    }

    // Dimensionless couplings as used for the figures: omega = eps*g, delta = 2*xi*g.
    static ModelParams from_dimensionless(double xi, double epsilon, double g = 1.0) {
        return ModelParams(epsilon * g, 2.0 * xi * g, g);
    }

    double omega() const noexcept { return omega_; }
    double omega0() const noexcept { return delta_ + omega_; }
    double g() const noexcept { return g_; }
    double delta() const noexcept { return delta_; }
    double delta_bar() const noexcept { return delta_ + 2.0 * omega_; }
    double xi() const noexcept { return delta_ / (2.0 * g_); }
    double epsilon() const noexcept { return omega_ / g_; }

private:
    ModelParams(double omega, double delta, double g) : omega_(omega), delta_(delta), g_(g) {
        if (!std::isfinite(omega) || !std::isfinite(delta) || !std::isfinite(g)) {
            throw std::invalid_argument("ModelParams: non-finite frequency");
        }
        if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
        if (!(g > 0.0)) throw std::invalid_argument("ModelParams: g must be > 0");
        if (omega0() < 0.0) throw std::invalid_argument("ModelParams: omega0 must be >= 0");
    }

    double omega_;
    double delta_;
    double g_;
};

namespace detail {

struct Ladder {
    FockOperators fock;
    QubitOperators qubit;
    explicit Ladder(const HilbertSpace& space) : fock(fock_operators(space)), qubit(qubit_operators(space)) {}

    OperatorMatrix a_s_plus() const { return fock.a * qubit.s_plus; }
    OperatorMatrix a_s_minus() const { return fock.a * qubit.s_minus; }
    OperatorMatrix ad_s_plus() const { return fock.a_dagger * qubit.s_plus; }
    OperatorMatrix ad_s_minus() const { return fock.a_dagger * qubit.s_minus; }

    // a s+ + a† s-  (red sideband)
    OperatorMatrix rotating() const { return (a_s_plus() + ad_s_minus()).as_hermitian(); }
    // a s- + a† s+  (blue sideband)
    OperatorMatrix counter_rotating() const { return (a_s_minus() + ad_s_plus()).as_hermitian(); }
};

inline Eigen::VectorXd photon_numbers(const HilbertSpace& space) {
    Eigen::VectorXd d(space.dim());
    for (Eigen::Index i = 0; i < space.dim(); ++i) d(i) = HilbertSpace::photon_of(i);
    return d;
}

inline Eigen::VectorXd excited_indicator(const HilbertSpace& space) {
    Eigen::VectorXd d(space.dim());
    for (Eigen::Index i = 0; i < space.dim(); ++i) d(i) = HilbertSpace::atom_of(i) == Atom::e ? 1.0 : 0.0;
    return d;
}

} // namespace detail

// H_R = omega(a†a + 1/2) + omega0 s_z + g(a + a†)(s- + s+)
inline OperatorMatrix build_rabi(const ModelParams& p, const HilbertSpace& space) {
    const detail::Ladder L(space);
    const auto I = OperatorMatrix::identity(space);
    const OperatorMatrix field = (L.fock.a + L.fock.a_dagger).as_hermitian();
    const OperatorMatrix spin = (L.qubit.s_minus + L.qubit.s_plus).as_hermitian();
    const OperatorMatrix number = (L.fock.a_dagger * L.fock.a).as_hermitian();
    return p.omega() * (number + 0.5 * I) + p.omega0() * L.qubit.s_z + p.g() * (field * spin).as_hermitian();
}

struct NumberOperators {
    OperatorMatrix jc;   // N    = a†a + s+s-
    OperatorMatrix ajc;  // Nbar = a a† + s-s+
};

// Both are diagonal. Nbar uses a a† = a†a + 1 so it stays exact at the
// truncation edge; the literal product a·a† differs only at n = n_max.
inline NumberOperators build_number_ops(const ModelParams&, const HilbertSpace& space) {
    const Eigen::VectorXd n = detail::photon_numbers(space);
    const Eigen::VectorXd up = detail::excited_indicator(space);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(space.dim());
    return {OperatorMatrix::diagonal(space, n + up), OperatorMatrix::diagonal(space, n + ones + (ones - up))};
}

struct ComponentHamiltonians {
    OperatorMatrix jc;   // H
    OperatorMatrix ajc;  // H̄
};

// H = omega N + delta s_z + 2g(a s+ + a† s-) - omega/2
// H̄ = omega N̄ + delta_bar s_z + 2g(a s- + a† s+) - omega/2
inline ComponentHamiltonians build_components(const ModelParams& p, const HilbertSpace& space) {
    const detail::Ladder L(space);
    const auto N = build_number_ops(p, space);
    const auto I = OperatorMatrix::identity(space);
    const double w = p.omega();
    return {
        w * N.jc + p.delta() * L.qubit.s_z + (2.0 * p.g()) * L.rotating() - (0.5 * w) * I,
        w * N.ajc + p.delta_bar() * L.qubit.s_z + (2.0 * p.g()) * L.counter_rotating() - (0.5 * w) * I,
    };
}

struct TransitionOperators {
    OperatorMatrix jc;   // Â = delta s_z + g(a s+ + a† s-)
    OperatorMatrix ajc;  // Ā = delta_bar s_z + g(a s- + a† s+)
};

inline TransitionOperators build_transition_ops(const ModelParams& p, const HilbertSpace& space) {
    const detail::Ladder L(space);
    return {p.delta() * L.qubit.s_z + p.g() * L.rotating(),
            p.delta_bar() * L.qubit.s_z + p.g() * L.counter_rotating()};
}

struct EffectiveHamiltonians {
    OperatorMatrix jc;   // H_JC  = omega N + Â
    OperatorMatrix ajc;  // H̄_AJC = omega (N̄ - 1) + Ā
};

inline EffectiveHamiltonians build_effective(const ModelParams& p, const HilbertSpace& space) {
    const detail::Ladder L(space);
    const auto N = build_number_ops(p, space);
    const auto I = OperatorMatrix::identity(space);
    const double w = p.omega();
    return {
        w * N.jc + p.delta() * L.qubit.s_z + p.g() * L.rotating(),
        w * (N.ajc - I) + p.delta_bar() * L.qubit.s_z + p.g() * L.counter_rotating(),
    };
}

// Π_k = exp(-i k pi N). N is diagonal with integer entries, so every phase
// is a whole number of half turns and the entries are exactly +-1.
inline OperatorMatrix build_parity(const HilbertSpace& space, int k) {
    if (k < 1) throw std::invalid_argument("build_parity: k must be >= 1, got " + std::to_string(k));
    const Eigen::VectorXd n = detail::photon_numbers(space) + detail::excited_indicator(space);
    Eigen::VectorXcd d(space.dim());
    for (Eigen::Index i = 0; i < space.dim(); ++i) {
        const double turns = std::fmod(static_cast<double>(k) * n(i), 2.0);
        d(i) = turns == 0.0 ? 1.0 : -1.0;
    }
    return {space, d.asDiagonal().toDenseMatrix(), Hermiticity::hermitian};
}

// exp(-i theta D) for a real diagonal operator D.
inline OperatorMatrix diagonal_phase(const OperatorMatrix& D, double theta) {
    if (!D.is_diagonal()) throw std::invalid_argument("diagonal_phase: operator is not diagonal");
    Eigen::VectorXcd d(D.space().dim());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::polar(1.0, -theta * D(i, i).real());
    return {D.space(), d.asDiagonal().toDenseMatrix()};
}

// Conjugates H_R into the rotating frame (U0 = exp(-i omega t N)) and the
// counter-rotating frame (Ū0 = exp(-i omega t N̄)); returns the larger
// max-abs deviation from the effective Hamiltonian plus the phase-rotated
// alternate interaction.
inline double frame_conjugation_check(const ModelParams& p, const HilbertSpace& space, double t) {
    const detail::Ladder L(space);
    const auto H_R = build_rabi(p, space);
    const auto N = build_number_ops(p, space);
    const auto eff = build_effective(p, space);
    const double wt = p.omega() * t;
    const complex down = std::polar(1.0, -2.0 * wt);
    const complex up = std::polar(1.0, 2.0 * wt);

    const auto U0 = diagonal_phase(N.jc, wt);
    const OperatorMatrix rf_target = eff.jc + p.g() * (down * L.a_s_minus() + up * L.ad_s_plus());
    const double rf_dev = (U0.adjoint() * H_R * U0 - rf_target).max_abs();

    const auto U0_bar = diagonal_phase(N.ajc, wt);
    const OperatorMatrix crf_target = eff.ajc + p.g() * (down * L.a_s_plus() + up * L.ad_s_minus());
    const double crf_dev = (U0_bar.adjoint() * H_R * U0_bar - crf_target).max_abs();

    return std::max(rf_dev, crf_dev);
}

} // namespace qrm

// analytic.hpp: closed-form dressed states, propagated states and observables
//
// Rotating frame (RF): H_JC drives the AJC eigenstate |Ψ̄_en^+>, which splits
// into the JC doublets {|e,n>,|g,n+1>} and {|g,n-1>,|e,n-2>}.
// Counter-rotating frame (CRF): H̄_AJC drives the JC eigenstate |Ψ_gn^->,
// which splits into the AJC doublets {|g,n>,|e,n+1>} and {|e,n-1>,|g,n-2>}.
//
// Each doublet evolves as exp(-i omega k t)(cos(Rt)|ψ> - i sin(Rt)|φ>) with
// |φ> = ±c|ψ> + s|partner>; nothing here builds a matrix or diagonalizes.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "qrm/hilbert.hpp"
#include "qrm/model.hpp"

namespace qrm {

enum class Interaction { jc, ajc };
enum class Sign { plus, minus };
enum class Frame { rf, crf };

inline const char* to_string(Frame f) noexcept { return f == Frame::rf ? "rf" : "crf"; }

// Rabi frequency and dressing cosine/sine of one qubit doublet.
struct BranchCoeffs {
    double rabi{0.0};
    double c{1.0};
    double s{0.0};
    Interaction interaction{Interaction::jc};
    Atom atom{Atom::e};
    int n{0};

    // JC-e and AJC-e doublets carry |φ> = +c|ψ> + s|partner>; the g-families
    // carry -c. Same sign shows up in the cos/sin mixing of the |ψ> amplitude.
    double c_sign() const noexcept { return atom == Atom::e ? 1.0 : -1.0; }

    // Photon number of the partner state coupled to |atom, n>.
    int partner_photon() const noexcept {
        const bool raises = (interaction == Interaction::jc) == (atom == Atom::e);
        return raises ? n + 1 : n - 1;
    }
    Atom partner_atom() const noexcept { return atom == Atom::e ? Atom::g : Atom::e; }
};

namespace detail {

inline void require_nonnegative(int n, const char* where) {
    if (n < 0) throw std::invalid_argument(std::string(where) + ": n must be >= 0, got " + std::to_string(n));
}

// R = sqrt(detuning^2/4 + g^2 m), c = detuning/2R, s = g sqrt(m)/R.
inline BranchCoeffs make_branch(Interaction kind, Atom atom, int n, double g, double detuning, int m) {
    BranchCoeffs b;
    b.interaction = kind;
    b.atom = atom;
    b.n = n;
    const double coupling = g * std::sqrt(static_cast<double>(m));
    b.rabi = std::hypot(coupling, 0.5 * detuning);
    if (b.rabi > 0.0) {
        b.c = detuning / (2.0 * b.rabi);
        b.s = coupling / b.rabi;
    } else {
        b.c = std::nan("");
        b.s = std::nan("");
    }
    return b;
}

} // namespace detail

// JC doublets: e(n) couples |e,n>,|g,n+1> with R = g sqrt((n+1) + xi^2);
// g(n) couples |g,n>,|e,n-1> with R = g sqrt(n + xi^2). Returns nullopt for
// the zero-frequency g(0) doublet at exact resonance.
inline std::optional<BranchCoeffs> try_jc_branch(const ModelParams& p, Atom atom, int n) {
    detail::require_nonnegative(n, "jc_branch");
    const int m = atom == Atom::e ? n + 1 : n;
    BranchCoeffs b = detail::make_branch(Interaction::jc, atom, n, p.g(), p.delta(), m);
    if (b.rabi == 0.0) return std::nullopt;
    return b;
}

inline BranchCoeffs jc_branch(const ModelParams& p, Atom atom, int n) {
    auto b = try_jc_branch(p, atom, n);
    if (!b) {
        throw DegenerateBranch("jc_branch: g-family at n = 0 with xi = 0 has R = 0; |g0> is a null vector of the "
                               "JC transition operator");
    }
    return *b;
}

// AJC doublets: e(n) couples |e,n>,|g,n-1> with R̄ = g sqrt(n + (xi+eps)^2);
// g(n) couples |g,n>,|e,n+1> with R̄ = g sqrt((n+1) + (xi+eps)^2).
inline BranchCoeffs ajc_branch(const ModelParams& p, Atom atom, int n) {
    detail::require_nonnegative(n, "ajc_branch");
    const int m = atom == Atom::e ? n : n + 1;
    BranchCoeffs b = detail::make_branch(Interaction::ajc, atom, n, p.g(), p.delta_bar(), m);
    if (!(b.rabi > 0.0)) {
        throw std::logic_error("ajc_branch: zero AJC Rabi frequency (delta_bar = " + std::to_string(p.delta_bar()) +
                               ")");
    }
    return b;
}

struct Eigenpair {
    StateVector state;
    double energy;
};

namespace detail {

struct Dressing {
    double c;
    double s;
    // cos(theta/2), sin(theta/2) for c = cos(theta), s = sin(theta) >= 0.
    double half_cos() const { return std::sqrt(std::max(0.0, 0.5 * (1.0 + c))); }
    double half_sin() const { return std::sqrt(std::max(0.0, 0.5 * (1.0 - c))); }
    // s^2 / (1 + c), evaluated as 1 - c where 1 + c would cancel.
    double ratio() const { return c >= 0.0 ? s * s / (1.0 + c) : 1.0 - c; }
};

// Dressing of the RF initial state |Ψ̄_en^+>.
inline Dressing rf_initial_dressing(const ModelParams& p, int n) {
    const auto b = ajc_branch(p, Atom::e, n);
    return {b.c, b.s};
}

// Dressing of the CRF initial state |Ψ_gn^->. At n = 0 the state is |g0> by
// overlap, whatever the sign of delta (or a zero R at resonance).
inline Dressing crf_initial_dressing(const ModelParams& p, int n) {
    if (n == 0) return {1.0, 0.0};
    const auto b = jc_branch(p, Atom::g, n);
    return {b.c, b.s};
}

inline void require_support(const HilbertSpace& space, int top_photon, const char* where) {
    if (top_photon > space.n_max()) {
        throw TruncationError(std::string(where) + ": state support needs n_max >= " + std::to_string(top_photon) +
                              ", have " + std::to_string(space.n_max()));
    }
}

// Adds weight * exp(-i omega k t)(cos(Rt)|ψ> - i sin(Rt)|φ>) for the doublet
// rooted at |atom, n>. A missing branch (zero Rabi frequency) leaves |ψ> static.
inline void add_doublet(StateVector& out, const std::optional<BranchCoeffs>& b, Atom atom, int n, int frame_number,
                        double omega, double t, double weight) {
    const complex phase = weight * std::polar(1.0, -omega * frame_number * t);
    if (!b) {
        out.amp(atom, n) += phase;
        return;
    }
    const double cs = std::cos(b->rabi * t);
    const double sn = std::sin(b->rabi * t);
    out.amp(atom, n) += phase * complex(cs, -b->c_sign() * b->c * sn);
    if (b->s != 0.0) out.amp(b->partner_atom(), b->partner_photon()) += phase * complex(0.0, -b->s * sn);
}

// 1 - 2 s^2 sin^2(Rt): twice the signed inversion carried by one doublet.
inline double doublet_inversion(const std::optional<BranchCoeffs>& b, double t) {
    if (!b) return 1.0;
    const double sn = std::sin(b->rabi * t);
    return 1.0 - 2.0 * b->s * b->s * sn * sn;
}

} // namespace detail

// AJC eigenstate |Ψ̄_en^±> with energy omega n ± R̄_en.
inline Eigenpair ajc_eigenstate(const ModelParams& p, const HilbertSpace& space, int n, Sign sign) {
    detail::require_nonnegative(n, "ajc_eigenstate");
    detail::require_support(space, n + 1, "ajc_eigenstate");
    if (n == 0 && sign == Sign::minus) throw NullState("ajc_eigenstate: |Ψ̄_e0^-> is the zero vector");
    const auto b = ajc_branch(p, Atom::e, n);
    const detail::Dressing d{b.c, b.s};
    auto psi = StateVector::zero(space);
    if (sign == Sign::plus) {
        psi.amp(Atom::e, n) = d.half_cos();
        if (n > 0) psi.amp(Atom::g, n - 1) = d.half_sin();
    } else {
        psi.amp(Atom::e, n) = d.half_sin();
        psi.amp(Atom::g, n - 1) = -d.half_cos();
    }
    const double energy = p.omega() * n + (sign == Sign::plus ? b.rabi : -b.rabi);
    return {std::move(psi), energy};
}

// JC eigenstate |Ψ_gn^∓> with energy omega n ∓ R_gn. At n = 0 the minus
// state is |g0> with energy -delta/2 and the plus state is null.
inline Eigenpair jc_eigenstate(const ModelParams& p, const HilbertSpace& space, int n, Sign sign) {
    detail::require_nonnegative(n, "jc_eigenstate");
    detail::require_support(space, n, "jc_eigenstate");
    if (n == 0) {
        if (sign == Sign::plus) throw NullState("jc_eigenstate: |Ψ_g0^+> is the zero vector");
        return {basis_state(space, Atom::g, 0), -0.5 * p.delta()};
    }
    const auto b = jc_branch(p, Atom::g, n);
    const detail::Dressing d{b.c, b.s};
    auto psi = StateVector::zero(space);
    if (sign == Sign::minus) {
        psi.amp(Atom::g, n) = d.half_cos();
        psi.amp(Atom::e, n - 1) = -d.half_sin();
    } else {
        psi.amp(Atom::g, n) = d.half_sin();
        psi.amp(Atom::e, n - 1) = d.half_cos();
    }
    const double energy = p.omega() * n + (sign == Sign::plus ? b.rabi : -b.rabi);
    return {std::move(psi), energy};
}

// The two orthogonal branch evolutions that make up a propagated frame state,
// and their (signed) weights in it. `lower` is absent at n = 0.
struct BranchEvolution {
    StateVector upper;
    std::optional<StateVector> lower;
    double upper_weight;
    double lower_weight;

    StateVector total() const {
        StateVector out = complex(upper_weight) * upper;
        if (lower) out += complex(lower_weight) * *lower;
        return out;
    }
};

// RF: |Ψ_en(t)> = U_JC(t)|e,n> and |Ψ_g,n-1(t)> = U_JC(t)|g,n-1>.
inline BranchEvolution rf_branches(const ModelParams& p, const HilbertSpace& space, int n, double t) {
    detail::require_nonnegative(n, "evolve_rf");
    detail::require_support(space, n + 2, "evolve_rf");
    const auto d = detail::rf_initial_dressing(p, n);
    BranchEvolution out{StateVector::zero(space), std::nullopt, d.half_cos(), d.half_sin()};
    detail::add_doublet(out.upper, jc_branch(p, Atom::e, n), Atom::e, n, n + 1, p.omega(), t, 1.0);
    if (n > 0) {
        auto lower = StateVector::zero(space);
        detail::add_doublet(lower, try_jc_branch(p, Atom::g, n - 1), Atom::g, n - 1, n - 1, p.omega(), t, 1.0);
        out.lower = std::move(lower);
    }
    return out;
}

// CRF: |Ψ̄_gn(t)> = Ū_AJC(t)|g,n> and |Ψ̄_e,n-1(t)> = Ū_AJC(t)|e,n-1>.
inline BranchEvolution crf_branches(const ModelParams& p, const HilbertSpace& space, int n, double t) {
    detail::require_nonnegative(n, "evolve_crf");
    detail::require_support(space, n + 2, "evolve_crf");
    const auto d = detail::crf_initial_dressing(p, n);
    BranchEvolution out{StateVector::zero(space), std::nullopt, d.half_cos(), -d.half_sin()};
    detail::add_doublet(out.upper, ajc_branch(p, Atom::g, n), Atom::g, n, n + 1, p.omega(), t, 1.0);
    if (n > 0) {
        auto lower = StateVector::zero(space);
        detail::add_doublet(lower, ajc_branch(p, Atom::e, n - 1), Atom::e, n - 1, n - 1, p.omega(), t, 1.0);
        out.lower = std::move(lower);
    }
    return out;
}

// U_JC(t)|Ψ̄_en^+>; requires n + 2 <= n_max.
inline StateVector evolve_rf(const ModelParams& p, const HilbertSpace& space, int n, double t) {
    return rf_branches(p, space, n, t).total();
}

// Ū_AJC(t)|Ψ_gn^->; requires n + 2 <= n_max.
inline StateVector evolve_crf(const ModelParams& p, const HilbertSpace& space, int n, double t) {
    return crf_branches(p, space, n, t).total();
}

// RF reports normal order (<s+s->, <a†a>); CRF reports antinormal order
// (<s-s+>, <a a†>).
struct Observables {
    double s_z{0.0};
    double atomic_excitation{0.0};
    double photon{0.0};
    double n_jc{0.0};
    double n_ajc{0.0};
};

inline Observables observables_rf(const ModelParams& p, int n, double t) {
    detail::require_nonnegative(n, "observables_rf");
    const auto d = detail::rf_initial_dressing(p, n);
    const double r = d.ratio();
    const double upper = detail::doublet_inversion(jc_branch(p, Atom::e, n), t);
    const double lower = n > 0 ? detail::doublet_inversion(try_jc_branch(p, Atom::g, n - 1), t) : 0.0;

    Observables o;
    o.s_z = 0.25 * ((1.0 + d.c) * upper - r * lower);
    o.atomic_excitation = 0.5 + o.s_z;
    o.photon = n + 0.5 - r - o.s_z;
    o.n_jc = n + 1 - r;
    o.n_ajc = n - r + 2.0 * (1.0 - o.s_z);
    return o;
}

inline Observables observables_crf(const ModelParams& p, int n, double t) {
    detail::require_nonnegative(n, "observables_crf");
    const auto d = detail::crf_initial_dressing(p, n);
    const double r = d.ratio();
    const double upper = detail::doublet_inversion(ajc_branch(p, Atom::g, n), t);
    const double lower = n > 0 ? detail::doublet_inversion(ajc_branch(p, Atom::e, n - 1), t) : 0.0;

    Observables o;
    o.s_z = -0.25 * ((1.0 + d.c) * upper - r * lower);
    o.atomic_excitation = 0.5 - o.s_z;
    o.photon = n + 1.5 - r + o.s_z;
    o.n_ajc = n + 2 - r;
    o.n_jc = n + 1 - r + 2.0 * o.s_z;
    return o;
}

inline Observables observables(Frame f, const ModelParams& p, int n, double t) {
    return f == Frame::rf ? observables_rf(p, n, t) : observables_crf(p, n, t);
}

inline StateVector evolve(Frame f, const ModelParams& p, const HilbertSpace& space, int n, double t) {
    return f == Frame::rf ? evolve_rf(p, space, n, t) : evolve_crf(p, space, n, t);
}

// Initial state of each frame: |Ψ̄_en^+> (RF) or |Ψ_gn^-> (CRF).
inline StateVector initial_state(Frame f, const ModelParams& p, const HilbertSpace& space, int n) {
    return f == Frame::rf ? ajc_eigenstate(p, space, n, Sign::plus).state
                          : jc_eigenstate(p, space, n, Sign::minus).state;
}

} // namespace qrm

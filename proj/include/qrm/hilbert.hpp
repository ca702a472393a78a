// hilbert.hpp: truncated Fock ⊗ qubit space, dense operators and states
//
// Basis convention: |a, n> sits at index 2n + (a == e), so cutting the photon
// ladder at n_max only removes trailing rows and columns. Units: hbar = 1.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qrm/errors.hpp"

namespace qrm {

using complex = std::complex<double>;

enum class Atom { g, e };

inline const char* to_string(Atom a) noexcept { return a == Atom::e ? "e" : "g"; }

class HilbertSpace {
public:
    explicit HilbertSpace(int n_max) : n_max_(n_max) {
        if (n_max < 0) {
            throw TruncationError("HilbertSpace: n_max must be >= 0, got " + std::to_string(n_max));
        }
    }

    int n_max() const noexcept { return n_max_; }
    Eigen::Index dim() const noexcept { return 2 * static_cast<Eigen::Index>(n_max_ + 1); }

    bool contains(int n) const noexcept { return n >= 0 && n <= n_max_; }

    Eigen::Index index(Atom a, int n) const {
        if (!contains(n)) {
            throw TruncationError("photon number " + std::to_string(n) + " outside [0, " +
                                  std::to_string(n_max_) + "]");
        }
        return 2 * static_cast<Eigen::Index>(n) + (a == Atom::e ? 1 : 0);
    }

    static int photon_of(Eigen::Index idx) noexcept { return static_cast<int>(idx / 2); }
    static Atom atom_of(Eigen::Index idx) noexcept { return (idx % 2) ? Atom::e : Atom::g; }

    friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

private:
    int n_max_;
};

namespace detail {

inline void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* where) {
    if (!(a == b)) {
        throw DimensionMismatch(std::string(where) + ": operands on different spaces (n_max " +
                                std::to_string(a.n_max()) + " vs " + std::to_string(b.n_max()) + ")");
    }
}

} // namespace detail

class StateVector {
public:
    StateVector(HilbertSpace space, Eigen::VectorXcd amps) : space_(space), amps_(std::move(amps)) {
        if (amps_.size() != space_.dim()) {
            throw DimensionMismatch("StateVector: amplitude count " + std::to_string(amps_.size()) +
                                    " != dim " + std::to_string(space_.dim()));
        }
    }

    static StateVector zero(HilbertSpace space) {
        return StateVector(space, Eigen::VectorXcd::Zero(space.dim()));
    }

    const HilbertSpace& space() const noexcept { return space_; }
    const Eigen::VectorXcd& amps() const noexcept { return amps_; }

    complex amp(Atom a, int n) const { return amps_(space_.index(a, n)); }
    complex& amp(Atom a, int n) { return amps_(space_.index(a, n)); }

    double norm() const { return amps_.norm(); }

    // <this|other>
    complex inner(const StateVector& other) const {
        detail::require_same_space(space_, other.space_, "inner");
        return amps_.dot(other.amps_);
    }

    double max_abs_diff(const StateVector& other) const {
        detail::require_same_space(space_, other.space_, "max_abs_diff");
        if (amps_.size() == 0) return 0.0;
        return (amps_ - other.amps_).cwiseAbs().maxCoeff();
    }

    StateVector& operator+=(const StateVector& o) {
        detail::require_same_space(space_, o.space_, "operator+=");
        amps_ += o.amps_;
        return *this;
    }
    StateVector& operator-=(const StateVector& o) {
        detail::require_same_space(space_, o.space_, "operator-=");
        amps_ -= o.amps_;
        return *this;
    }
    StateVector& operator*=(complex z) {
        amps_ *= z;
        return *this;
    }

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(complex z, StateVector a) { return a *= z; }

private:
    HilbertSpace space_;
    Eigen::VectorXcd amps_;
};

// |a, n>; throws TruncationError when n > n_max.
inline StateVector basis_state(const HilbertSpace& space, Atom a, int n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
    v(space.index(a, n)) = 1.0;
    return StateVector(space, std::move(v));
}

enum class Hermiticity { general, hermitian };

class OperatorMatrix {
public:
    static constexpr double kHermitianTol = 1e-13;

    OperatorMatrix(HilbertSpace space, Eigen::MatrixXcd m, Hermiticity tag = Hermiticity::general)
        : space_(space), m_(std::move(m)), hermitian_(tag == Hermiticity::hermitian) {
        if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
            throw DimensionMismatch("OperatorMatrix: shape " + std::to_string(m_.rows()) + "x" +
                                    std::to_string(m_.cols()) + " != dim " + std::to_string(space_.dim()));
        }
        if (hermitian_ && hermiticity_defect() > kHermitianTol) {
            throw NumericConsistencyError("OperatorMatrix: tagged Hermitian but max|M - M^dagger| = " +
                                          std::to_string(hermiticity_defect()));
        }
    }

    static OperatorMatrix zero(HilbertSpace space) {
        return {space, Eigen::MatrixXcd::Zero(space.dim(), space.dim()), Hermiticity::hermitian};
    }
    static OperatorMatrix identity(HilbertSpace space) {
        return {space, Eigen::MatrixXcd::Identity(space.dim(), space.dim()), Hermiticity::hermitian};
    }
    static OperatorMatrix diagonal(HilbertSpace space, const Eigen::VectorXd& d) {
        return {space, d.cast<complex>().asDiagonal().toDenseMatrix(), Hermiticity::hermitian};
    }

    const HilbertSpace& space() const noexcept { return space_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    bool hermitian() const noexcept { return hermitian_; }

    complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    double hermiticity_defect() const {
        if (m_.size() == 0) return 0.0;
        return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    }

    double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

    bool is_diagonal() const {
        for (Eigen::Index c = 0; c < m_.cols(); ++c)
            for (Eigen::Index r = 0; r < m_.rows(); ++r)
                if (r != c && m_(r, c) != complex{}) return false;
        return true;
    }

    OperatorMatrix adjoint() const { return {space_, m_.adjoint(), tag()}; }

    // Re-tag as Hermitian after checking numerically.
    OperatorMatrix as_hermitian() const { return {space_, m_, Hermiticity::hermitian}; }

    StateVector apply(const StateVector& psi) const {
        detail::require_same_space(space_, psi.space(), "apply");
        return StateVector(space_, m_ * psi.amps());
    }

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
        detail::require_same_space(a.space_, b.space_, "operator+");
        return {a.space_, a.m_ + b.m_, both_tag(a, b)};
    }
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
        detail::require_same_space(a.space_, b.space_, "operator-");
        return {a.space_, a.m_ - b.m_, both_tag(a, b)};
    }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        detail::require_same_space(a.space_, b.space_, "operator*");
        return {a.space_, a.m_ * b.m_, Hermiticity::general};
    }
    friend OperatorMatrix operator*(double x, const OperatorMatrix& a) { return {a.space_, x * a.m_, a.tag()}; }
    friend OperatorMatrix operator*(complex z, const OperatorMatrix& a) {
        return {a.space_, z * a.m_, Hermiticity::general};
    }
    friend StateVector operator*(const OperatorMatrix& a, const StateVector& psi) { return a.apply(psi); }

private:
    Hermiticity tag() const noexcept { return hermitian_ ? Hermiticity::hermitian : Hermiticity::general; }
    static Hermiticity both_tag(const OperatorMatrix& a, const OperatorMatrix& b) noexcept {
        return (a.hermitian_ && b.hermitian_) ? Hermiticity::hermitian : Hermiticity::general;
    }

    HilbertSpace space_;
    Eigen::MatrixXcd m_;
    bool hermitian_;
};

struct FockOperators {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
};

// Field-mode ladder operators, identity on the qubit factor. a|n> = sqrt(n)|n-1>.
inline FockOperators fock_operators(const HilbertSpace& space) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
    for (int n = 1; n <= space.n_max(); ++n) {
        const double amp = std::sqrt(static_cast<double>(n));
        for (Atom s : {Atom::g, Atom::e}) a(space.index(s, n - 1), space.index(s, n)) = amp;
    }
    Eigen::MatrixXcd ad = a.adjoint();
    return {OperatorMatrix(space, std::move(a)), OperatorMatrix(space, std::move(ad))};
}

struct QubitOperators {
    OperatorMatrix s_z;
    OperatorMatrix s_minus;
    OperatorMatrix s_plus;
};

// s_z = sigma_z / 2 (+1/2 on e), s_plus = |e><g|, identity on the Fock factor.
inline QubitOperators qubit_operators(const HilbertSpace& space) {
    const Eigen::Index d = space.dim();
    Eigen::VectorXd z(d);
    Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n <= space.n_max(); ++n) {
        z(space.index(Atom::g, n)) = -0.5;
        z(space.index(Atom::e, n)) = 0.5;
        sp(space.index(Atom::e, n), space.index(Atom::g, n)) = 1.0;
    }
    Eigen::MatrixXcd sm = sp.adjoint();
    return {OperatorMatrix::diagonal(space, z), OperatorMatrix(space, std::move(sm)),
            OperatorMatrix(space, std::move(sp))};
}

inline OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
    detail::require_same_space(A.space(), B.space(), "commutator");
    return {A.space(), A.matrix() * B.matrix() - B.matrix() * A.matrix()};
}

// Max |M_rc| over rows and columns whose photon index is <= keep.
inline double max_abs_on_block(const OperatorMatrix& M, int keep) {
    const Eigen::Index edge = std::min<Eigen::Index>(2 * (static_cast<Eigen::Index>(keep) + 1), M.space().dim());
    if (edge <= 0) return 0.0;
    return M.matrix().topLeftCorner(edge, edge).cwiseAbs().maxCoeff();
}

// exp(-i H t) through one Hermitian eigendecomposition, reusable across times.
class Propagator {
public:
    explicit Propagator(const OperatorMatrix& H) : space_(H.space()) {
        const double defect = H.hermiticity_defect();
        if (defect > OperatorMatrix::kHermitianTol) {
            throw NumericConsistencyError("Propagator: generator is not Hermitian (max|H - H^dagger| = " +
                                          std::to_string(defect) + ")");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H.matrix());
        if (solver.info() != Eigen::Success) {
            throw NumericConsistencyError("Propagator: eigendecomposition failed");
        }
        energies_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
    }

    const HilbertSpace& space() const noexcept { return space_; }
    const Eigen::VectorXd& energies() const noexcept { return energies_; }

    StateVector evolve(const StateVector& psi0, double t) const {
        detail::require_same_space(space_, psi0.space(), "Propagator::evolve");
        return at(vectors_.adjoint() * psi0.amps(), t);
    }

    // Full matrix exp(-i H t).
    OperatorMatrix unitary(double t) const {
        Eigen::VectorXcd phases(energies_.size());
        for (Eigen::Index k = 0; k < energies_.size(); ++k) phases(k) = std::polar(1.0, -energies_(k) * t);
        return {space_, vectors_ * phases.asDiagonal() * vectors_.adjoint()};
    }

    std::vector<StateVector> evolve_series(const StateVector& psi0, std::span<const double> times) const {
        detail::require_same_space(space_, psi0.space(), "Propagator::evolve_series");
        const Eigen::VectorXcd coeffs = vectors_.adjoint() * psi0.amps();
        std::vector<StateVector> out;
        out.reserve(times.size());
        for (double t : times) out.push_back(at(coeffs, t));
        return out;
    }

private:
    StateVector at(const Eigen::VectorXcd& coeffs, double t) const {
        Eigen::VectorXcd phased(coeffs.size());
        for (Eigen::Index k = 0; k < coeffs.size(); ++k) phased(k) = std::polar(1.0, -energies_(k) * t) * coeffs(k);
        return StateVector(space_, vectors_ * phased);
    }

    HilbertSpace space_;
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

inline StateVector evolve_with(const OperatorMatrix& H, const StateVector& psi0, double t) {
    return Propagator(H).evolve(psi0, t);
}

inline constexpr double kImagResidueTol = 1e-12;

// <psi|O|psi> for Hermitian O; the imaginary roundoff is checked, then dropped.
inline double expectation(const StateVector& psi, const OperatorMatrix& O) {
    detail::require_same_space(psi.space(), O.space(), "expectation");
    const complex v = psi.amps().dot(O.matrix() * psi.amps());
    if (std::abs(v.imag()) > kImagResidueTol) {
        throw NumericConsistencyError("expectation: imaginary residue " + std::to_string(v.imag()) +
                                      " exceeds " + std::to_string(kImagResidueTol));
    }
    return v.real();
}

} // namespace qrm

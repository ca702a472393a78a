// Shared helpers for the unit and property tests.

#pragma once

#include <random>

#include "qrm/hilbert.hpp"
#include "qrm/model.hpp"

namespace qrm::fixtures {

inline constexpr double kCrfXi = 1.0 / 1.31;
inline constexpr double kEps = 0.16;

inline ModelParams rf_figure() { return ModelParams::from_dimensionless(0.0, kEps); }
inline ModelParams crf_figure() { return ModelParams::from_dimensionless(kCrfXi, kEps); }

inline StateVector random_state(const HilbertSpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    Eigen::VectorXcd v(space.dim());
    for (auto& x : v) x = complex(d(rng), d(rng));
    return StateVector(space, v / v.norm());
}

inline OperatorMatrix random_hermitian(const HilbertSpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    Eigen::MatrixXcd m(space.dim(), space.dim());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = complex(d(rng), d(rng));
    return OperatorMatrix(space, 0.5 * (m + m.adjoint()).eval(), Hermiticity::hermitian);
}

// xi in [-2, 2], eps in (0, 2], redrawn until omega0 = g(2 xi + eps) >= 0.
struct ParamDraw {
    double xi;
    double eps;
    int n;
};

inline ParamDraw draw_params(std::mt19937_64& rng, int n_top = 10) {
    std::uniform_real_distribution<double> xi(-2.0, 2.0), eps(0.0, 2.0);
    std::uniform_int_distribution<int> n(0, n_top);
    for (;;) {
        ParamDraw p{xi(rng), eps(rng), n(rng)};
        if (p.eps > 0.0 && 2.0 * p.xi + p.eps >= 0.0) return p;
    }
}

} // namespace qrm::fixtures

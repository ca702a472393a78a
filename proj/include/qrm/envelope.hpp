// envelope.hpp: beat-envelope period of a two-frequency oscillation

#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qrm {

struct EnvelopePeaks {
    std::vector<double> positions;  // tau of each envelope maximum
    std::optional<double> period;   // mean spacing, if at least two maxima
};

// Carrier peaks are the local maxima of |x - mean(x)|; the envelope maxima
// are carrier peaks that dominate every other carrier peak within
// +-half_window, refined by a parabola through the neighbouring carrier
// peaks. Candidates closer than half_window to either end are ignored.
inline EnvelopePeaks find_envelope_peaks(std::span<const double> tau, std::span<const double> x, double half_window) {
    if (tau.size() != x.size()) throw std::invalid_argument("find_envelope_peaks: size mismatch");
    EnvelopePeaks out;
    if (x.size() < 3) return out;

    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    std::vector<double> ct, ce;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double a = std::abs(x[i - 1] - mean), b = std::abs(x[i] - mean), c = std::abs(x[i + 1] - mean);
        if (b >= a && b > c) {
            ct.push_back(tau[i]);
            ce.push_back(b);
        }
    }

    for (std::size_t k = 1; k + 1 < ct.size(); ++k) {
        if (ct[k] - tau.front() < half_window || tau.back() - ct[k] < half_window) continue;
        bool dominant = true;
        for (std::size_t j = 0; j < ct.size() && dominant; ++j) {
            if (j != k && std::abs(ct[j] - ct[k]) <= half_window && ce[j] > ce[k]) dominant = false;
        }
        if (!dominant) continue;

        // Vertex of the parabola through (t0,e0), (t1,e1), (t2,e2).
        const double t0 = ct[k - 1], t1 = ct[k], t2 = ct[k + 1];
        const double e0 = ce[k - 1], e1 = ce[k], e2 = ce[k + 1];
        const double num = (t1 - t0) * (t1 - t0) * (e1 - e2) - (t1 - t2) * (t1 - t2) * (e1 - e0);
        const double den = (t1 - t0) * (e1 - e2) - (t1 - t2) * (e1 - e0);
        double peak = t1;
        if (den != 0.0) {
            const double v = t1 - 0.5 * num / den;
            if (v > t0 && v < t2) peak = v;
        }
        if (!out.positions.empty() && peak - out.positions.back() <= half_window) continue;
        out.positions.push_back(peak);
    }

    if (out.positions.size() >= 2) {
        out.period = (out.positions.back() - out.positions.front()) / static_cast<double>(out.positions.size() - 1);
    }
    return out;
}

} // namespace qrm

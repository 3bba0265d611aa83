#include "rosenau/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rosenau {

namespace {

// Smallest root of c4*s^2 - c2*s + c0 = 0 inside (taking s = k^2) the band
// [0, s_max], or nullopt. Degenerate c4 handled as a linear equation.
std::optional<double> symbol_root_in_band(double c4, double c2, double c0, double s_max) {
    auto in_band = [&](double s) { return s >= 0.0 && s <= s_max; };
    if (c4 == 0.0) {
        if (c2 == 0.0) return std::nullopt;
        const double s = c0 / c2;
        return in_band(s) ? std::optional<double>(s) : std::nullopt;
    }
    const double disc = c2 * c2 - 4.0 * c4 * c0;
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    // Stable quadratic: avoid cancellation in the smaller root.
    const double q = (c2 + (c2 >= 0.0 ? sq : -sq)) / 2.0;
    double s1 = q / c4;
    double s2 = (q != 0.0) ? c0 / q : 0.0;
    if (s1 > s2) std::swap(s1, s2);
    if (in_band(s1)) return s1;
    if (in_band(s2)) return s2;
    return std::nullopt;
}

}  // namespace

SymbolTable build_symbols(const EquationParams& params, double cs, const Grid& grid,
                          double tol_factor) {
    SymbolTable t;
    t.grid = grid;
    t.cs = cs;
    t.resonance_tol = tol_factor * (1.0 + std::abs(cs) + params.epsilon);
    t.P.resize(grid.N);
    t.l.resize(grid.N);
    t.Q.resize(grid.N);

    const double c4 = params.beta * cs - params.gamma;
    const double c2 = params.alpha * cs - params.eta;
    const double c0 = cs - params.epsilon;

    t.min_abs_Q = std::numeric_limits<double>::infinity();
    for (int m = 0; m < grid.N; ++m) {
        const double k2 = grid.wavenumber(m) * grid.wavenumber(m);
        t.P[m] = 1.0 - params.alpha * k2 + params.beta * k2 * k2;
        t.l[m] = (params.epsilon - params.eta * k2 + params.gamma * k2 * k2) / t.P[m];
        t.Q[m] = c4 * k2 * k2 - c2 * k2 + c0;
        if (std::abs(t.Q[m]) < t.min_abs_Q) {
            t.min_abs_Q = std::abs(t.Q[m]);
            t.argmin_bin = m;
        }
    }

    const double k_max = std::abs(grid.wavenumber(grid.N / 2));
    if (auto s = symbol_root_in_band(c4, c2, c0, k_max * k_max)) t.resonant_k = std::sqrt(*s);
    t.resonant = t.resonant_k.has_value() || t.min_abs_Q < t.resonance_tol;
    return t;
}

}  // namespace rosenau

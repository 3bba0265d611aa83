#ifndef ROSENAU_SYMBOLS_HPP
#define ROSENAU_SYMBOLS_HPP

#include <optional>
#include <vector>

#include "rosenau/grid.hpp"
#include "rosenau/params.hpp"

namespace rosenau {

// Linear symbols of the problem over the grid wavenumbers:
//   P(k) = 1 - alpha k^2 + beta k^4                  (positive when alpha^2 < 4 beta)
//   l(k) = (eps - eta k^2 + gamma k^4) / P(k)        (linear phase velocity)
//   Q(k) = (beta cs - gamma) k^4 - (alpha cs - eta) k^2 + (cs - eps)
// The profile equation reads Q(k) phi_hat(k) = g(phi)_hat(k); the residual
// operator symbol is S(k) = -Q(k).
struct SymbolTable {
    Grid grid;
    double cs = 0.0;
    std::vector<double> P;
    std::vector<double> l;
    std::vector<double> Q;

    double min_abs_Q = 0.0;
    int argmin_bin = 0;

    // Real root of Q inside the grid band [0, k_max], if any: the Petviashvili
    // division is singular near it (GSW/PTW regime).
    std::optional<double> resonant_k;
    bool resonant = false;
    double resonance_tol = 0.0;

    double S(int bin) const { return -Q[bin]; }
};

// resonance_tol = tol_factor * (1 + |cs| + eps). Flags resonance when Q has a
// real root k in [0, k_max] or when min_m |Q(k_m)| < resonance_tol.
SymbolTable build_symbols(const EquationParams& params, double cs, const Grid& grid,
                          double tol_factor = 1e-8);

}  // namespace rosenau

#endif

#ifndef ROSENAU_GRID_HPP
#define ROSENAU_GRID_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rosenau {

// Uniform periodic collocation grid on [-L, L) with N nodes (N a power of two).
// Nodes x_j = -L + 2L j/N; wavenumbers k_m = pi*m/L for signed modes
// m in {-N/2+1, ..., N/2}, stored in FFT bin order (Nyquist counted as +N/2).
struct Grid {
    double L = 100.0;
    int N = 1024;

    Grid() = default;
    Grid(double half_length, int n) : L(half_length), N(n) {
        if (!(L > 0.0)) throw std::invalid_argument("grid half-length must be positive");
        if (N < 4 || (N & (N - 1)) != 0) throw std::invalid_argument("grid size must be a power of two >= 4");
    }

    double node(int j) const { return -L + 2.0 * L * j / N; }
    int signed_mode(int bin) const { return bin <= N / 2 ? bin : bin - N; }
    double wavenumber(int bin) const { return std::numbers::pi * signed_mode(bin) / L; }
    double spacing() const { return 2.0 * L / N; }
    // L2 quadrature weight: ||u||^2 = (2L/N) sum_j u_j^2.
    double quad_weight() const { return 2.0 * L / N; }
    int center_index() const { return N / 2; }  // x = 0

    bool operator==(const Grid&) const = default;
};

}  // namespace rosenau

#endif

#include "rosenau/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rosenau/errors.hpp"

namespace rosenau {

std::pair<double, double> conserved_quantities(const SpectralField& u,
                                               const EquationParams& p,
                                               const NonlinearitySpec& spec,
                                               FourierWorkspace& ws) {
    if (!has_primitive(spec))
        throw NoPrimitive("conserved quantities need a pointwise primitive G of g");
    const SpectralField ux = differentiate(u, 1, ws);
    const SpectralField uxx = differentiate(u, 2, ws);
    const double w = u.grid().quad_weight();
    double V = 0.0, H = 0.0;
    for (int j = 0; j < u.grid().N; ++j) {
        V += u[j] * u[j] - p.alpha * ux[j] * ux[j] + p.beta * uxx[j] * uxx[j];
        H += 0.5 * (p.epsilon * u[j] * u[j] - p.eta * ux[j] * ux[j] +
                    p.gamma * uxx[j] * uxx[j]) +
             eval_primitive(spec, u[j]);
    }
    return {0.5 * w * V, w * H};
}

namespace {

struct FitPoints {
    std::vector<double> x;
    std::vector<double> logy;
};

double lsq_slope(const FitPoints& pts) {
    const size_t n = pts.x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sx += pts.x[i];
        sy += pts.logy[i];
        sxx += pts.x[i] * pts.x[i];
        sxy += pts.x[i] * pts.logy[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

constexpr double kTailFloor = 1e-13;

}  // namespace

DecayFit decay_fit(const SpectralField& phi, const RegimeCoefficients& coeffs) {
    DecayFit fit;
    const RootSet roots = characteristic_roots(coeffs);

    // Slowest decaying direction: the stable root closest to the imaginary axis.
    double min_rate = 0.0;
    double im_of_min = 0.0;
    for (const auto& r : roots.roots) {
        if (r.real() < -1e-14) {
            const double rate = -r.real();
            if (min_rate == 0.0 || rate < min_rate) {
                min_rate = rate;
                im_of_min = std::abs(r.imag());
            }
        }
    }
    fit.predicted_rate = min_rate;
    fit.oscillatory = im_of_min > 1e-12;
    if (fit.oscillatory) fit.predicted_wavenumber = im_of_min;

    const Grid& grid = phi.grid();
    const double L = grid.L;
    const std::array<std::pair<double, double>, 2> windows = {
        std::pair{0.3 * L, 0.7 * L}, std::pair{0.15 * L, 0.35 * L}};

    for (const auto& [lo, hi] : windows) {
        fit.window_lo = lo;
        fit.window_hi = hi;
        int j_lo = grid.N, j_hi = 0;
        for (int j = 0; j < grid.N; ++j) {
            const double x = grid.node(j);
            if (x >= lo && x <= hi) {
                j_lo = std::min(j_lo, j);
                j_hi = std::max(j_hi, j);
            }
        }
        if (j_lo >= j_hi) continue;

        FitPoints pts;
        if (fit.oscillatory) {
            // Envelope through local maxima of |phi|.
            for (int j = std::max(j_lo, 1); j <= std::min(j_hi, grid.N - 2); ++j) {
                const double y = std::abs(phi[j]);
                if (y >= kTailFloor && y > std::abs(phi[j - 1]) && y >= std::abs(phi[j + 1])) {
                    pts.x.push_back(grid.node(j));
                    pts.logy.push_back(std::log(y));
                }
            }
            // Zero-crossing spacing -> oscillation wavenumber.
            std::vector<double> crossings;
            for (int j = j_lo; j < j_hi; ++j) {
                if (phi[j] == 0.0) continue;
                if ((phi[j] > 0.0) != (phi[j + 1] > 0.0) &&
                    std::max(std::abs(phi[j]), std::abs(phi[j + 1])) >= 1e-12) {
                    crossings.push_back(grid.node(j) +
                                        grid.spacing() * phi[j] / (phi[j] - phi[j + 1]));
                }
            }
            if (crossings.size() >= 3) {
                double mean_gap = (crossings.back() - crossings.front()) /
                                  static_cast<double>(crossings.size() - 1);
                fit.oscillation_wavenumber = std::numbers::pi / mean_gap;
            }
            if (pts.x.size() >= 3) {
                fit.fitted_rate = -lsq_slope(pts);
                return fit;
            }
        } else {
            for (int j = j_lo; j <= j_hi; ++j) {
                const double y = std::abs(phi[j]);
                if (y >= kTailFloor) {
                    pts.x.push_back(grid.node(j));
                    pts.logy.push_back(std::log(y));
                }
            }
            if (pts.x.size() >= 5) {
                fit.fitted_rate = -lsq_slope(pts);
                return fit;
            }
        }
    }
    throw TailBelowPrecision("tail below 1e-13 throughout the fit window");
}

double symmetry_defect(const SpectralField& phi) {
    const int n = phi.grid().N;
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = phi[j] - phi[(n - j) % n];
        num += d * d;
        den += phi[j] * phi[j];
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

std::vector<SweepEntry> speed_amplitude_sweep(const EquationParams& params,
                                              const NonlinearitySpec& spec,
                                              std::vector<double> cs_list, const Grid& grid,
                                              const SolveConfig& config,
                                              bool override_coercivity, int jobs) {
    std::sort(cs_list.begin(), cs_list.end());
    std::vector<SweepEntry> table(cs_list.size());
    std::atomic<size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= cs_list.size()) return;
            SweepEntry& e = table[i];
            e.cs = cs_list[i];
            if (!override_coercivity && !coercivity_check(params, e.cs)) {
                e.skipped = true;
                e.note = "coercivity condition fails at this speed";
                continue;
            }
            try {
                const SolveResult r = solve(params, e.cs, spec, grid, config);
                e.converged = r.converged;
                e.amplitude = r.amplitude;
                if (!r.converged) e.note = "not converged";
            } catch (const std::exception& ex) {
                e.converged = false;
                e.note = ex.what();
            }
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1 || cs_list.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const size_t n_threads = std::min(static_cast<size_t>(jobs), cs_list.size());
        pool.reserve(n_threads);
        for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return table;
}

}  // namespace rosenau

#ifndef ROSENAU_DIAGNOSTICS_HPP
#define ROSENAU_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rosenau/classify.hpp"
#include "rosenau/fourier.hpp"
#include "rosenau/nonlinearity.hpp"
#include "rosenau/params.hpp"
#include "rosenau/petviashvili.hpp"

namespace rosenau {

// V = (1/2) int (u^2 - alpha u_x^2 + beta u_xx^2) dx and
// H = int ( (1/2)(eps u^2 - eta u_x^2 + gamma u_xx^2) + G(u) ) dx, by spectral
// derivatives and grid quadrature. Throws NoPrimitive for the derivative form.
std::pair<double, double> conserved_quantities(const SpectralField& u,
                                               const EquationParams& params,
                                               const NonlinearitySpec& spec,
                                               FourierWorkspace& ws);

struct DecayFit {
    double fitted_rate = 0.0;
    double predicted_rate = 0.0;  // min |Re lambda| over stable characteristic roots
    std::optional<double> oscillation_wavenumber;  // pi / mean zero-crossing spacing
    std::optional<double> predicted_wavenumber;    // |Im lambda| of the decaying root
    double window_lo = 0.0;
    double window_hi = 0.0;
    bool oscillatory = false;
};

// Least-squares slope of log|phi| over the tail window X in [0.3 L, 0.7 L]
// (envelope through local maxima when the decaying root is complex). The
// window shrinks toward the core once if the tail is below 1e-13, then
// TailBelowPrecision is thrown.
DecayFit decay_fit(const SpectralField& phi, const RegimeCoefficients& coeffs);

// ||phi(X) - phi(-X)||_2 / ||phi||_2 via index reflection.
double symmetry_defect(const SpectralField& phi);

struct SweepEntry {
    double cs = 0.0;
    double amplitude = 0.0;
    bool converged = false;
    bool skipped = false;  // coercivity gate
    std::string note;
};

// Independent solves per speed (parallel up to `jobs`); speeds failing the
// coercivity check are flagged and skipped unless override_coercivity.
std::vector<SweepEntry> speed_amplitude_sweep(const EquationParams& params,
                                              const NonlinearitySpec& spec,
                                              std::vector<double> cs_list, const Grid& grid,
                                              const SolveConfig& config,
                                              bool override_coercivity = false, int jobs = 1);

}  // namespace rosenau

#endif

#ifndef ROSENAU_EVOLVE_HPP
#define ROSENAU_EVOLVE_HPP

#include <vector>

#include "rosenau/fourier.hpp"
#include "rosenau/nonlinearity.hpp"
#include "rosenau/params.hpp"
#include "rosenau/symbols.hpp"

namespace rosenau {

struct EvolveConfig {
    double dt = 1e-3;
    double T = 1.0;
    int record_every = 100;  // steps between stored snapshots
};

// Exact linear evolution u_hat(k,t) = e^{-i k l(k) t} u_hat(k,0).
SpectralField linear_propagator(const SpectralField& u0, double t, const SymbolTable& symbols,
                                FourierWorkspace& ws);

// G(u) = -M^{-1} d_x g(u): in Fourier space -i k g_hat(u)(k) / P(k).
SpectralField nonlinear_rhs(const SpectralField& u, const SymbolTable& symbols,
                            const NonlinearitySpec& spec, FourierWorkspace& ws);

struct TrajectorySample {
    double t = 0.0;
    std::vector<double> values;
    double V = 0.0;  // NaN when the nonlinearity has no primitive
    double H = 0.0;
};

struct Trajectory {
    Grid grid;
    std::vector<TrajectorySample> samples;
    SpectralField final_state;
    double dt = 0.0;
    double T = 0.0;
};

// Integrating-factor RK4 in Fourier space: the linear phase is applied
// exactly, classical RK4 handles the transformed nonlinear term. Throws BlowUp
// when the sup norm exceeds 1e6.
Trajectory evolve(const SpectralField& u0, const EquationParams& params,
                  const NonlinearitySpec& spec, const EvolveConfig& config);

// L-infinity distance between u and ref translated right by `shift`.
double shape_error_translated(const SpectralField& u, const SpectralField& ref, double shift,
                              FourierWorkspace& ws);

struct ShiftFit {
    double shift = 0.0;
    double error = 0.0;
};

// Integer-node translation maximizing the cross-correlation, and the
// L-infinity error at that shift.
ShiftFit best_translation_error(const SpectralField& u, const SpectralField& ref,
                                FourierWorkspace& ws);

}  // namespace rosenau

#endif

#ifndef ROSENAU_PETVIASHVILI_HPP
#define ROSENAU_PETVIASHVILI_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rosenau/classify.hpp"
#include "rosenau/fourier.hpp"
#include "rosenau/nonlinearity.hpp"
#include "rosenau/params.hpp"
#include "rosenau/symbols.hpp"

namespace rosenau {

enum class GuessKind { SechSquared, SechFourth, Gaussian, FromFile };

struct GuessSpec {
    GuessKind kind = GuessKind::SechSquared;
    double amplitude = 1.0;  // SechFourth / Gaussian
    double width = 1.0;
    std::string path;  // FromFile
};

struct SolveConfig {
    // Stabilizing exponent; unset -> nu = d/(d-1) from the lowest degree d of g.
    std::optional<double> nu;
    double tol = 1e-12;  // applied to all three monitors
    int max_iter = 500;
    GuessSpec guess;
    bool allow_resonance = false;  // clamp near-zero denominators instead of failing
    bool dealias = false;          // 3/2-rule zero padding for the nonlinear term
};

struct IterationRecord {
    int n = 0;
    double error = 0.0;     // ||phi_n - phi_{n-1}||_2
    double stab_err = 0.0;  // |1 - M_n|
    double res = 0.0;       // ||S phi_n + g(phi_n)||_2
    double M = 0.0;
};

struct IterationTrace {
    std::vector<IterationRecord> records;
};

struct SolveResult {
    SpectralField profile;
    IterationTrace trace;
    bool converged = false;
    double amplitude = 0.0;  // signed value at X = 0 after recentering
    int iterations = 0;
    double nu_used = 0.0;
    bool resonance_clamped = false;
    std::vector<std::string> warnings;
};

// SechSquared is the homoclinic principal-part profile
// A(X) = (9a/4b) sech^2( (1/2) sqrt(a/b) X ), available only for a, b > 0
// (throws GuessUnavailable otherwise). SechFourth/Gaussian take (amplitude,
// width): amplitude*sech^4(width*X) and amplitude*exp(-width*X^2).
SpectralField initial_guess(const GuessSpec& kind, const RegimeCoefficients& coeffs,
                            const Grid& grid);

// DFT coefficients of g(phi) evaluated at the nodes (spectral phi_x, phi_xx for
// the derivative form); optional 3/2-rule dealiasing.
std::vector<std::complex<double>> nonlinearity_coeffs(const SpectralField& phi,
                                                      const NonlinearitySpec& spec,
                                                      FourierWorkspace& ws,
                                                      bool dealias = false);

// M_n = -sum_k S(k)|phi_hat|^2 / sum_k g_hat conj(phi_hat). The pairing is real
// for real fields; throws ZeroDenominator when it vanishes.
double stabilizing_factor(const SpectralField& phi, const SymbolTable& symbols,
                          const NonlinearitySpec& spec, FourierWorkspace& ws,
                          bool dealias = false);

// One iteration: phi_hat_{n+1}(k) = -M_n^nu g_hat(k) / S(k). nu = 0 gives the
// plain fixed-point map. Throws ResonantWavenumber unless allow_resonance, in
// which case near-zero denominators are clamped sign-preservingly.
SpectralField petviashvili_step(const SpectralField& phi, const SymbolTable& symbols,
                                const NonlinearitySpec& spec, double nu, FourierWorkspace& ws,
                                bool allow_resonance = false, bool dealias = false);

// ||S phi + g(phi)||_2 with S applied spectrally and g pointwise.
double residual_norm(const SpectralField& phi, const SymbolTable& symbols,
                     const NonlinearitySpec& spec, FourierWorkspace& ws);

// Iterate until max(Error, |1-M|, RES) <= tol or max_iter; the returned profile
// is recentered so the extremum of largest magnitude sits at X = 0.
SolveResult solve(const EquationParams& params, double cs, const NonlinearitySpec& spec,
                  const Grid& grid, const SolveConfig& config);

}  // namespace rosenau

#endif

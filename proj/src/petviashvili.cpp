#include "rosenau/petviashvili.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "rosenau/errors.hpp"
#include "rosenau/io.hpp"

namespace rosenau {

namespace {

double weighted_l2(const std::vector<double>& v, double w) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(w * s);
}

// Values of g(phi) at the nodes.
std::vector<double> nonlinearity_values(const SpectralField& phi, const NonlinearitySpec& spec,
                                        FourierWorkspace& ws) {
    const int n = phi.grid().N;
    std::vector<double> g(n);
    if (needs_derivatives(spec)) {
        const SpectralField ux = differentiate(phi, 1, ws);
        const SpectralField uxx = differentiate(phi, 2, ws);
        for (int j = 0; j < n; ++j) g[j] = eval_nonlinearity(spec, phi[j], ux[j], uxx[j]);
    } else {
        for (int j = 0; j < n; ++j) g[j] = eval_nonlinearity(spec, phi[j]);
    }
    return g;
}

// Zero-pad the spectrum from N to M = 3N/2 bins. The Nyquist amplitude is
// split evenly between the +-N/2 modes of the finer grid.
std::vector<std::complex<double>> pad_spectrum(const std::vector<std::complex<double>>& c,
                                               int n, int m) {
    std::vector<std::complex<double>> p(m, 0.0);
    for (int i = 0; i < n / 2; ++i) p[i] = c[i];
    for (int i = 1; i < n / 2; ++i) p[m - i] = c[n - i];
    p[n / 2] = c[n / 2] / 2.0;
    p[m - n / 2] = c[n / 2] / 2.0;
    return p;
}

std::vector<std::complex<double>> truncate_spectrum(const std::vector<std::complex<double>>& p,
                                                    int n, int m) {
    std::vector<std::complex<double>> c(n, 0.0);
    for (int i = 0; i < n / 2; ++i) c[i] = p[i];
    for (int i = 1; i < n / 2; ++i) c[n - i] = p[m - i];
    c[n / 2] = p[n / 2] + p[m - n / 2];
    return c;
}

}  // namespace

SpectralField initial_guess(const GuessSpec& g, const RegimeCoefficients& coeffs,
                            const Grid& grid) {
    switch (g.kind) {
        case GuessKind::SechSquared: {
            if (!(coeffs.a > 0.0) || !(coeffs.b > 0.0))
                throw GuessUnavailable(
                    "sech^2 guess needs a > 0 and b > 0 (a=" + std::to_string(coeffs.a) +
                    ", b=" + std::to_string(coeffs.b) + ")");
            const double amp = 9.0 * coeffs.a / (4.0 * coeffs.b);
            const double w = 0.5 * std::sqrt(coeffs.a / coeffs.b);
            return SpectralField::sample(grid, [&](double x) {
                const double s = 1.0 / std::cosh(w * x);
                return amp * s * s;
            });
        }
        case GuessKind::SechFourth:
            return SpectralField::sample(grid, [&](double x) {
                const double s = 1.0 / std::cosh(g.width * x);
                return g.amplitude * s * s * s * s;
            });
        case GuessKind::Gaussian:
            return SpectralField::sample(
                grid, [&](double x) { return g.amplitude * std::exp(-g.width * x * x); });
        case GuessKind::FromFile:
            return read_profile_csv(g.path, grid);
    }
    throw GuessUnavailable("unknown guess kind");
}

std::vector<std::complex<double>> nonlinearity_coeffs(const SpectralField& phi,
                                                      const NonlinearitySpec& spec,
                                                      FourierWorkspace& ws, bool dealias) {
    const Grid& grid = phi.grid();
    if (!dealias) return ws.forward(nonlinearity_values(phi, spec, ws));

    const int n = grid.N;
    const int m = 3 * n / 2;
    FourierWorkspace fine(m);
    const auto pad = pad_spectrum(phi.coeffs(ws), n, m);
    std::vector<double> vals = fine.backward(pad);
    if (needs_derivatives(spec)) {
        auto cx = pad;
        auto cxx = pad;
        for (int i = 0; i < m; ++i) {
            const int mode = i <= m / 2 ? i : i - m;
            const std::complex<double> ik(0.0, std::numbers::pi * mode / grid.L);
            cx[i] *= ik;
            cxx[i] *= ik * ik;
        }
        const std::vector<double> ux = fine.backward(cx);
        const std::vector<double> uxx = fine.backward(cxx);
        for (int j = 0; j < m; ++j) vals[j] = eval_nonlinearity(spec, vals[j], ux[j], uxx[j]);
    } else {
        for (int j = 0; j < m; ++j) vals[j] = eval_nonlinearity(spec, vals[j]);
    }
    return truncate_spectrum(fine.forward(vals), n, m);
}

double stabilizing_factor(const SpectralField& phi, const SymbolTable& symbols,
                          const NonlinearitySpec& spec, FourierWorkspace& ws, bool dealias) {
    const auto& ph = phi.coeffs(ws);
    const auto gh = nonlinearity_coeffs(phi, spec, ws, dealias);
    const int n = phi.grid().N;

    double num = 0.0;
    std::complex<double> den = 0.0;
    double den_scale = 0.0;
    double phi_scale = 0.0;
    for (int m = 0; m < n; ++m) {
        num -= symbols.S(m) * std::norm(ph[m]);
        den += gh[m] * std::conj(ph[m]);
        den_scale += std::abs(gh[m]) * std::abs(ph[m]);
        phi_scale += std::norm(ph[m]);
    }
    if (phi_scale == 0.0) throw ZeroDenominator("stabilizing factor of the zero field");
    if (den_scale == 0.0 || std::abs(den) < 1e-14 * den_scale)
        throw ZeroDenominator("nonlinearity pairing vanishes");
    if (std::abs(den.imag()) > 1e-10 * std::abs(den))
        throw ZeroDenominator("nonlinearity pairing is not real (complex field?)");
    return num / den.real();
}

namespace {

SpectralField step_impl(const SpectralField& phi, const SymbolTable& symbols,
                        const NonlinearitySpec& spec, double nu, FourierWorkspace& ws,
                        bool allow_resonance, bool dealias, double M, bool* clamped) {
    if (symbols.resonant && !allow_resonance)
        throw ResonantWavenumber(
            symbols.resonant_k.value_or(symbols.grid.wavenumber(symbols.argmin_bin)));

    const auto gh = nonlinearity_coeffs(phi, spec, ws, dealias);
    const int n = phi.grid().N;
    const double factor = std::pow(M, nu);
    std::vector<std::complex<double>> next(n);
    for (int m = 0; m < n; ++m) {
        double s = symbols.S(m);
        if (allow_resonance && std::abs(s) < symbols.resonance_tol) {
            s = std::copysign(symbols.resonance_tol, s == 0.0 ? 1.0 : s);
            if (clamped) *clamped = true;
        }
        next[m] = -factor * gh[m] / s;
    }
    double imag_defect = 0.0;
    SpectralField out = SpectralField::from_coeffs(phi.grid(), next, ws, &imag_defect);
    const double scale = std::max(out.linf_norm(), 1e-300);
    if (imag_defect > 1e-10 * scale)
        throw ZeroDenominator("iterate has a non-negligible imaginary residue");
    return out;
}

}  // namespace

SpectralField petviashvili_step(const SpectralField& phi, const SymbolTable& symbols,
                                const NonlinearitySpec& spec, double nu, FourierWorkspace& ws,
                                bool allow_resonance, bool dealias) {
    const double M = stabilizing_factor(phi, symbols, spec, ws, dealias);
    return step_impl(phi, symbols, spec, nu, ws, allow_resonance, dealias, M, nullptr);
}

double residual_norm(const SpectralField& phi, const SymbolTable& symbols,
                     const NonlinearitySpec& spec, FourierWorkspace& ws) {
    const auto& ph = phi.coeffs(ws);
    const int n = phi.grid().N;
    std::vector<std::complex<double>> sphi(n);
    for (int m = 0; m < n; ++m) sphi[m] = symbols.S(m) * ph[m];
    std::vector<double> r = ws.backward(sphi);
    const std::vector<double> g = nonlinearity_values(phi, spec, ws);
    for (int j = 0; j < n; ++j) r[j] += g[j];
    return weighted_l2(r, phi.grid().quad_weight());
}

SolveResult solve(const EquationParams& params, double cs, const NonlinearitySpec& spec,
                  const Grid& grid, const SolveConfig& config) {
    const ValidityReport validity = validate_params(params);
    if (!validity.ok) {
        std::string msg = "invalid equation parameters:";
        for (const auto& v : validity.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    if (config.tol <= 0.0 || config.max_iter < 1)
        throw std::invalid_argument("solver needs tol > 0 and max_iter >= 1");

    const RegimeCoefficients coeffs = ab_coefficients(params, cs);
    const SymbolTable symbols = build_symbols(params, cs, grid);
    if (symbols.resonant && !config.allow_resonance)
        throw ResonantWavenumber(
            symbols.resonant_k.value_or(symbols.grid.wavenumber(symbols.argmin_bin)));

    SolveResult result{SpectralField::zero(grid), {}, false, 0.0, 0, 0.0, false, {}};

    double nu;
    if (config.nu) {
        nu = *config.nu;
        if (!(nu > 1.0)) throw std::invalid_argument("stabilizing exponent nu must be > 1");
    } else {
        const auto auto_nu = default_exponent(spec);
        if (!auto_nu)
            throw std::invalid_argument(
                "no default exponent for this nonlinearity; set nu explicitly");
        nu = *auto_nu;
        if (!homogeneity_degree(spec))
            result.warnings.push_back(
                "nu taken from the lowest-degree term of a non-homogeneous nonlinearity; "
                "convergence is not guaranteed");
    }
    result.nu_used = nu;

    FourierWorkspace ws(grid.N);
    SpectralField phi = initial_guess(config.guess, coeffs, grid);

    for (int n = 1; n <= config.max_iter; ++n) {
        const double M = stabilizing_factor(phi, symbols, spec, ws, config.dealias);
        SpectralField next = step_impl(phi, symbols, spec, nu, ws, config.allow_resonance,
                                       config.dealias, M, &result.resonance_clamped);
        std::vector<double> diff(grid.N);
        for (int j = 0; j < grid.N; ++j) diff[j] = next[j] - phi[j];
        IterationRecord rec;
        rec.n = n;
        rec.error = weighted_l2(diff, grid.quad_weight());
        rec.stab_err = std::abs(1.0 - M);
        rec.res = residual_norm(next, symbols, spec, ws);
        rec.M = M;
        result.trace.records.push_back(rec);
        phi = std::move(next);
        result.iterations = n;
        if (std::max({rec.error, rec.stab_err, rec.res}) <= config.tol) {
            result.converged = true;
            break;
        }
        if (!std::isfinite(rec.error) || !std::isfinite(rec.M)) break;
    }

    // Recenter the extremum of largest magnitude onto X = 0 (exact periodic
    // translation by an integer number of spacings).
    int jmax = 0;
    for (int j = 1; j < grid.N; ++j)
        if (std::abs(phi[j]) > std::abs(phi[jmax])) jmax = j;
    result.profile = recenter_on_index(phi, jmax);
    result.amplitude = result.profile[grid.center_index()];
    return result;
}

}  // namespace rosenau

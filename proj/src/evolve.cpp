#include "rosenau/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rosenau/diagnostics.hpp"
#include "rosenau/errors.hpp"

namespace rosenau {

SpectralField linear_propagator(const SpectralField& u0, double t, const SymbolTable& symbols,
                                FourierWorkspace& ws) {
    const Grid& g = u0.grid();
    auto c = u0.coeffs(ws);
    for (int m = 0; m < g.N; ++m) {
        const double phase = -g.wavenumber(m) * symbols.l[m] * t;
        c[m] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    // Keep the Nyquist coefficient real so the field stays real.
    c[g.N / 2] = std::complex<double>(c[g.N / 2].real(), 0.0);
    return SpectralField::from_coeffs(g, c, ws);
}

namespace {

std::vector<std::complex<double>> rhs_coeffs(const std::vector<std::complex<double>>& u_hat,
                                             const SymbolTable& symbols,
                                             const NonlinearitySpec& spec,
                                             FourierWorkspace& ws) {
    const Grid& g = symbols.grid;
    const std::vector<double> u = ws.backward(u_hat);
    std::vector<double> gv(g.N);
    if (needs_derivatives(spec)) {
        auto cx = u_hat;
        auto cxx = u_hat;
        for (int m = 0; m < g.N; ++m) {
            const std::complex<double> ik(0.0, g.wavenumber(m));
            cx[m] *= ik;
            cxx[m] *= ik * ik;
        }
        cx[g.N / 2] = 0.0;
        const std::vector<double> ux = ws.backward(cx);
        const std::vector<double> uxx = ws.backward(cxx);
        for (int j = 0; j < g.N; ++j) gv[j] = eval_nonlinearity(spec, u[j], ux[j], uxx[j]);
    } else {
        for (int j = 0; j < g.N; ++j) gv[j] = eval_nonlinearity(spec, u[j]);
    }
    auto gh = ws.forward(gv);
    for (int m = 0; m < g.N; ++m) {
        const std::complex<double> ik(0.0, g.wavenumber(m));
        gh[m] *= -ik / symbols.P[m];
    }
    gh[g.N / 2] = 0.0;  // odd symbol has no Nyquist image
    return gh;
}

}  // namespace

SpectralField nonlinear_rhs(const SpectralField& u, const SymbolTable& symbols,
                            const NonlinearitySpec& spec, FourierWorkspace& ws) {
    return SpectralField::from_coeffs(u.grid(), rhs_coeffs(u.coeffs(ws), symbols, spec, ws), ws);
}

Trajectory evolve(const SpectralField& u0, const EquationParams& params,
                  const NonlinearitySpec& spec, const EvolveConfig& config) {
    if (!(config.dt > 0.0) || !(config.T > 0.0))
        throw std::invalid_argument("evolution needs dt > 0 and T > 0");
    const Grid& g = u0.grid();
    FourierWorkspace ws(g.N);
    const SymbolTable symbols = build_symbols(params, 0.0, g);

    const long long steps = std::llround(config.T / config.dt);
    const double dt = config.T / static_cast<double>(steps);
    const int record_every = std::max(1, config.record_every);

    // e^{lambda dt/2}, e^{lambda dt} with lambda(k) = -i k l(k) (unimodular).
    std::vector<std::complex<double>> E1(g.N), E2(g.N);
    for (int m = 0; m < g.N; ++m) {
        const double phase = -g.wavenumber(m) * symbols.l[m];
        E1[m] = std::complex<double>(std::cos(phase * dt / 2), std::sin(phase * dt / 2));
        E2[m] = std::complex<double>(std::cos(phase * dt), std::sin(phase * dt));
    }

    Trajectory traj{g, {}, u0, dt, config.T};
    const bool track_invariants = has_primitive(spec);

    auto record = [&](double t, const std::vector<std::complex<double>>& c) {
        SpectralField u = SpectralField::from_coeffs(g, c, ws);
        if (u.linf_norm() > 1e6) throw BlowUp(t);
        TrajectorySample s;
        s.t = t;
        s.values = u.values();
        if (track_invariants) {
            auto [V, H] = conserved_quantities(u, params, spec, ws);
            s.V = V;
            s.H = H;
        } else {
            s.V = s.H = std::nan("");
        }
        traj.samples.push_back(std::move(s));
        return u;
    };

    auto c = u0.coeffs(ws);
    record(0.0, c);

    const int n = g.N;
    std::vector<std::complex<double>> a(n), b(n), c4(n);
    for (long long step = 0; step < steps; ++step) {
        const auto K1 = rhs_coeffs(c, symbols, spec, ws);
        for (int m = 0; m < n; ++m) a[m] = E1[m] * (c[m] + dt / 2.0 * K1[m]);
        const auto K2 = rhs_coeffs(a, symbols, spec, ws);
        for (int m = 0; m < n; ++m) b[m] = E1[m] * c[m] + dt / 2.0 * K2[m];
        const auto K3 = rhs_coeffs(b, symbols, spec, ws);
        for (int m = 0; m < n; ++m) c4[m] = E2[m] * c[m] + dt * E1[m] * K3[m];
        const auto K4 = rhs_coeffs(c4, symbols, spec, ws);
        for (int m = 0; m < n; ++m)
            c[m] = E2[m] * c[m] +
                   dt / 6.0 * (E2[m] * K1[m] + 2.0 * E1[m] * (K2[m] + K3[m]) + K4[m]);

        if (!std::isfinite(c[0].real())) throw BlowUp((step + 1) * dt);
        if ((step + 1) % record_every == 0 && step + 1 < steps)
            record((step + 1) * dt, c);
    }
    traj.final_state = record(steps * dt, c);
    return traj;
}

double shape_error_translated(const SpectralField& u, const SpectralField& ref, double shift,
                              FourierWorkspace& ws) {
    const SpectralField moved = translate(ref, shift, ws);
    double worst = 0.0;
    for (int j = 0; j < u.grid().N; ++j)
        worst = std::max(worst, std::abs(u[j] - moved[j]));
    return worst;
}

ShiftFit best_translation_error(const SpectralField& u, const SpectralField& ref,
                                FourierWorkspace& ws) {
    const Grid& g = u.grid();
    const auto& cu = u.coeffs(ws);
    const auto& cr = ref.coeffs(ws);
    std::vector<std::complex<double>> prod(g.N);
    for (int m = 0; m < g.N; ++m) prod[m] = cu[m] * std::conj(cr[m]);
    // corr[j] = sum_m cu conj(cr) e^{2 pi i m j / N}: correlation against the
    // reference shifted right by j nodes.
    const std::vector<double> corr = ws.backward(prod);
    int best = 0;
    for (int j = 1; j < g.N; ++j)
        if (corr[j] > corr[best]) best = j;
    ShiftFit fit;
    fit.shift = best * g.spacing();
    fit.error = shape_error_translated(u, ref, fit.shift, ws);
    return fit;
}

}  // namespace rosenau

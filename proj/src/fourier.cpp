#include "rosenau/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace rosenau {

namespace {
// fftw_execute is thread-safe on distinct plans; planning is not.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

FourierWorkspace::FourierWorkspace(int n) : n_(n) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("transform size must be a power of two >= 4");
    buf_in_ = static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
    buf_out_ = static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                            reinterpret_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
}

FourierWorkspace::~FourierWorkspace() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

std::vector<std::complex<double>> FourierWorkspace::forward(std::span<const double> values) {
    if (static_cast<int>(values.size()) != n_)
        throw std::invalid_argument("field size does not match workspace");
    for (int j = 0; j < n_; ++j) buf_in_[j] = values[j];
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::vector<std::complex<double>> coeffs(n_);
    const double scale = 1.0 / n_;
    for (int m = 0; m < n_; ++m) coeffs[m] = buf_out_[m] * scale;
    return coeffs;
}

std::vector<double> FourierWorkspace::backward(std::span<const std::complex<double>> coeffs,
                                               double* imag_defect) {
    if (static_cast<int>(coeffs.size()) != n_)
        throw std::invalid_argument("coefficient size does not match workspace");
    std::copy(coeffs.begin(), coeffs.end(), buf_in_);
    fftw_execute(static_cast<fftw_plan>(bwd_));
    std::vector<double> values(n_);
    double worst = 0.0;
    for (int j = 0; j < n_; ++j) {
        values[j] = buf_out_[j].real();
        worst = std::max(worst, std::abs(buf_out_[j].imag()));
    }
    if (imag_defect) *imag_defect = worst;
    return values;
}

SpectralField::SpectralField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.N)
        throw std::invalid_argument("value count does not match grid");
}

SpectralField SpectralField::zero(const Grid& grid) {
    return SpectralField(grid, std::vector<double>(grid.N, 0.0));
}

SpectralField SpectralField::from_coeffs(const Grid& grid,
                                         std::span<const std::complex<double>> coeffs,
                                         FourierWorkspace& ws, double* imag_defect) {
    SpectralField f(grid, ws.backward(coeffs, imag_defect));
    f.coeffs_.assign(coeffs.begin(), coeffs.end());
    f.have_coeffs_ = true;
    return f;
}

void SpectralField::set_values(std::vector<double> v) {
    if (static_cast<int>(v.size()) != grid_.N)
        throw std::invalid_argument("value count does not match grid");
    values_ = std::move(v);
    have_coeffs_ = false;
}

const std::vector<std::complex<double>>& SpectralField::coeffs(FourierWorkspace& ws) const {
    if (!have_coeffs_) {
        coeffs_ = ws.forward(values_);
        have_coeffs_ = true;
    }
    return coeffs_;
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(grid_.quad_weight() * s);
}

double SpectralField::linf_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

SpectralField differentiate(const SpectralField& field, int order, FourierWorkspace& ws) {
    if (order < 1 || order > 4) throw std::invalid_argument("derivative order must be 1..4");
    const Grid& g = field.grid();
    auto c = field.coeffs(ws);
    for (int m = 0; m < g.N; ++m) {
        const std::complex<double> ik(0.0, g.wavenumber(m));
        std::complex<double> factor = 1.0;
        for (int d = 0; d < order; ++d) factor *= ik;
        c[m] *= factor;
    }
    // The Nyquist mode has no well-defined odd derivative on a real grid.
    if (order % 2 == 1) c[g.N / 2] = 0.0;
    return SpectralField::from_coeffs(g, c, ws);
}

SpectralField translate(const SpectralField& field, double shift, FourierWorkspace& ws) {
    const Grid& g = field.grid();
    auto c = field.coeffs(ws);
    for (int m = 0; m < g.N; ++m) {
        const double k = g.wavenumber(m);
        c[m] *= std::exp(std::complex<double>(0.0, -k * shift));
    }
    // A real translated field needs the Nyquist coefficient real; for shifts
    // that are not grid multiples the phase makes it complex, so drop it.
    c[g.N / 2] = std::complex<double>(c[g.N / 2].real() * std::cos(g.wavenumber(g.N / 2) * shift), 0.0);
    return SpectralField::from_coeffs(g, c, ws);
}

SpectralField recenter_on_index(const SpectralField& field, int j0) {
    const Grid& g = field.grid();
    const int offset = ((j0 - g.center_index()) % g.N + g.N) % g.N;
    std::vector<double> v(g.N);
    for (int j = 0; j < g.N; ++j) v[j] = field[(j + offset) % g.N];
    return SpectralField(g, std::move(v));
}

}  // namespace rosenau

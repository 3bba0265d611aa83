#ifndef ROSENAU_FOURIER_HPP
#define ROSENAU_FOURIER_HPP

#include <complex>
#include <span>
#include <vector>

#include "rosenau/grid.hpp"

namespace rosenau {

// Owns FFTW plans for one transform size. Normalization: the forward transform
// carries the 1/N factor,
//   c_m = (1/N) sum_j v_j e^{-2 pi i m j / N},
// and the inverse is the plain unnormalized sum, so forward/backward is an
// exact pair and Parseval reads sum_j |v_j|^2 = N sum_m |c_m|^2.
//
// Not thread-safe; each concurrent solve owns its private workspace. Plan
// creation/destruction is serialized internally (FFTW requirement).
class FourierWorkspace {
  public:
    explicit FourierWorkspace(int n);
    ~FourierWorkspace();
    FourierWorkspace(const FourierWorkspace&) = delete;
    FourierWorkspace& operator=(const FourierWorkspace&) = delete;

    int size() const { return n_; }

    std::vector<std::complex<double>> forward(std::span<const double> values);
    // Discards the imaginary residue; its max magnitude is reported through
    // *imag_defect when provided.
    std::vector<double> backward(std::span<const std::complex<double>> coeffs,
                                 double* imag_defect = nullptr);

  private:
    int n_;
    void* fwd_ = nullptr;  // fftw_plan
    void* bwd_ = nullptr;
    std::complex<double>* buf_in_ = nullptr;
    std::complex<double>* buf_out_ = nullptr;
};

// Real-valued field on a periodic grid with on-demand cached DFT coefficients.
class SpectralField {
  public:
    SpectralField(Grid grid, std::vector<double> values);

    static SpectralField zero(const Grid& grid);

    template <typename F>
    static SpectralField sample(const Grid& grid, F&& f) {
        std::vector<double> v(grid.N);
        for (int j = 0; j < grid.N; ++j) v[j] = f(grid.node(j));
        return SpectralField(grid, std::move(v));
    }

    static SpectralField from_coeffs(const Grid& grid,
                                     std::span<const std::complex<double>> coeffs,
                                     FourierWorkspace& ws, double* imag_defect = nullptr);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](int j) const { return values_[j]; }

    void set_values(std::vector<double> v);

    const std::vector<std::complex<double>>& coeffs(FourierWorkspace& ws) const;

    double l2_norm() const;    // grid-weighted
    double linf_norm() const;

  private:
    Grid grid_;
    std::vector<double> values_;
    mutable std::vector<std::complex<double>> coeffs_;
    mutable bool have_coeffs_ = false;
};

// Spectral derivative of given order (1..4): multiply coefficients by (ik)^d,
// Nyquist mode zeroed for odd d.
SpectralField differentiate(const SpectralField& field, int order, FourierWorkspace& ws);

// v(x) = u(x - shift), periodic translation via the phase factor e^{-ik*shift}.
SpectralField translate(const SpectralField& field, double shift, FourierWorkspace& ws);

// Circular index rotation placing node j0 at the center node (x = 0); exact
// periodic translation by an integer number of grid spacings.
SpectralField recenter_on_index(const SpectralField& field, int j0);

}  // namespace rosenau

#endif

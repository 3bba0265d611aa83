#include "rosenau/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "rosenau/errors.hpp"

namespace rosenau {

double ExactWave::operator()(double X) const {
    const double s = 1.0 / std::cosh(width * X);
    return amplitude * s * s * s * s;
}

SpectralField ExactWave::sample(const Grid& grid) const {
    return SpectralField::sample(grid, [this](double x) { return (*this)(x); });
}

ExactWave exact_rlw(double alpha, double epsilon, double cs) {
    if (!(alpha < 0.0)) throw std::invalid_argument("exact RLW wave needs alpha < 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("exact RLW wave needs epsilon > 0");
    if (!(cs > epsilon)) throw std::invalid_argument("exact RLW wave needs cs > epsilon");

    ExactWave w;
    w.family = FamilyTag::RosenauRLW;
    w.params.alpha = alpha;
    w.params.beta = 36.0 * cs * alpha * alpha / (169.0 * (cs - epsilon));
    w.params.gamma = 0.0;
    w.params.epsilon = epsilon;
    w.params.eta = 0.0;
    w.cs = cs;
    w.amplitude = 35.0 / 12.0 * (cs - epsilon);
    w.width = std::sqrt(13.0 * (epsilon - cs) / (144.0 * cs * alpha));
    w.constraint_note = "beta = 36 cs alpha^2 / (169 (cs - eps)); g(u) = u^2/2";
    if (!(alpha * alpha < 4.0 * w.params.beta))
        throw ConstraintViolated("induced beta violates alpha^2 < 4 beta (cs too far above epsilon)");
    return w;
}

ExactWave exact_kdv() {
    ExactWave w;
    w.family = FamilyTag::RosenauKdV;
    w.params = {0.0, 1.0, 0.0, 1.0, 1.0};
    w.cs = 0.5 + std::sqrt(313.0) / 26.0;
    w.amplitude = -35.0 / 24.0 + 35.0 * std::sqrt(313.0) / 312.0;
    w.width = std::sqrt(-26.0 + 2.0 * std::sqrt(313.0)) / 24.0;
    w.constraint_note = "eps = beta = eta = 1; cs = 1/2 + sqrt(313)/26; g(u) = u^2/2";
    return w;
}

ExactWave exact_kawahara() {
    ExactWave w;
    w.family = FamilyTag::RosenauKawahara;
    w.params = {0.0, 1.0, -1.0, 1.0, 1.0};
    w.cs = std::sqrt(205.0) / 13.0;
    w.amplitude = -35.0 / 12.0 + 35.0 * std::sqrt(205.0) / 156.0;
    w.width = std::sqrt(-13.0 + std::sqrt(205.0)) / 12.0;
    w.constraint_note = "eps = eta = beta = 1, gamma = -1; cs = sqrt(205)/13; g(u) = u^2/2";
    return w;
}

}  // namespace rosenau

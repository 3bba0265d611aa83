#ifndef ROSENAU_EXACT_HPP
#define ROSENAU_EXACT_HPP

#include <string>

#include "rosenau/fourier.hpp"
#include "rosenau/params.hpp"

namespace rosenau {

// Closed-form benchmark profile u(X) = amplitude * sech^4(width * X), valid for
// g(u) = u^2/2 under the recorded parameter constraints.
struct ExactWave {
    FamilyTag family = FamilyTag::Generic;
    EquationParams params;
    double cs = 0.0;
    double amplitude = 0.0;
    double width = 0.0;
    std::string constraint_note;

    double operator()(double X) const;
    SpectralField sample(const Grid& grid) const;
};

// Rosenau-RLW solitary wave: requires alpha < 0, cs > epsilon; the quartic
// coefficient is pinned to beta = 36 cs alpha^2 / (169 (cs - epsilon)) and the
// profile is (35/12)(cs - eps) sech^4( sqrt(13(eps-cs)/(144 cs alpha)) X ).
// Throws ConstraintViolated when the induced beta fails alpha^2 < 4 beta.
ExactWave exact_rlw(double alpha, double epsilon, double cs);

// Rosenau-KdV wave at eps = beta = eta = 1 (alpha = gamma = 0), speed
// cs = 1/2 + sqrt(313)/26.
ExactWave exact_kdv();

// Rosenau-Kawahara wave at eps = eta = beta = 1, gamma = -1 (alpha = 0), speed
// cs = sqrt(205)/13.
ExactWave exact_kawahara();

}  // namespace rosenau

#endif

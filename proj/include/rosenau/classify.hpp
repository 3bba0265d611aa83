#ifndef ROSENAU_CLASSIFY_HPP
#define ROSENAU_CLASSIFY_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "rosenau/params.hpp"

namespace rosenau {

// Coefficients of the profile equation phi'''' - b phi'' + a phi = f(phi):
//   a = (cs - eps)/(beta cs - gamma),  b = (alpha cs - eta)/(gamma - beta cs),
// with the normal-form coordinates mu1 = b/3, mu2 = mu1^2 - a and the
// coercivity combinations rho = beta*eps - gamma, delta = alpha*eps - eta.
struct RegimeCoefficients {
    double a = 0.0;
    double b = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double rho = 0.0;
    double delta = 0.0;
    double cs = 0.0;
};

// Throws DegenerateSpeed when |beta*cs - gamma| <= 1e-12*(1+|beta*cs|+|gamma|).
RegimeCoefficients ab_coefficients(const EquationParams& params, double cs);

// Roots of lambda^4 - b lambda^2 + a = 0, closed under negation and (for the
// biquadratic closed form) conjugation; lambda_sq holds (b +- sqrt(b^2-4a))/2.
struct RootSet {
    std::array<std::complex<double>, 4> roots;
    std::array<std::complex<double>, 2> lambda_sq;
};

RootSet characteristic_roots(const RegimeCoefficients& coeffs);
RootSet characteristic_roots(double a, double b);

enum class RegionLabel { Region1, Region2, Region3, Region4, C0, C1, C2, C3, Origin };
enum class CurveId { C0, C1, C2, C3 };
enum class WaveType { CSW, NMCSW, GSW, PTW };

std::string region_name(RegionLabel label);
std::string curve_name(CurveId id);
std::string wave_name(WaveType w);

// Position in the (mu1, mu2) plane; on_curve set when the point lies on one of
// the bifurcation curves (mu2 = mu1^2 for C0/C1, mu2 = -(5/4) mu1^2 for C2/C3)
// within rel_tol * (1 + mu1^2 + |mu2|).
struct MuPoint {
    double mu1 = 0.0;
    double mu2 = 0.0;
    std::optional<CurveId> on_curve;
};

MuPoint mu_coordinates(const RegimeCoefficients& coeffs, double rel_tol = 1e-10);

// Coercivity roots of Prop.-style quadratic: with rho = beta*eps - gamma and
// delta = alpha*eps - eta,
//   x_pm = (alpha*delta - 2 rho +- sqrt((alpha*delta - 2 rho)^2
//           + delta^2 (4 beta - alpha^2))) / (4 beta - alpha^2),
// plus family-specific named thresholds when the tag is known.
struct ThresholdSet {
    double x_plus = 0.0;
    double x_minus = 0.0;
    std::map<std::string, double> family_thresholds;
};

ThresholdSet coercivity_thresholds(const EquationParams& params,
                                   FamilyTag tag = FamilyTag::Generic);

// True iff cs - eps < x_minus or cs - eps > x_plus (strict): the energy E is
// coercive and the constrained minimization yields a (nonmonotone) CSW.
bool coercivity_check(const EquationParams& params, double cs);

struct NearestCurve {
    CurveId id;
    // Defining-residual value: a for C0/C1, (4a - b^2)/4 for C2/C3 (positive on
    // the Region-1 side).
    double signed_distance = 0.0;
    bool within_band = false;
};

struct RegimeReport {
    RegimeCoefficients coefficients;
    RootSet roots;
    RegionLabel label = RegionLabel::Origin;
    std::set<WaveType> predicted_waves;
    std::optional<NearestCurve> nearest_curve;
    bool coercive = false;
    ThresholdSet thresholds;
};

// Region/curve label from the sign pattern of (a, b^2 - 4a, b), wave-type
// prediction per curve neighborhood, nearest bounding curve with its residual.
// Membership tolerance rel_tol (residual below rel_tol * (1 + |a| + b^2));
// the near-curve band is |residual| < band * (1 + |a| + b^2) and is advisory.
// Thresholds/coercivity are left unfilled (they need the equation parameters).
RegimeReport classify_region(const RegimeCoefficients& coeffs, double rel_tol = 1e-10,
                             double band = 0.25);

// Full per-family analysis: the admissible-speed case split on the family's
// named thresholds, cross-checked with the sign-pattern classifier, plus the
// coercivity verdict. Throws UnsupportedPattern on a tag/params mismatch.
RegimeReport family_regime(FamilyTag tag, const EquationParams& params, double cs,
                           double rel_tol = 1e-10, double band = 0.25);

}  // namespace rosenau

#endif

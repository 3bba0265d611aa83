#include "rosenau/classify.hpp"

#include <algorithm>
#include <cmath>

#include "rosenau/errors.hpp"

namespace rosenau {

RegimeCoefficients ab_coefficients(const EquationParams& p, double cs) {
    const double denom = p.beta * cs - p.gamma;
    if (std::abs(denom) <= 1e-12 * (1.0 + std::abs(p.beta * cs) + std::abs(p.gamma)))
        throw DegenerateSpeed(cs);
    RegimeCoefficients c;
    c.cs = cs;
    c.a = (cs - p.epsilon) / denom;
    c.b = (p.alpha * cs - p.eta) / (p.gamma - p.beta * cs);
    c.mu1 = c.b / 3.0;
    c.mu2 = c.mu1 * c.mu1 - c.a;
    c.rho = p.beta * p.epsilon - p.gamma;
    c.delta = p.alpha * p.epsilon - p.eta;
    return c;
}

RootSet characteristic_roots(double a, double b) {
    RootSet rs;
    const double disc = b * b - 4.0 * a;
    std::complex<double> s_big, s_small;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // Stable split: the larger-magnitude root directly, the other via the
        // product s1*s2 = a.
        const double big = (b >= 0.0) ? (b + sq) / 2.0 : (b - sq) / 2.0;
        s_big = big;
        s_small = (big != 0.0) ? a / big : 0.0;
    } else {
        const double im = std::sqrt(-disc) / 2.0;
        s_big = std::complex<double>(b / 2.0, im);
        s_small = std::conj(s_big);
    }
    rs.lambda_sq = {s_big, s_small};
    const auto r1 = std::sqrt(s_big);
    const auto r2 = std::sqrt(s_small);
    rs.roots = {r1, -r1, r2, -r2};
    return rs;
}

RootSet characteristic_roots(const RegimeCoefficients& coeffs) {
    return characteristic_roots(coeffs.a, coeffs.b);
}

std::string region_name(RegionLabel label) {
    switch (label) {
        case RegionLabel::Region1: return "Region1";
        case RegionLabel::Region2: return "Region2";
        case RegionLabel::Region3: return "Region3";
        case RegionLabel::Region4: return "Region4";
        case RegionLabel::C0: return "C0";
        case RegionLabel::C1: return "C1";
        case RegionLabel::C2: return "C2";
        case RegionLabel::C3: return "C3";
        case RegionLabel::Origin: return "Origin";
    }
    return "Origin";
}

std::string curve_name(CurveId id) {
    switch (id) {
        case CurveId::C0: return "C0";
        case CurveId::C1: return "C1";
        case CurveId::C2: return "C2";
        case CurveId::C3: return "C3";
    }
    return "C0";
}

std::string wave_name(WaveType w) {
    switch (w) {
        case WaveType::CSW: return "CSW";
        case WaveType::NMCSW: return "NMCSW";
        case WaveType::GSW: return "GSW";
        case WaveType::PTW: return "PTW";
    }
    return "CSW";
}

MuPoint mu_coordinates(const RegimeCoefficients& coeffs, double rel_tol) {
    MuPoint mp;
    mp.mu1 = coeffs.mu1;
    mp.mu2 = coeffs.mu2;
    const double scale = 1.0 + mp.mu1 * mp.mu1 + std::abs(mp.mu2);
    if (mp.mu1 != 0.0) {
        if (std::abs(mp.mu2 - mp.mu1 * mp.mu1) <= rel_tol * scale)
            mp.on_curve = mp.mu1 > 0.0 ? CurveId::C0 : CurveId::C1;
        else if (std::abs(mp.mu2 + 1.25 * mp.mu1 * mp.mu1) <= rel_tol * scale)
            mp.on_curve = mp.mu1 > 0.0 ? CurveId::C3 : CurveId::C2;
    }
    return mp;
}

ThresholdSet coercivity_thresholds(const EquationParams& p, FamilyTag tag) {
    ThresholdSet t;
    const double rho = p.beta * p.epsilon - p.gamma;
    const double delta = p.alpha * p.epsilon - p.eta;
    const double denom = 4.0 * p.beta - p.alpha * p.alpha;
    const double mid = p.alpha * delta - 2.0 * rho;
    const double sq = std::sqrt(mid * mid + delta * delta * denom);
    t.x_plus = (mid + sq) / denom;
    t.x_minus = (mid - sq) / denom;

    switch (tag) {
        case FamilyTag::RosenauRLW:
            t.family_thresholds["rlw_threshold"] =
                p.epsilon * p.alpha * p.alpha / (4.0 * p.beta - p.alpha * p.alpha);
            break;
        case FamilyTag::RosenauKdV: {
            const double s = std::sqrt(p.epsilon * p.epsilon + p.eta * p.eta / p.beta);
            t.family_thresholds["x_plus"] = (-p.epsilon + s) / 2.0;
            t.family_thresholds["x_minus"] = (-p.epsilon - s) / 2.0;
            break;
        }
        case FamilyTag::RosenauKawahara: {
            const double rb = rho / p.beta;
            const double s = std::sqrt(rb * rb + p.eta * p.eta / p.beta);
            t.family_thresholds["y_plus"] = (-rb + s) / 2.0;
            t.family_thresholds["y_minus"] = (-rb - s) / 2.0;
            break;
        }
        case FamilyTag::RosenauRLWKawahara: {
            const double m = 2.0 * (p.eta - 3.0) / 3.0;
            const double s = std::sqrt(m * m + 4.0 * (1.0 + p.eta) * (1.0 + p.eta) / 3.0);
            t.family_thresholds["z_plus"] = (m + s) / 2.0;
            t.family_thresholds["z_minus"] = (m - s) / 2.0;
            break;
        }
        default:
            break;
    }
    return t;
}

bool coercivity_check(const EquationParams& p, double cs) {
    const ThresholdSet t = coercivity_thresholds(p);
    const double x = cs - p.epsilon;
    return x < t.x_minus || x > t.x_plus;
}

namespace {

std::set<WaveType> waves_for(RegionLabel label, double b) {
    switch (label) {
        case RegionLabel::Region1: return {WaveType::NMCSW};
        case RegionLabel::Region2: return {WaveType::CSW};
        case RegionLabel::Region3:
            return b >= 0.0 ? std::set<WaveType>{WaveType::PTW}
                            : std::set<WaveType>{WaveType::GSW};
        case RegionLabel::Region4: return {WaveType::GSW, WaveType::PTW};
        // On a curve both neighboring regimes are possible.
        case RegionLabel::C0: return {WaveType::CSW, WaveType::PTW};
        case RegionLabel::C1: return {WaveType::GSW, WaveType::PTW};
        case RegionLabel::C2: return {WaveType::NMCSW, WaveType::GSW, WaveType::PTW};
        case RegionLabel::C3: return {WaveType::CSW, WaveType::NMCSW};
        case RegionLabel::Origin: return {};
    }
    return {};
}

}  // namespace

RegimeReport classify_region(const RegimeCoefficients& coeffs, double rel_tol, double band) {
    RegimeReport rep;
    rep.coefficients = coeffs;
    rep.roots = characteristic_roots(coeffs);

    const double a = coeffs.a;
    const double b = coeffs.b;
    const double scale = 1.0 + std::abs(a) + b * b;
    const double disc = b * b - 4.0 * a;

    const bool on_a_axis = std::abs(a) <= rel_tol * scale;
    const bool on_parabola = a > 0.0 && std::abs(disc) <= rel_tol * scale;

    if (on_a_axis && std::abs(b) <= rel_tol * scale) {
        rep.label = RegionLabel::Origin;
    } else if (on_a_axis) {
        rep.label = b > 0.0 ? RegionLabel::C0 : RegionLabel::C1;
    } else if (on_parabola) {
        rep.label = b > 0.0 ? RegionLabel::C3 : RegionLabel::C2;
    } else if (a < 0.0) {
        rep.label = RegionLabel::Region3;
    } else if (disc < 0.0) {
        rep.label = RegionLabel::Region1;
    } else {
        rep.label = b > 0.0 ? RegionLabel::Region2 : RegionLabel::Region4;
    }

    rep.predicted_waves = waves_for(rep.label, b);

    const double res_axis = a;                       // residual to C0/C1
    const double res_parab = (4.0 * a - b * b) / 4.0;  // residual to C2/C3, >0 on Region-1 side
    auto make_nc = [&](CurveId id, double r) {
        NearestCurve nc;
        nc.id = id;
        nc.signed_distance = r;
        nc.within_band = std::abs(r) < band * scale;
        return nc;
    };
    switch (rep.label) {
        case RegionLabel::Region1:
            rep.nearest_curve = make_nc(b >= 0.0 ? CurveId::C3 : CurveId::C2, res_parab);
            break;
        case RegionLabel::Region2:
            rep.nearest_curve = std::abs(res_axis) <= std::abs(res_parab)
                                    ? make_nc(CurveId::C0, res_axis)
                                    : make_nc(CurveId::C3, res_parab);
            break;
        case RegionLabel::Region3:
            rep.nearest_curve = make_nc(b >= 0.0 ? CurveId::C0 : CurveId::C1, res_axis);
            break;
        case RegionLabel::Region4:
            rep.nearest_curve = std::abs(res_axis) <= std::abs(res_parab)
                                    ? make_nc(CurveId::C1, res_axis)
                                    : make_nc(CurveId::C2, res_parab);
            break;
        case RegionLabel::C0: rep.nearest_curve = make_nc(CurveId::C0, res_axis); break;
        case RegionLabel::C1: rep.nearest_curve = make_nc(CurveId::C1, res_axis); break;
        case RegionLabel::C2: rep.nearest_curve = make_nc(CurveId::C2, res_parab); break;
        case RegionLabel::C3: rep.nearest_curve = make_nc(CurveId::C3, res_parab); break;
        case RegionLabel::Origin: break;
    }
    return rep;
}

namespace {

// Appendix-style admissible-speed case split. Returns nullopt when the family
// logic does not decide (on-curve/boundary points fall back to the generic
// sign-pattern classifier).
std::optional<RegionLabel> family_label(FamilyTag tag, const EquationParams& p, double cs,
                                        const ThresholdSet& thr) {
    const double x = cs - p.epsilon;
    switch (tag) {
        case FamilyTag::Rosenau:
            // b = 0: only regions 1 (x > 0) and 3 (x < 0) occur.
            if (x > 0.0) return RegionLabel::Region1;
            if (x < 0.0) return RegionLabel::Region3;
            return std::nullopt;
        case FamilyTag::RosenauRLW: {
            const double T = thr.family_thresholds.at("rlw_threshold");
            if (x < 0.0) return RegionLabel::Region3;
            if (x == 0.0 || x == T) return std::nullopt;
            if (x > T) return RegionLabel::Region1;
            // 0 < x < T: the discriminant side depends on the sign of b = -alpha/beta.
            if (p.alpha < 0.0) return RegionLabel::Region2;
            if (p.alpha > 0.0) return RegionLabel::Region4;
            return std::nullopt;
        }
        case FamilyTag::RosenauKdV:
        case FamilyTag::RosenauKawahara:
        case FamilyTag::RosenauRLWKawahara: {
            // Uniform threshold-interval logic: a < 0 gives region 3; otherwise
            // x inside (t_minus, t_plus) gives region 2/4 by the sign of b and
            // outside gives region 1.
            double t_plus, t_minus;
            if (tag == FamilyTag::RosenauKdV) {
                t_plus = thr.family_thresholds.at("x_plus");
                t_minus = thr.family_thresholds.at("x_minus");
            } else if (tag == FamilyTag::RosenauKawahara) {
                t_plus = thr.family_thresholds.at("y_plus");
                t_minus = thr.family_thresholds.at("y_minus");
            } else {
                t_plus = thr.family_thresholds.at("z_plus");
                t_minus = thr.family_thresholds.at("z_minus");
            }
            const double D = p.beta * cs - p.gamma;
            const double a = x / D;
            const double b = (p.alpha * cs - p.eta) / -D;
            if (a < 0.0) return RegionLabel::Region3;
            if (a == 0.0 || x == t_plus || x == t_minus) return std::nullopt;
            if (x > t_minus && x < t_plus) {
                if (b > 0.0) return RegionLabel::Region2;
                if (b < 0.0) return RegionLabel::Region4;
                return std::nullopt;
            }
            return RegionLabel::Region1;
        }
        case FamilyTag::Generic:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

RegimeReport family_regime(FamilyTag tag, const EquationParams& params, double cs,
                           double rel_tol, double band) {
    require_family_pattern(tag, params);
    const RegimeCoefficients coeffs = ab_coefficients(params, cs);
    RegimeReport rep = classify_region(coeffs, rel_tol, band);
    rep.thresholds = coercivity_thresholds(params, tag);
    rep.coercive = coercivity_check(params, cs);

    // The per-family threshold split and the (a, b) sign pattern are two routes
    // to the same diagram; keep the family answer where it decides, which also
    // guards the sign pattern against borderline rounding in a and b.
    const bool generic_on_curve = rep.label == RegionLabel::C0 || rep.label == RegionLabel::C1 ||
                                  rep.label == RegionLabel::C2 || rep.label == RegionLabel::C3 ||
                                  rep.label == RegionLabel::Origin;
    if (!generic_on_curve) {
        if (auto fl = family_label(tag, params, cs, rep.thresholds); fl && *fl != rep.label) {
            rep.label = *fl;
            rep.predicted_waves = waves_for(rep.label, coeffs.b);
        }
    }
    return rep;
}

}  // namespace rosenau

#include "rosenau/params.hpp"

#include <cmath>

#include "rosenau/errors.hpp"

namespace rosenau {

ValidityReport validate_params(const EquationParams& params) {
    ValidityReport report;
    if (!(params.epsilon > 0.0)) {
        report.violations.push_back("epsilon > 0 fails (epsilon=" + std::to_string(params.epsilon) + ")");
    }
    // Strict: alpha^2 = 4*beta leaves P(x) = 1 - alpha*x + beta*x^2 with a real
    // root on x >= 0, so the operator M = 1 + alpha*dxx + beta*dxxxx is not
    // invertible and the linear ivp is ill-posed.
    if (!(params.alpha * params.alpha < 4.0 * params.beta)) {
        report.violations.push_back("alpha^2 < 4*beta fails (alpha^2=" +
                                    std::to_string(params.alpha * params.alpha) + ", 4*beta=" +
                                    std::to_string(4.0 * params.beta) + ")");
    }
    report.ok = report.violations.empty();
    return report;
}

bool matches_family_pattern(FamilyTag tag, const EquationParams& p) {
    switch (tag) {
        case FamilyTag::Rosenau:
            return p.alpha == 0.0 && p.eta == 0.0 && p.gamma == 0.0;
        case FamilyTag::RosenauRLW:
            return p.eta == 0.0 && p.gamma == 0.0;
        case FamilyTag::RosenauKdV:
            return p.alpha == 0.0 && p.gamma == 0.0;
        case FamilyTag::RosenauKawahara:
            return p.alpha == 0.0;
        case FamilyTag::RosenauRLWKawahara:
            return p.alpha == -1.0 && p.gamma == -1.0 && p.epsilon == 1.0 && p.beta == 1.0 &&
                   p.eta > 0.0;
        case FamilyTag::Generic:
            return true;
    }
    return false;
}

void require_family_pattern(FamilyTag tag, const EquationParams& params) {
    if (!matches_family_pattern(tag, params)) {
        throw UnsupportedPattern("parameters do not match the coefficient pattern of family '" +
                                 family_name(tag) + "'");
    }
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Rosenau: return "rosenau";
        case FamilyTag::RosenauRLW: return "rosenau-rlw";
        case FamilyTag::RosenauKdV: return "rosenau-kdv";
        case FamilyTag::RosenauKawahara: return "rosenau-kawahara";
        case FamilyTag::RosenauRLWKawahara: return "rosenau-rlw-kawahara";
        case FamilyTag::Generic: return "generic";
    }
    return "generic";
}

FamilyTag family_from_name(const std::string& name) {
    if (name == "rosenau") return FamilyTag::Rosenau;
    if (name == "rosenau-rlw") return FamilyTag::RosenauRLW;
    if (name == "rosenau-kdv") return FamilyTag::RosenauKdV;
    if (name == "rosenau-kawahara") return FamilyTag::RosenauKawahara;
    if (name == "rosenau-rlw-kawahara") return FamilyTag::RosenauRLWKawahara;
    if (name == "generic") return FamilyTag::Generic;
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace rosenau

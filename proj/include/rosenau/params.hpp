#ifndef ROSENAU_PARAMS_HPP
#define ROSENAU_PARAMS_HPP

#include <string>
#include <vector>

namespace rosenau {

// Coefficients of u_t + eps*u_x + alpha*u_xxt + eta*u_xxx + beta*u_xxxxt
//                 + gamma*u_xxxxx + (g(u))_x = 0.
struct EquationParams {
    double alpha = 0.0;    // u_xxt
    double beta = 1.0;     // u_xxxxt
    double gamma = 0.0;    // u_xxxxx
    double epsilon = 1.0;  // u_x
    double eta = 0.0;      // u_xxx
};

struct ValidityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Admissibility: eps > 0 and alpha^2 < 4*beta (strict; the boundary makes the
// linear symbol denominator P(k^2) lose invertibility).
ValidityReport validate_params(const EquationParams& params);

enum class FamilyTag {
    Rosenau,             // alpha = eta = gamma = 0
    RosenauRLW,          // eta = gamma = 0
    RosenauKdV,          // alpha = gamma = 0
    RosenauKawahara,     // alpha = 0
    RosenauRLWKawahara,  // alpha = gamma = -1, eps = beta = 1, eta > 0
    Generic,
};

bool matches_family_pattern(FamilyTag tag, const EquationParams& params);

// Throws UnsupportedPattern if the coefficients violate the tag's zero pattern.
void require_family_pattern(FamilyTag tag, const EquationParams& params);

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

}  // namespace rosenau

#endif

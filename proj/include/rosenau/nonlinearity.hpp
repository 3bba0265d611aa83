#ifndef ROSENAU_NONLINEARITY_HPP
#define ROSENAU_NONLINEARITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rosenau {

// g(u) = u^{p+1}/(p+1), p >= 1. Primitive G(u) = u^{p+2}/((p+2)(p+1)) is
// homogeneous of degree p+2.
struct SinglePower {
    int p = 1;
};

// g(u) = u^3/3 + r*u^5/5.
struct CubicQuintic {
    double r = 0.0;
};

struct PowerTerm {
    double coefficient = 0.0;
    int degree = 2;  // >= 2
};

// g(u) = sum_i c_i u^{d_i}.
struct PowerSum {
    std::vector<PowerTerm> terms;
};

// g = A*u^2/2 + B*u^{m+1}/(m+1) + s*(u_x^2/2 + u*u_xx); depends on derivatives,
// has no pointwise primitive.
struct DerivativeForm {
    double A = 0.0;
    double B = 0.0;
    int m = 1;  // >= 1
    double s = 0.0;
};

struct NonlinearitySpec {
    std::variant<SinglePower, CubicQuintic, PowerSum, DerivativeForm> variant =
        SinglePower{1};
};

// g at a point; ux/uxx are ignored except for DerivativeForm.
double eval_nonlinearity(const NonlinearitySpec& spec, double u, double ux = 0.0,
                         double uxx = 0.0);

// Degree q of the homogeneous primitive G (q = p+2 for SinglePower); nullopt
// for the non-homogeneous variants.
std::optional<int> homogeneity_degree(const NonlinearitySpec& spec);

// Lowest power of u appearing in g; nullopt for DerivativeForm (whose exponent
// the caller must choose) and for an empty PowerSum.
std::optional<int> lowest_degree(const NonlinearitySpec& spec);

bool has_primitive(const NonlinearitySpec& spec);

// G(u) with G' = g; throws NoPrimitive for DerivativeForm.
double eval_primitive(const NonlinearitySpec& spec, double u);

// Petviashvili exponent nu = d/(d-1) from the lowest degree d of g
// (nu = 2 for quadratic g); nullopt when no degree is available.
std::optional<double> default_exponent(const NonlinearitySpec& spec);

bool needs_derivatives(const NonlinearitySpec& spec);

std::string describe(const NonlinearitySpec& spec);

// "power:p", "cubic-quintic:r", "powersum:c1,d1[,c2,d2...]", "derivative:A:B:m:s".
NonlinearitySpec parse_nonlinearity(const std::string& text);

}  // namespace rosenau

#endif

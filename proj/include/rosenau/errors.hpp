#ifndef ROSENAU_ERRORS_HPP
#define ROSENAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rosenau {

// The quartic coefficient beta*cs - gamma of the profile equation vanishes:
// the fourth-order ODE drops order and the (a,b) parameterization is undefined.
struct DegenerateSpeed : std::runtime_error {
    double cs;
    explicit DegenerateSpeed(double cs_)
        : std::runtime_error("degenerate speed: beta*cs - gamma vanishes at cs=" + std::to_string(cs_)),
          cs(cs_) {}
};

// The profile-equation symbol has a (near-)zero on the grid's wavenumber band,
// so the Petviashvili division is ill-posed there (GSW/PTW regime).
struct ResonantWavenumber : std::runtime_error {
    double k;
    explicit ResonantWavenumber(double k_)
        : std::runtime_error("resonant wavenumber k=" + std::to_string(k_) +
                             " inside the grid band"),
          k(k_) {}
};

struct GuessUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstraintViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedPattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoPrimitive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TailBelowPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowUp : std::runtime_error {
    double t;
    explicit BlowUp(double t_)
        : std::runtime_error("solution magnitude exceeded 1e6 at t=" + std::to_string(t_)), t(t_) {}
};

}  // namespace rosenau

#endif

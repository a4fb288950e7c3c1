#pragma once

#include <string>
#include <variant>

// Model parameters for the deformed oscillator with mass M(r) = 1/(1+alpha r^2)^2,
// its derived constants, and the t <-> r change of variable.

namespace pdmho {

enum class Parity { even, odd };

struct RadialSector {
    int d = 3;  // spatial dimension, >= 2
    int l = 0;  // angular momentum quantum number, >= 0
};

struct LineSector {
    Parity parity = Parity::even;
};

using Sector = std::variant<RadialSector, LineSector>;

struct ModelParams {
    double alpha = 1.0;  // deformation strength, > 0 (units 1/length^2, hbar = 2 m0 = 1)
    double omega = 1.0;  // oscillator frequency parameter, > 0
    Sector sector = RadialSector{};
};

// Cached derived constants. The full-line sectors are modelled as pseudo-radial
// problems with L = -1 (even) or L = 0 (odd); `line` switches grids and
// normalization to the full-line conventions.
struct DerivedParams {
    double alpha = 0;
    double omega = 0;
    double Delta = 0;   // sqrt(omega^2 + alpha^2)
    double lambda = 0;  // (alpha + Delta)/2
    double nu = 0;      // lambda/alpha, always > 1
    double L = 0;       // effective angular momentum; half-integers allowed
    int dim = 3;        // spatial dimension (1 for line sectors)
    bool line = false;
    Parity parity = Parity::even;
    // d=2, l=0 gives L = -1/2: attractive -1/(4r^2) centrifugal term. Supported
    // but flagged; the finite-difference oracle does not certify this sector.
    bool delicate = false;
};

DerivedParams derive_params(const ModelParams& params);

struct MassProfile {
    double f;       // 1 + alpha r^2
    double M;       // 1/f^2
    double fprime;  // 2 alpha r
};

MassProfile mass_and_profiles(const DerivedParams& dp, double r);

struct EffectivePotentials {
    double V_tilde_eff;  // L(L+1)/r^2 + (omega^2 - 8 alpha^2) r^2 / 4 - alpha
    double V_eff;        // cartesian-approach form (depends on the dimension)
};

EffectivePotentials effective_potentials(const DerivedParams& dp, double r);

double t_of_r(const DerivedParams& dp, double r);
double r_of_t(const DerivedParams& dp, double t);

// Parses {"alpha": ..., "omega": ..., "sector": {...}}. Unknown keys are rejected.
ModelParams params_from_json(const std::string& text);
std::string params_to_json(const ModelParams& params);

std::string sector_name(const DerivedParams& dp);

}  // namespace pdmho

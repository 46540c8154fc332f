#pragma once

#include <string>
#include <variant>

namespace swb {

struct NoFriction {};

// S_f = n^2 q|q| / h^(10/3)
struct Manning {
  double n = 0.0;
};

// S_f = C_f q|q| / h^3 with C_f = f / (8g)
struct DarcyWeisbach {
  double f = 0.0;
};

// S_f = C_f q|q| / h^3 with C_f = 1 / C^2
struct Chezy {
  double C = 0.0;
};

// S_f = tau u / g
struct LinearFriction {
  double tau = 0.0;
};

// S_f = (alpha0(h)/h u + alpha1(h) |u| u) / g, used by the diffusive cases.
// mu_h is the horizontal viscosity; the momentum diffusion uses mu = 4 mu_h.
struct LaminarTurbulent {
  double k_l = 0.0;
  double k_t = 0.0;
  double mu_v = 0.0;
  double mu_h = 0.0;
};

using FrictionLaw =
    std::variant<NoFriction, Manning, DarcyWeisbach, Chezy, LinearFriction, LaminarTurbulent>;

// Throws DomainError if a coefficient is negative or not finite.
void validate(const FrictionLaw& law);

double friction_slope(const FrictionLaw& law, double h, double q);

// Rate k >= 0 such that g h S_f(h, q) = k q. The solver damps the discharge
// semi-implicitly with q_new = q / (1 + dt k). Returns 0 on dry cells.
double friction_damping_rate(const FrictionLaw& law, double h, double q);

struct LaminarTurbulentTerms {
  double alpha0;
  double alpha1;
  double slope;
};

LaminarTurbulentTerms laminar_turbulent_terms(const LaminarTurbulent& law, double h, double q);

bool has_friction(const FrictionLaw& law);

// Short human-readable form, e.g. "Manning n=0.033".
std::string describe(const FrictionLaw& law);

}  // namespace swb

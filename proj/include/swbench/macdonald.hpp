#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "swbench/core/boundary.hpp"
#include "swbench/core/field.hpp"
#include "swbench/core/friction.hpp"
#include "swbench/core/grid.hpp"
#include "swbench/core/numerics.hpp"

// Steady 1D solutions built backwards: the height profile and discharge are
// prescribed, the topography is integrated from the steady momentum balance
//   z' = (q^2/(g h^3) - 1) h' - S_f  [- 2 q R0/(g h^2)]  [+ mu/(g h^2) (-q h'' + q h'^2/h)].
namespace swb::macdonald {

enum class Profile {
  LongSub,           // 1000 m, (4/g)^(1/3) (1 + exp(-16 s^2)/2)
  LongSuper,         // 1000 m, (4/g)^(1/3) (1 - exp(-36 s^2)/5)
  LongSubSuper,      // 1000 m, tanh pieces joined at a sonic point x = 500
  LongSuperSub,      // 1000 m, exp / exp-sum pieces with a jump at x = 500
  ShortSmoothShock,  // 100 m, sonic point then a jump at x = 200/3
  ShortSuper,        // 100 m
  ShortSubSuper,     // 100 m, quadratic
  Periodic,          // 5000 m, 9/8 + sin(pi x / 500)/4
};

enum class McCase {
  LongSub, LongSuper, LongSubSuper, LongSuperSub,
  ShortSmoothShock, ShortSuper, ShortSubSuper, Periodic,
  RainSub, RainSuper, DiffusionSub, DiffusionSuper,
};

enum class FrictionChoice { Manning, DarcyWeisbach };

enum class Initial { Dry, DownstreamLake };

struct MacDonaldCaseSpec {
  McCase id;
  Profile profile;
  double length;
  double q0;
  FrictionLaw friction;   // LaminarTurbulent for the diffusive cases
  double rain = 0.0;      // R0, m/s
  double rain_start = 0.0;
  bool diffusion = false; // adds the mu = 4 mu_h momentum diffusion term
  bool supercritical_inflow = false;  // inflow imposes h and q
  bool free_outflow = false;          // otherwise h = h_ex(L) downstream
  Initial initial = Initial::Dry;
};

// Throws DomainError for a friction family the case does not define
// (the short and periodic channels are Manning only).
MacDonaldCaseSpec make_case(McCase id, FrictionChoice friction = FrictionChoice::Manning);

double profile_length(Profile p);
// Abscissae where the profile switches formula (may be discontinuous there).
std::vector<double> breakpoints(Profile p);

struct HeightSample {
  double h;
  double dh;
  double d2h;
};

// Evaluates the closed form and its first two derivatives. At a breakpoint the
// left formula is used. Throws DomainError outside [0, L].
HeightSample hex_profile(Profile p, double x);
HeightSample hex_profile(const MacDonaldCaseSpec& spec, double x);

double discharge(const MacDonaldCaseSpec& spec, double x);

// z'(x) from the steady balance for this case.
double topography_slope(const MacDonaldCaseSpec& spec, double x, const HeightSample& s);

LaminarTurbulentTerms diffusion_source_terms(double h, double q, double k_l, double k_t, double mu_v);

class SynthesizedTopography {
 public:
  SynthesizedTopography(const MacDonaldCaseSpec& spec, std::size_t fine_steps);

  double operator()(double x) const { return (*primitive_)(x); }
  const std::vector<double>& nodes() const { return primitive_->nodes(); }
  const std::vector<double>& values() const { return primitive_->values(); }
  double max_step() const { return primitive_->max_step(); }

 private:
  std::shared_ptr<PiecewisePrimitive> primitive_;
};

// fine_steps must be at least 2 (and should be >= 5x the output cells).
SynthesizedTopography synthesize_topography(const MacDonaldCaseSpec& spec, std::size_t fine_steps);

// h = h_ex at the centres, q = q0 + R0 x, z from the synthesized topography
// on a grid fine_factor times finer than the output.
FlowField1D steady_solution(const MacDonaldCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor = 5);
FlowField1D steady_solution(const MacDonaldCaseSpec& spec, const Grid1D& grid,
                            const SynthesizedTopography& topo);

BoundaryCondition left_boundary(const MacDonaldCaseSpec& spec);
BoundaryCondition right_boundary(const MacDonaldCaseSpec& spec);

// Solver start state: dry, or a lake at rest at the downstream level
// h = max(h_ex(L) + z(L) - z(x), 0).
FlowField1D initial_state(const MacDonaldCaseSpec& spec, const FlowField1D& steady,
                          const SynthesizedTopography& topo);

}  // namespace swb::macdonald

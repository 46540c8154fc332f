#pragma once

#include "swbench/core/boundary.hpp"
#include "swbench/core/field.hpp"
#include "swbench/core/grid.hpp"

// Steady flows over the 25 m parabolic bump z = 0.2 - 0.05 (x - 10)^2 on (8, 12).
namespace swb::bump {

inline constexpr double kLength = 25.0;
inline constexpr double kCrestX = 10.0;
inline constexpr double kCrestZ = 0.2;

enum class BumpCase { LakeImmersed, LakeEmerged, Subcritical, TranscriticalNoShock, TranscriticalShock };

struct BumpCaseSpec {
  BumpCase tag;
  double length = kLength;
  double q0 = 0.0;             // inflow discharge (0 for the lakes)
  double h_out = 0.0;          // prescribed outflow height, 0 if none
  double initial_surface = 0;  // initial free surface h + z for solver runs (lake level for lakes)
  BoundaryCondition left;
  BoundaryCondition right;
};

BumpCaseSpec default_spec(BumpCase tag);

// Throws DomainError outside [0, 25].
double topography(double x);

// h + z = max(surface, z), q = 0. Cells left with h <= kDryThreshold are exactly dry.
FlowField1D lake_at_rest(const Grid1D& grid, double surface);

// q^2 / (2 g h^2) + h + z
double bernoulli_head(double h, double z, double q);

// Roots of h^3 + (z - head) h^2 + q^2/(2g) = 0 on either side of h_c(q).
// Throw ConstructionError when the branch does not exist at this z.
double subcritical_root(double z, double q, double head);
double supercritical_root(double z, double q, double head);

FlowField1D subcritical(const Grid1D& grid, double q0 = 4.42, double h_out = 2.0);

// Sonic point at the crest: subcritical upstream, supercritical downstream.
FlowField1D transcritical_noshock(const Grid1D& grid, double q0 = 1.53);

struct ShockSolveResult {
  double x_shock;
  double h1;  // upstream (supercritical) height
  double h2;  // downstream (subcritical) height
  double residual;
};

// q^2 (1/h1 - 1/h2) + g (h1^2 - h2^2) / 2
double rankine_hugoniot_residual(double q, double h1, double h2);

ShockSolveResult locate_shock(double q0 = 0.18, double h_out = 0.33);

struct ShockSolution {
  FlowField1D field;
  ShockSolveResult shock;
};

ShockSolution transcritical_shock(const Grid1D& grid, double q0 = 0.18, double h_out = 0.33);

}  // namespace swb::bump

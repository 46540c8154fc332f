#pragma once

#include <limits>

#include "swbench/core/field.hpp"
#include "swbench/core/grid.hpp"

// Instantaneous dam breaks on a flat bed: wet downstream (Stoker), dry
// downstream (Ritter) and dry downstream with Chezy friction (Dressler's
// first-order correction).
namespace swb::dambreak {

enum class DamBreakKind { Stoker, Ritter, Dressler };

struct DamBreakSpec {
  double h_l;
  double h_r;
  double x0;
  double length;
  double final_time;
  double chezy = std::numeric_limits<double>::infinity();  // infinity = no friction
};

DamBreakSpec make_spec(DamBreakKind kind);

struct DamState {
  double h;
  double u;
};

struct WaveStructure {
  double x_a;    // head of the rarefaction
  double x_b;    // tail of the rarefaction (front for the dry cases)
  double x_c;    // shock (Stoker only, else equal to x_b)
  double c_m;    // middle-state celerity (Stoker)
  double h_m;    // middle-state height (Stoker)
  double x_t;    // start of the tip region (Dressler)
  double u_tip;  // velocity in the tip region (Dressler)
};

// -8 g h_r c^2 (g h_l - c^2)^2 + (c^2 - g h_r)^2 (c^2 + g h_r)
double stoker_polynomial(const DamBreakSpec& spec, double c);

// Root of the polynomial in (sqrt(g h_r), sqrt(g h_l)). Throws DomainError unless h_l > h_r > 0.
double stoker_celerity(const DamBreakSpec& spec);

WaveStructure stoker_waves(const DamBreakSpec& spec, double t);
WaveStructure ritter_waves(const DamBreakSpec& spec, double t);

// x_T maximises u_co over [x_A, x_B): 1e4-point scan then golden section to 1e-10 m.
WaveStructure dressler_waves(const DamBreakSpec& spec, double t);

struct DresslerCoefficients {
  double alpha1;
  double alpha2;
};

// Coefficients as functions of d = 2 - (x - x0) / (t sqrt(g h_l)), d > 0.
DresslerCoefficients dressler_coefficients(double d);

// At t = 0 all three return the Riemann data.
DamState stoker(const DamBreakSpec& spec, double t, double x);
DamState ritter(const DamBreakSpec& spec, double t, double x);
DamState dressler(const DamBreakSpec& spec, double t, double x);
DamState dressler(const DamBreakSpec& spec, double t, double x, const WaveStructure& waves);

// Samples the solution on a flat bed (z = 0).
FlowField1D field(DamBreakKind kind, const DamBreakSpec& spec, const Grid1D& grid, double t);

}  // namespace swb::dambreak

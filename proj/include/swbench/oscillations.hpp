#pragma once

#include "swbench/core/field.hpp"
#include "swbench/core/grid.hpp"

// Moving-shoreline oscillations in parabolic basins: Thacker's frictionless
// solutions (1D parabola, radial and planar paraboloids) and Sampson's
// linearly damped 1D parabola.
namespace swb::oscillations {

struct ThackerSpec {
  double a;       // basin scale
  double h0;
  double length;  // square domain side for the 2D cases
  double r0 = 0.0;   // initial shoreline radius (radial case)
  double eta = 0.0;  // planar case
  double final_time;
};

ThackerSpec thacker1d_spec();  // a=1, h0=0.5, L=4, T=10.0303 (five periods)
ThackerSpec radial_spec();     // a=1, r0=0.8, h0=0.1, L=4, T=3 periods
ThackerSpec planar_spec();     // a=1, h0=0.1, eta=0.5, L=4, T=3 periods

struct SampsonSpec {
  double a;
  double h0;
  double tau;  // linear friction coefficient, 1/s
  double B;    // velocity amplitude
  double length;
  double final_time;
};

SampsonSpec sampson_spec();  // a=3000, h0=10, tau=1e-3, B=5, L=1e4, T=6000

// Derived constants. All validate the parameters and throw DomainError when they are unusable.
double thacker1d_omega(const ThackerSpec& s);  // sqrt(2 g h0) / a
double thacker1d_velocity(const ThackerSpec& s);  // B = sqrt(2 g h0) / (2a)
double radial_omega(const ThackerSpec& s);  // sqrt(8 g h0) / a
double radial_amplitude(const ThackerSpec& s);  // A = (a^2 - r0^2) / (a^2 + r0^2)
double planar_omega(const ThackerSpec& s);  // sqrt(2 g h0) / a
double sampson_p(const SampsonSpec& s);
double sampson_s(const SampsonSpec& s);  // sqrt(p^2 - tau^2) / 2, requires p > tau

struct Shoreline {
  double x1;
  double x2;
};

Shoreline thacker1d_shoreline(const ThackerSpec& s, double t);
Shoreline sampson_shoreline(const SampsonSpec& s, double t);

double thacker1d_bed(const ThackerSpec& s, double x);
double paraboloid_bed(const ThackerSpec& s, double x, double y);
double sampson_bed(const SampsonSpec& s, double x);

struct State1D {
  double h;
  double u;
};

struct State2D {
  double h;
  double u;
  double v;
};

// Dry points carry h = 0 and zero velocity.
State1D thacker1d(const ThackerSpec& s, double t, double x);
State2D thacker_radial(const ThackerSpec& s, double t, double x, double y);
State2D thacker_planar(const ThackerSpec& s, double t, double x, double y);
State1D sampson(const SampsonSpec& s, double t, double x);

FlowField1D thacker1d_field(const ThackerSpec& s, const Grid1D& grid, double t);
FlowField1D sampson_field(const SampsonSpec& s, const Grid1D& grid, double t);
FlowField2D radial_field(const ThackerSpec& s, const Grid2D& grid, double t);
FlowField2D planar_field(const ThackerSpec& s, const Grid2D& grid, double t);

}  // namespace swb::oscillations

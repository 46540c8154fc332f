#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "swbench/core/boundary.hpp"
#include "swbench/core/field.hpp"
#include "swbench/core/grid.hpp"
#include "swbench/core/numerics.hpp"

// Steady flows in variable-width channels (width-averaged equations). The mean
// height is prescribed; the bed slope follows from the steady balance and the
// bed is z(x) = integral of S0 from x to L.
namespace swb::pseudo2d {

enum class Pseudo2DCase { ShortSub, ShortSuper, ShortSmooth, ShortJump, LongSub, LongSmoothJump };

// Tail used past the jump: exp(-p (x - x1)) sum_i k_i ((x - x1)/(x2 - x1))^i + phi(x).
struct JumpTail {
  double x1 = 120.0;
  double x2 = 0.0;
  double p = 0.0;
  double k[3] = {0.0, 0.0, 0.0};
};

struct Pseudo2DCaseSpec {
  Pseudo2DCase id;
  int width_function;  // 1: one Gaussian notch over 200 m, 2: two notches over 400 m
  double side_slope;   // Z, horizontal per vertical (0 = rectangular)
  double length;
  double discharge = 20.0;  // m^3/s
  double manning = 0.03;
  std::optional<double> table_h_in;   // tabulated reference values, where given
  std::optional<double> table_h_out;
  std::optional<JumpTail> tail;
  bool supercritical_inflow = false;
  bool free_outflow = false;
  bool downstream_lake = false;  // initially a puddle against the outlet, else dry
};

Pseudo2DCaseSpec make_case(Pseudo2DCase id);

// Bottom width B(x) and B'(x). Throw DomainError outside [0, L].
double width(const Pseudo2DCaseSpec& spec, double x);
double width_derivative(const Pseudo2DCaseSpec& spec, double x);

struct MeanHeight {
  double h;
  double dh;
};

// Left formula at the jump abscissa.
MeanHeight mean_height(const Pseudo2DCaseSpec& spec, double x);

// Three-term slope: criticality term, Manning term, width-variation term.
double bed_slope(const Pseudo2DCaseSpec& spec, double x);

double wetted_area(const Pseudo2DCaseSpec& spec, double x, double h);

// Fr = Q sqrt((B + 2 Z h) / (g A^3)); reduces to |u|/sqrt(g h) for a unit rectangle.
double section_froude(const Pseudo2DCaseSpec& spec, double x, double h);

// Depth at which the section Froude number equals 1.
double critical_depth(const Pseudo2DCaseSpec& spec, double x);

class ChannelTopography {
 public:
  ChannelTopography(const Pseudo2DCaseSpec& spec, std::size_t fine_steps);
  double operator()(double x) const { return (*primitive_)(x); }
  const std::vector<double>& nodes() const { return primitive_->nodes(); }
  const std::vector<double>& values() const { return primitive_->values(); }

 private:
  std::shared_ptr<PiecewisePrimitive> primitive_;
};

// z at the grid centres, Simpson quadrature on a grid fine_factor times finer.
std::vector<double> topography(const Pseudo2DCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor = 5);

// Mean quantities: h, u = Q / A(h), q = h u, z; froude/critical hold the section values.
FlowField1D steady_solution(const Pseudo2DCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor = 5);

// Across-channel extent of the 2D raster: 10 m for the vertical-walled
// channels, 16 m for the trapezoidal ones.
double domain_width(const Pseudo2DCaseSpec& spec);

// Free-surface raster on [0, L] x [0, domain_width]. The channel axis is
// y = width/2; the bed is flat across the bottom width and rises with slope 1/Z
// on trapezoidal banks. Outside a vertical wall the cell is dry with the bank
// top 0.5 m above the local free surface.
FlowField2D raster(const Pseudo2DCaseSpec& spec, const Grid2D& grid, std::size_t fine_factor = 5);

BoundaryCondition left_boundary(const Pseudo2DCaseSpec& spec);
BoundaryCondition right_boundary(const Pseudo2DCaseSpec& spec);

}  // namespace swb::pseudo2d

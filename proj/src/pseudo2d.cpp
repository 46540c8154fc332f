#include "swbench/pseudo2d.hpp"

#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/errors.hpp"

namespace swb::pseudo2d {

namespace {

void check_domain(const Pseudo2DCaseSpec& spec, double x) {
  if (!(x >= 0.0 && x <= spec.length)) {
    std::ostringstream os;
    os << "x=" << x << " outside [0, " << spec.length << "]";
    throw DomainError(os.str());
  }
}

// a exp(-k (x/scale - m)^2) and its derivative.
struct Term {
  double v;
  double d;
};
Term gauss(double x, double scale, double m, double a, double k) {
  double s = x / scale - m;
  double e = a * std::exp(-k * s * s);
  return {e, -2.0 * k * s / scale * e};
}

Term tail_phi(const Pseudo2DCaseSpec& spec, double x) {
  if (spec.id == Pseudo2DCase::ShortJump) {
    double e = 1.5 * std::exp(0.1 * (x / 200.0 - 1.0));
    return {e, 0.1 / 200.0 * e};
  }
  double e1 = 1.5 * std::exp(0.16 * (x / 400.0 - 1.0));
  double e2 = 0.3 * std::exp(2.0 * (x / 400.0 - 1.0));
  return {e1 - e2, 0.16 / 400.0 * e1 - 2.0 / 400.0 * e2};
}

MeanHeight tail_height(const Pseudo2DCaseSpec& spec, double x) {
  const JumpTail& t = *spec.tail;
  double span = t.x2 - t.x1;
  double w = (x - t.x1) / span;
  double e = std::exp(-t.p * (x - t.x1));
  double poly = t.k[0] + t.k[1] * w + t.k[2] * w * w;
  double dpoly = (t.k[1] + 2.0 * t.k[2] * w) / span;
  Term phi = tail_phi(spec, x);
  return {e * poly + phi.v, e * (dpoly - t.p * poly) + phi.d};
}

// branch 0: the smooth formula (left of the jump), 1: the tail.
MeanHeight branch_height(const Pseudo2DCaseSpec& spec, int branch, double x) {
  switch (spec.id) {
    case Pseudo2DCase::ShortSub: {
      Term g = gauss(x, 200.0, 0.5, 0.3, 20.0);
      return {0.9 + g.v, g.d};
    }
    case Pseudo2DCase::ShortSuper: {
      Term g = gauss(x, 200.0, 0.5, 0.5, 20.0);
      return {0.5 + g.v, g.d};
    }
    case Pseudo2DCase::ShortSmooth: {
      double th = std::tanh(4.0 * (x / 200.0 - 1.0 / 3.0));
      return {1.0 - 0.3 * th, -0.3 * 4.0 / 200.0 * (1.0 - th * th)};
    }
    case Pseudo2DCase::ShortJump: {
      if (branch == 1) return tail_height(spec, x);
      double e = std::exp(x / 200.0);
      return {0.7 + 0.3 * (e - 1.0), 0.3 / 200.0 * e};
    }
    case Pseudo2DCase::LongSub: {
      Term a = gauss(x, 400.0, 1.0 / 3.0, 0.3, 40.0);
      Term b = gauss(x, 400.0, 2.0 / 3.0, 0.2, 35.0);
      return {0.9 + a.v + b.v, a.d + b.d};
    }
    case Pseudo2DCase::LongSmoothJump: {
      if (branch == 1) return tail_height(spec, x);
      double e1 = std::exp(-x / 40.0);
      double e2 = std::exp(15.0 * (x / 400.0 - 0.3));
      return {0.9 + 0.25 * (e1 - 1.0) + 0.25 * e2, -0.25 / 40.0 * e1 + 0.25 * 15.0 / 400.0 * e2};
    }
  }
  throw DomainError("unknown pseudo-2D case");
}

double slope_from(const Pseudo2DCaseSpec& spec, double x, const MeanHeight& m) {
  const double g = kGravity;
  const double q = spec.discharge;
  const double n = spec.manning;
  const double Z = spec.side_slope;
  const double B = width(spec, x);
  const double dB = width_derivative(spec, x);
  const double h = m.h;
  const double bz = B + Z * h;
  const double crit = 1.0 - q * q * (B + 2.0 * Z * h) / (g * h * h * h * bz * bz * bz);
  const double manning = q * q * n * n * std::pow(B + 2.0 * h * std::sqrt(1.0 + Z * Z), 4.0 / 3.0) /
                         (std::pow(h, 10.0 / 3.0) * std::pow(bz, 10.0 / 3.0));
  const double widening = q * q * dB / (g * h * h * bz * bz * bz);
  return crit * m.dh + manning - widening;
}

}  // namespace

Pseudo2DCaseSpec make_case(Pseudo2DCase id) {
  Pseudo2DCaseSpec s{};
  s.id = id;
  const bool is_long = id == Pseudo2DCase::LongSub || id == Pseudo2DCase::LongSmoothJump;
  s.width_function = is_long ? 2 : 1;
  s.side_slope = is_long ? 2.0 : 0.0;
  s.length = is_long ? 400.0 : 200.0;
  switch (id) {
    case Pseudo2DCase::ShortSub:
      s.table_h_out = 0.902921;
      s.downstream_lake = true;
      break;
    case Pseudo2DCase::ShortSuper:
      s.table_h_in = 0.503369;
      s.supercritical_inflow = true;
      s.free_outflow = true;
      break;
    case Pseudo2DCase::ShortSmooth:
      s.free_outflow = true;
      break;
    case Pseudo2DCase::ShortJump: {
      s.table_h_in = 0.7;
      s.table_h_out = 1.215485;
      JumpTail t;
      t.x2 = 200.0;
      t.p = 0.1;
      t.k[0] = -0.154375;
      t.k[1] = -0.108189;
      t.k[2] = -2.014310;
      s.tail = t;
      s.supercritical_inflow = true;
      s.downstream_lake = true;
      break;
    }
    case Pseudo2DCase::LongSub:
      s.table_h_out = 0.904094;
      s.downstream_lake = true;
      break;
    case Pseudo2DCase::LongSmoothJump: {
      s.table_h_out = 1.2;
      JumpTail t;
      t.x2 = 400.0;
      t.p = 0.09;
      t.k[0] = -0.183691;
      t.k[1] = 1.519577;
      t.k[2] = -18.234429;
      s.tail = t;  // applied on [120, 400]
      s.downstream_lake = true;
      break;
    }
  }
  return s;
}

double width(const Pseudo2DCaseSpec& spec, double x) {
  check_domain(spec, x);
  if (spec.width_function == 1) return 10.0 - gauss(x, 200.0, 0.5, 5.0, 10.0).v;
  return 10.0 - gauss(x, 400.0, 1.0 / 3.0, 5.0, 50.0).v - gauss(x, 400.0, 2.0 / 3.0, 5.0, 50.0).v;
}

double width_derivative(const Pseudo2DCaseSpec& spec, double x) {
  check_domain(spec, x);
  if (spec.width_function == 1) return -gauss(x, 200.0, 0.5, 5.0, 10.0).d;
  return -gauss(x, 400.0, 1.0 / 3.0, 5.0, 50.0).d - gauss(x, 400.0, 2.0 / 3.0, 5.0, 50.0).d;
}

MeanHeight mean_height(const Pseudo2DCaseSpec& spec, double x) {
  check_domain(spec, x);
  int branch = spec.tail && x > spec.tail->x1 ? 1 : 0;
  return branch_height(spec, branch, x);
}

double bed_slope(const Pseudo2DCaseSpec& spec, double x) { return slope_from(spec, x, mean_height(spec, x)); }

double wetted_area(const Pseudo2DCaseSpec& spec, double x, double h) {
  return h * (width(spec, x) + spec.side_slope * h);
}

double section_froude(const Pseudo2DCaseSpec& spec, double x, double h) {
  if (!(h > 0.0)) throw DomainError("Froude number undefined on a dry section");
  double a = wetted_area(spec, x, h);
  double top = width(spec, x) + 2.0 * spec.side_slope * h;
  return spec.discharge * std::sqrt(top / (kGravity * a * a * a));
}

double critical_depth(const Pseudo2DCaseSpec& spec, double x) {
  // Fr decreases monotonically with h; Fr(h) - 1 changes sign on a wide bracket.
  RootOptions opts;
  opts.bracket_tol = 1e-13;
  return solve_bracketed([&](double h) { return std::log(section_froude(spec, x, h)); }, 1e-6, 100.0, opts);
}

ChannelTopography::ChannelTopography(const Pseudo2DCaseSpec& spec, std::size_t fine_steps) {
  if (fine_steps < 2) throw DomainError("topography quadrature needs at least 2 fine steps");
  std::vector<double> cuts{0.0};
  if (spec.tail) cuts.push_back(spec.tail->x1);
  cuts.push_back(spec.length);
  std::vector<PiecewisePrimitive::Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    int branch = static_cast<int>(i);
    // z' = -S0, so z(x) = integral from x to L of S0 with z(L) = 0.
    pieces.push_back({cuts[i], cuts[i + 1], [spec, branch](double x) {
                        return -slope_from(spec, x, branch_height(spec, branch, x));
                      }});
  }
  primitive_ = std::make_shared<PiecewisePrimitive>(std::move(pieces), fine_steps,
                                                    PiecewisePrimitive::Rule::Simpson,
                                                    PiecewisePrimitive::Anchor::Right, 0.0);
}

std::vector<double> topography(const Pseudo2DCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor) {
  if (std::abs(grid.length() - spec.length) > 1e-9 * spec.length) {
    throw DomainError("grid length does not match the channel length");
  }
  if (fine_factor < 2) throw DomainError("fine grid factor must be at least 2");
  ChannelTopography topo(spec, fine_factor * grid.size());
  std::vector<double> z(grid.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = topo(grid.center(i));
  return z;
}

FlowField1D steady_solution(const Pseudo2DCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor) {
  FlowField1D f(grid);
  f.z = topography(spec, grid, fine_factor);
  f.froude.resize(f.size());
  f.critical.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.x[i];
    f.h[i] = mean_height(spec, x).h;
    f.u[i] = spec.discharge / wetted_area(spec, x, f.h[i]);
    f.q[i] = f.h[i] * f.u[i];
    f.froude[i] = section_froude(spec, x, f.h[i]);
    f.critical[i] = critical_depth(spec, x);
  }
  return f;
}

double domain_width(const Pseudo2DCaseSpec& spec) { return spec.side_slope > 0.0 ? 16.0 : 10.0; }

FlowField2D raster(const Pseudo2DCaseSpec& spec, const Grid2D& grid, std::size_t fine_factor) {
  if (std::abs(grid.x_axis().length() - spec.length) > 1e-9 * spec.length ||
      std::abs(grid.y_axis().length() - domain_width(spec)) > 1e-9) {
    throw DomainError("raster grid must cover [0, L] x [0, domain width]");
  }
  const auto zc = topography(spec, grid.x_axis(), fine_factor);
  const double axis = 0.5 * domain_width(spec);
  FlowField2D f(grid);
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    const double x = grid.x_axis().center(i);
    const double h = mean_height(spec, x).h;
    const double half = 0.5 * width(spec, x);
    const double surface = zc[i] + h;
    const double u = spec.discharge / wetted_area(spec, x, h);
    for (std::size_t j = 0; j < grid.ny(); ++j) {
      const std::size_t k = grid.index(i, j);
      const double d = std::abs(grid.y_axis().center(j) - axis);
      double bed = zc[i];
      if (d > half) bed = spec.side_slope > 0.0 ? zc[i] + (d - half) / spec.side_slope : surface + 0.5;
      f.z[k] = bed;
      f.h[k] = std::max(surface - bed, 0.0);
      f.u[k] = f.h[k] > 0.0 ? u : 0.0;
    }
  }
  f.flush_dry();
  return f;
}

BoundaryCondition left_boundary(const Pseudo2DCaseSpec& spec) {
  if (spec.supercritical_inflow) return BoundaryCondition::both(mean_height(spec, 0.0).h, spec.discharge);
  return BoundaryCondition::discharge(spec.discharge);
}

BoundaryCondition right_boundary(const Pseudo2DCaseSpec& spec) {
  if (spec.free_outflow) return BoundaryCondition::free();
  return BoundaryCondition::height(mean_height(spec, spec.length).h);
}

}  // namespace swb::pseudo2d

#include "swbench/bump.hpp"

#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/criticality.hpp"
#include "swbench/core/errors.hpp"
#include "swbench/core/numerics.hpp"

namespace swb::bump {

namespace {

void require_bump_grid(const Grid1D& grid) {
  if (std::abs(grid.length() - kLength) > 1e-12) {
    throw DomainError("bump cases live on [0, 25]");
  }
}

double cubic(double h, double z, double q, double head) {
  return h * h * h + (z - head) * h * h + q * q / (2.0 * kGravity);
}

double cubic_slope(double h, double z, double head) { return 3.0 * h * h + 2.0 * (z - head) * h; }

double root_in(double z, double q, double head, double lo, double hi) {
  RootOptions opts;
  // No early exit on the cubic residual: near h_c it is h^2 times the head
  // error, so 1e-12 there would still leave ~1e-10 in the head.
  opts.residual_tol = 0.0;
  return solve_bracketed([&](double h) { return cubic(h, z, q, head); }, lo, hi, opts,
                         [&](double h) { return cubic_slope(h, z, head); });
}

void fill_velocity(FlowField1D& f, double q0) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.q[i] = q0;
    f.u[i] = q0 / f.h[i];
  }
}

}  // namespace

BumpCaseSpec default_spec(BumpCase tag) {
  BumpCaseSpec s;
  s.tag = tag;
  switch (tag) {
    case BumpCase::LakeImmersed:
      s.initial_surface = 0.5;
      s.left = s.right = BoundaryCondition::wall();
      break;
    case BumpCase::LakeEmerged:
      s.initial_surface = 0.1;
      s.left = s.right = BoundaryCondition::wall();
      break;
    case BumpCase::Subcritical:
      s.q0 = 4.42;
      s.h_out = 2.0;
      s.initial_surface = 2.0;
      s.left = BoundaryCondition::discharge(s.q0);
      s.right = BoundaryCondition::height(s.h_out);
      break;
    case BumpCase::TranscriticalNoShock:
      s.q0 = 1.53;
      s.h_out = 0.66;
      s.initial_surface = 0.66;
      s.left = BoundaryCondition::discharge(s.q0);
      s.right = BoundaryCondition::height_while_subcritical(s.h_out);
      break;
    case BumpCase::TranscriticalShock:
      s.q0 = 0.18;
      s.h_out = 0.33;
      s.initial_surface = 0.33;
      s.left = BoundaryCondition::discharge(s.q0);
      s.right = BoundaryCondition::height(s.h_out);
      break;
  }
  return s;
}

double topography(double x) {
  if (!(x >= 0.0 && x <= kLength)) {
    std::ostringstream os;
    os << "x=" << x << " outside the bump domain [0, 25]";
    throw DomainError(os.str());
  }
  if (x > 8.0 && x < 12.0) return 0.2 - 0.05 * (x - 10.0) * (x - 10.0);
  return 0.0;
}

FlowField1D lake_at_rest(const Grid1D& grid, double surface) {
  require_bump_grid(grid);
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.z[i] = topography(f.x[i]);
    f.h[i] = std::max(surface, f.z[i]) - f.z[i];
  }
  f.flush_dry();
  return f;
}

double bernoulli_head(double h, double z, double q) {
  return q * q / (2.0 * kGravity * h * h) + h + z;
}

double subcritical_root(double z, double q, double head) {
  double hc = critical_height(q);
  if (cubic(hc, z, q, head) > 0.0) throw ConstructionError("no subcritical root: head below critical energy");
  // f(head - z) = q^2/(2g) > 0 closes the bracket from above.
  double hi = std::max(3.0 * hc, head - z);
  return root_in(z, q, head, hc, hi);
}

double supercritical_root(double z, double q, double head) {
  double hc = critical_height(q);
  if (cubic(hc, z, q, head) > 0.0) throw ConstructionError("no supercritical root: head below critical energy");
  return root_in(z, q, head, 1e-6 * hc, hc);
}

FlowField1D subcritical(const Grid1D& grid, double q0, double h_out) {
  require_bump_grid(grid);
  if (!(h_out > critical_height(q0))) throw ConstructionError("outflow height is not subcritical");
  const double head = bernoulli_head(h_out, 0.0, q0);
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.z[i] = topography(f.x[i]);
    f.h[i] = subcritical_root(f.z[i], q0, head);
  }
  fill_velocity(f, q0);
  return f;
}

namespace {

// Head of the flow that is critical at the crest.
double crest_head(double q0) {
  double hc = critical_height(q0);
  return bernoulli_head(hc, kCrestZ, q0);
}

double transcritical_height(double x, double z, double q0, double head) {
  double hc = critical_height(q0);
  if (z >= kCrestZ || cubic(hc, z, q0, head) >= 0.0) return hc;
  return x < kCrestX ? subcritical_root(z, q0, head) : supercritical_root(z, q0, head);
}

}  // namespace

FlowField1D transcritical_noshock(const Grid1D& grid, double q0) {
  require_bump_grid(grid);
  const double head = crest_head(q0);
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.z[i] = topography(f.x[i]);
    f.h[i] = transcritical_height(f.x[i], f.z[i], q0, head);
  }
  fill_velocity(f, q0);
  return f;
}

double rankine_hugoniot_residual(double q, double h1, double h2) {
  return q * q * (1.0 / h1 - 1.0 / h2) + 0.5 * kGravity * (h1 * h1 - h2 * h2);
}

ShockSolveResult locate_shock(double q0, double h_out) {
  const double hc = critical_height(q0);
  if (!(h_out > hc)) throw ConstructionError("outflow height is not subcritical");
  const double head_up = crest_head(q0);
  const double head_down = bernoulli_head(h_out, 0.0, q0);

  // Residual of the jump relation between the two branches; empty where the
  // downstream subcritical branch does not exist yet (too close to the crest).
  auto branches = [&](double x, double& h1, double& h2) {
    double z = topography(x);
    if (cubic(hc, z, q0, head_down) > 0.0 || cubic(hc, z, q0, head_up) >= 0.0) return false;
    h1 = supercritical_root(z, q0, head_up);
    h2 = subcritical_root(z, q0, head_down);
    return true;
  };
  auto residual = [&](double x) {
    double h1 = 0.0, h2 = 0.0;
    if (!branches(x, h1, h2)) throw ConstructionError("jump branches undefined");
    return rankine_hugoniot_residual(q0, h1, h2);
  };

  const int n_scan = 4000;
  bool have_prev = false;
  double x_prev = 0.0, r_prev = 0.0;
  for (int k = 1; k < n_scan; ++k) {
    double x = kCrestX + (kLength - kCrestX) * k / n_scan;
    double h1 = 0.0, h2 = 0.0;
    if (!branches(x, h1, h2)) {
      have_prev = false;
      continue;
    }
    double r = rankine_hugoniot_residual(q0, h1, h2);
    if (have_prev && ((r_prev < 0.0) != (r < 0.0) || r == 0.0)) {
      RootOptions opts;
      opts.bracket_tol = 1e-12;
      double xs = solve_bracketed(residual, x_prev, x, opts);
      ShockSolveResult out{xs, 0.0, 0.0, 0.0};
      branches(xs, out.h1, out.h2);
      out.residual = rankine_hugoniot_residual(q0, out.h1, out.h2);
      return out;
    }
    have_prev = true;
    x_prev = x;
    r_prev = r;
  }
  throw ConstructionError("jump relation has no sign change downstream of the crest");
}

ShockSolution transcritical_shock(const Grid1D& grid, double q0, double h_out) {
  require_bump_grid(grid);
  ShockSolution out{FlowField1D(grid), locate_shock(q0, h_out)};
  const double head_up = crest_head(q0);
  const double head_down = bernoulli_head(h_out, 0.0, q0);
  FlowField1D& f = out.field;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double x = f.x[i];
    f.z[i] = topography(x);
    if (x < out.shock.x_shock) {
      f.h[i] = transcritical_height(x, f.z[i], q0, head_up);
    } else {
      f.h[i] = subcritical_root(f.z[i], q0, head_down);
    }
  }
  fill_velocity(f, q0);
  return out;
}

}  // namespace swb::bump

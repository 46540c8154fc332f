#include "swbench/macdonald.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/errors.hpp"

namespace swb::macdonald {

namespace {

const double kK = std::cbrt(4.0 / kGravity);

// K (1 + amp exp(-c ((x/scale) - 1/2)^2)) and its derivatives.
HeightSample gaussian(double x, double scale, double amp, double c) {
  double s = x / scale - 0.5;
  double e = std::exp(-c * s * s);
  double d1 = -2.0 * c * s / scale;
  double d2 = (4.0 * c * c * s * s - 2.0 * c) / (scale * scale);
  return {kK * (1.0 + amp * e), kK * amp * e * d1, kK * amp * e * d2};
}

// K (1 - tanh(k s)/k) with s = x/1000 - 1/2.
HeightSample tanh_piece(double x, double k) {
  double th = std::tanh(k * (x / 1000.0 - 0.5));
  double sech2 = 1.0 - th * th;
  return {kK * (1.0 - th / k), -kK * sech2 / 1000.0, 2.0 * kK * k * th * sech2 / 1.0e6};
}

HeightSample super_sub(double x, int branch) {
  if (branch == 0) {
    double e = std::exp(-x / 250.0);
    return {kK * (0.9 - e / 6.0), kK * e / 1500.0, -kK * e / 375000.0};
  }
  // Exponent as printed: exp(-20 k (x/1000 - 1/2)), no square.
  static const double a[3] = {-0.348427, 0.552264, -0.55558};
  double s = x / 1000.0 - 0.5;
  double h = 1.0, d1 = 0.0, d2 = 0.0;
  for (int k = 1; k <= 3; ++k) {
    double r = 20.0 * k / 1000.0;
    double e = a[k - 1] * std::exp(-20.0 * k * s);
    h += e;
    d1 -= r * e;
    d2 += r * r * e;
  }
  double t = 0.8 * std::exp(x / 1000.0 - 1.0);
  return {kK * (h + t), kK * (d1 + t / 1000.0), kK * (d2 + t / 1.0e6)};
}

HeightSample short_smooth_shock(double x, int branch) {
  double xi = x / 100.0;
  if (branch == 0) {
    return {kK * (4.0 / 3.0 - xi) - 9.0 * x / 1000.0 * (xi - 2.0 / 3.0),
            -kK / 100.0 - 9.0 / 1000.0 * (2.0 * xi - 2.0 / 3.0), -18.0 / 100000.0};
  }
  const double a1 = 0.674202, a2 = 21.7112, a3 = 14.492, a4 = 1.4305;
  double w = xi - 2.0 / 3.0;
  return {kK * (a1 * w * w * w * w + a1 * w * w * w - a2 * w * w + a3 * w + a4),
          kK * (4.0 * a1 * w * w * w + 3.0 * a1 * w * w - 2.0 * a2 * w + a3) / 100.0,
          kK * (12.0 * a1 * w * w + 6.0 * a1 * w - 2.0 * a2) / 1.0e4};
}

void check_domain(Profile p, double x) {
  double L = profile_length(p);
  if (!(x >= 0.0 && x <= L)) {
    std::ostringstream os;
    os << "x=" << x << " outside [0, " << L << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

double profile_length(Profile p) {
  switch (p) {
    case Profile::ShortSmoothShock:
    case Profile::ShortSuper:
    case Profile::ShortSubSuper:
      return 100.0;
    case Profile::Periodic:
      return 5000.0;
    default:
      return 1000.0;
  }
}

std::vector<double> breakpoints(Profile p) {
  switch (p) {
    case Profile::LongSubSuper:
    case Profile::LongSuperSub:
      return {500.0};
    case Profile::ShortSmoothShock:
      return {200.0 / 3.0};
    default:
      return {};
  }
}

namespace {

// branch 0 is the formula left of the breakpoint (or the only one), 1 the right one.
HeightSample branch_sample(Profile p, int branch, double x) {
  switch (p) {
    case Profile::LongSub: return gaussian(x, 1000.0, 0.5, 16.0);
    case Profile::LongSuper: return gaussian(x, 1000.0, -0.2, 36.0);
    case Profile::LongSubSuper: return tanh_piece(x, branch == 0 ? 3.0 : 6.0);
    case Profile::LongSuperSub: return super_sub(x, branch);
    case Profile::ShortSmoothShock: return short_smooth_shock(x, branch);
    case Profile::ShortSuper: return gaussian(x, 100.0, -0.25, 4.0);
    case Profile::ShortSubSuper: {
      double d = x - 50.0;
      return {kK * (1.0 - d / 200.0 + d * d / 30000.0), kK * (-1.0 / 200.0 + d / 15000.0), kK / 15000.0};
    }
    case Profile::Periodic: {
      double w = kPi / 500.0;
      return {9.0 / 8.0 + 0.25 * std::sin(w * x), 0.25 * w * std::cos(w * x), -0.25 * w * w * std::sin(w * x)};
    }
  }
  throw DomainError("unknown profile");
}

}  // namespace

HeightSample hex_profile(Profile p, double x) {
  check_domain(p, x);
  auto bp = breakpoints(p);
  return branch_sample(p, !bp.empty() && x > bp.front() ? 1 : 0, x);
}

HeightSample hex_profile(const MacDonaldCaseSpec& spec, double x) { return hex_profile(spec.profile, x); }

MacDonaldCaseSpec make_case(McCase id, FrictionChoice fc) {
  const bool dw = fc == FrictionChoice::DarcyWeisbach;
  auto law = [&](double n, double f) -> FrictionLaw {
    if (dw) return DarcyWeisbach{f};
    return Manning{n};
  };
  auto manning_only = [&](double n) -> FrictionLaw {
    if (dw) throw DomainError("this channel is defined with Manning friction only");
    return Manning{n};
  };
  MacDonaldCaseSpec s{};
  s.id = id;
  switch (id) {
    case McCase::LongSub:
      s.profile = Profile::LongSub;
      s.q0 = 2.0;
      s.friction = law(0.033, 0.093);
      break;
    case McCase::LongSuper:
      s.profile = Profile::LongSuper;
      s.q0 = 2.5;
      s.friction = law(0.04, 0.065);
      s.supercritical_inflow = true;
      s.free_outflow = true;
      break;
    case McCase::LongSubSuper:
      s.profile = Profile::LongSubSuper;
      s.q0 = 2.0;
      s.friction = law(0.0218, 0.042);
      s.free_outflow = true;
      break;
    case McCase::LongSuperSub:
      s.profile = Profile::LongSuperSub;
      s.q0 = 2.0;
      s.friction = law(0.0218, 0.0425);
      s.supercritical_inflow = true;
      break;
    case McCase::ShortSmoothShock:
      s.profile = Profile::ShortSmoothShock;
      s.q0 = 2.0;
      s.friction = manning_only(0.0328);
      s.initial = Initial::DownstreamLake;
      break;
    case McCase::ShortSuper:
      s.profile = Profile::ShortSuper;
      s.q0 = 2.0;
      s.friction = manning_only(0.03);
      s.supercritical_inflow = true;
      s.free_outflow = true;
      break;
    case McCase::ShortSubSuper:
      s.profile = Profile::ShortSubSuper;
      s.q0 = 2.0;
      s.friction = manning_only(0.0328);
      s.free_outflow = true;
      s.initial = Initial::DownstreamLake;
      break;
    case McCase::Periodic:
      s.profile = Profile::Periodic;
      s.q0 = 2.0;
      s.friction = manning_only(0.03);
      s.initial = Initial::DownstreamLake;
      break;
    case McCase::RainSub:
      s.profile = Profile::LongSub;
      s.q0 = 1.0;
      s.friction = law(0.033, 0.093);
      s.rain = 0.001;
      break;
    case McCase::RainSuper:
      s.profile = Profile::LongSuper;
      s.q0 = 2.5;
      s.friction = law(0.04, 0.065);
      s.rain = 0.001;
      s.rain_start = 1500.0;
      s.supercritical_inflow = true;
      s.free_outflow = true;
      break;
    case McCase::DiffusionSub:
      s.profile = Profile::LongSub;
      s.q0 = 1.5;
      s.friction = LaminarTurbulent{0.001, 0.01, 0.01, 0.001};
      s.diffusion = true;
      break;
    case McCase::DiffusionSuper:
      s.profile = Profile::LongSuper;
      s.q0 = 2.5;
      s.friction = LaminarTurbulent{0.001, 0.005, 0.01, 0.1};
      s.diffusion = true;
      s.supercritical_inflow = true;
      s.free_outflow = true;
      break;
  }
  s.length = profile_length(s.profile);
  return s;
}

double discharge(const MacDonaldCaseSpec& spec, double x) { return spec.q0 + spec.rain * x; }

LaminarTurbulentTerms diffusion_source_terms(double h, double q, double k_l, double k_t, double mu_v) {
  return laminar_turbulent_terms(LaminarTurbulent{k_l, k_t, mu_v, 0.0}, h, q);
}

double topography_slope(const MacDonaldCaseSpec& spec, double x, const HeightSample& s) {
  const double g = kGravity;
  const double q = discharge(spec, x);
  const double h = s.h;
  double slope = (q * q / (g * h * h * h) - 1.0) * s.dh - friction_slope(spec.friction, h, q);
  if (spec.rain != 0.0) slope -= 2.0 * q * spec.rain / (g * h * h);
  if (spec.diffusion) {
    const auto* lt = std::get_if<LaminarTurbulent>(&spec.friction);
    double mu = lt ? 4.0 * lt->mu_h : 0.0;
    slope += mu / (g * h * h) * (-q * s.d2h + q / h * s.dh * s.dh);
  }
  return slope;
}

SynthesizedTopography::SynthesizedTopography(const MacDonaldCaseSpec& spec, std::size_t fine_steps) {
  if (fine_steps < 2) throw DomainError("topography synthesis needs at least 2 fine steps");
  validate(spec.friction);
  std::vector<double> cuts{0.0};
  for (double b : breakpoints(spec.profile)) cuts.push_back(b);
  cuts.push_back(spec.length);

  std::vector<PiecewisePrimitive::Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const int branch = static_cast<int>(i);
    pieces.push_back({cuts[i], cuts[i + 1], [spec, branch](double x) {
                        return topography_slope(spec, x, branch_sample(spec.profile, branch, x));
                      }});
  }
  try {
    primitive_ = std::make_shared<PiecewisePrimitive>(std::move(pieces), fine_steps,
                                                      PiecewisePrimitive::Rule::Rk4,
                                                      PiecewisePrimitive::Anchor::Left, 0.0);
  } catch (const IntegrationError& e) {
    throw ConstructionError(std::string("topography synthesis failed: ") + e.what());
  }
  const auto& v = primitive_->values();
  primitive_->shift(-*std::min_element(v.begin(), v.end()));
}

SynthesizedTopography synthesize_topography(const MacDonaldCaseSpec& spec, std::size_t fine_steps) {
  return SynthesizedTopography(spec, fine_steps);
}

FlowField1D steady_solution(const MacDonaldCaseSpec& spec, const Grid1D& grid,
                            const SynthesizedTopography& topo) {
  if (std::abs(grid.length() - spec.length) > 1e-9 * spec.length) {
    throw DomainError("grid length does not match the channel length");
  }
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.h[i] = hex_profile(spec.profile, f.x[i]).h;
    f.q[i] = discharge(spec, f.x[i]);
    f.u[i] = f.q[i] / f.h[i];
    f.z[i] = topo(f.x[i]);
  }
  return f;
}

FlowField1D steady_solution(const MacDonaldCaseSpec& spec, const Grid1D& grid, std::size_t fine_factor) {
  if (fine_factor < 2) throw DomainError("fine grid factor must be at least 2");
  return steady_solution(spec, grid, SynthesizedTopography(spec, fine_factor * grid.size()));
}

BoundaryCondition left_boundary(const MacDonaldCaseSpec& spec) {
  if (spec.supercritical_inflow) return BoundaryCondition::both(hex_profile(spec.profile, 0.0).h, spec.q0);
  return BoundaryCondition::discharge(spec.q0);
}

BoundaryCondition right_boundary(const MacDonaldCaseSpec& spec) {
  if (spec.free_outflow) return BoundaryCondition::free();
  return BoundaryCondition::height(hex_profile(spec.profile, spec.length).h);
}

FlowField1D initial_state(const MacDonaldCaseSpec& spec, const FlowField1D& steady,
                          const SynthesizedTopography& topo) {
  FlowField1D f = steady;
  std::fill(f.u.begin(), f.u.end(), 0.0);
  std::fill(f.q.begin(), f.q.end(), 0.0);
  if (spec.initial == Initial::Dry) {
    std::fill(f.h.begin(), f.h.end(), 0.0);
    return f;
  }
  const double level = hex_profile(spec.profile, spec.length).h + topo(spec.length);
  for (std::size_t i = 0; i < f.size(); ++i) f.h[i] = std::max(level - f.z[i], 0.0);
  f.flush_dry();
  return f;
}

}  // namespace swb::macdonald

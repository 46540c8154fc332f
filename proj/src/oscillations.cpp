#include "swbench/oscillations.hpp"

#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/errors.hpp"

namespace swb::oscillations {

namespace {

void check_basin(const ThackerSpec& s) {
  if (!(s.a > 0.0 && s.h0 > 0.0 && s.length > 0.0)) throw DomainError("basin needs a, h0, L > 0");
}

void check_time(double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
}

void check_x(double x, double length) {
  if (!(x >= 0.0 && x <= length)) {
    std::ostringstream os;
    os << "x=" << x << " outside [0, " << length << "]";
    throw DomainError(os.str());
  }
}

void check_sampson(const SampsonSpec& s) {
  if (!(s.a > 0.0 && s.h0 > 0.0 && s.length > 0.0 && s.tau >= 0.0)) {
    throw DomainError("sampson basin needs a, h0, L > 0 and tau >= 0");
  }
}

// Common factor of the Sampson shoreline and surface slope: -e^{-tau t/2} (B s cos + tau B/2 sin).
double sampson_slope_factor(const SampsonSpec& s, double t) {
  const double sv = sampson_s(s);
  return -std::exp(-s.tau * t / 2.0) * (s.B * sv * std::cos(sv * t) + s.tau * s.B / 2.0 * std::sin(sv * t));
}

}  // namespace

ThackerSpec thacker1d_spec() {
  ThackerSpec s;
  s.a = 1.0;
  s.h0 = 0.5;
  s.length = 4.0;
  s.final_time = 10.0303;
  return s;
}

ThackerSpec radial_spec() {
  ThackerSpec s;
  s.a = 1.0;
  s.h0 = 0.1;
  s.length = 4.0;
  s.r0 = 0.8;
  s.final_time = 3.0 * 2.0 * kPi / radial_omega(s);
  return s;
}

ThackerSpec planar_spec() {
  ThackerSpec s;
  s.a = 1.0;
  s.h0 = 0.1;
  s.length = 4.0;
  s.eta = 0.5;
  s.final_time = 3.0 * 2.0 * kPi / planar_omega(s);
  return s;
}

SampsonSpec sampson_spec() { return {3000.0, 10.0, 0.001, 5.0, 10000.0, 6000.0}; }

double thacker1d_omega(const ThackerSpec& s) {
  check_basin(s);
  return std::sqrt(2.0 * kGravity * s.h0) / s.a;
}

double thacker1d_velocity(const ThackerSpec& s) {
  check_basin(s);
  return std::sqrt(2.0 * kGravity * s.h0) / (2.0 * s.a);
}

double radial_omega(const ThackerSpec& s) {
  check_basin(s);
  return std::sqrt(8.0 * kGravity * s.h0) / s.a;
}

double radial_amplitude(const ThackerSpec& s) {
  check_basin(s);
  if (!(s.r0 > 0.0 && s.r0 < s.a)) throw DomainError("radial case needs 0 < r0 < a");
  return (s.a * s.a - s.r0 * s.r0) / (s.a * s.a + s.r0 * s.r0);
}

double planar_omega(const ThackerSpec& s) {
  check_basin(s);
  return std::sqrt(2.0 * kGravity * s.h0) / s.a;
}

double sampson_p(const SampsonSpec& s) {
  check_sampson(s);
  return std::sqrt(8.0 * kGravity * s.h0 / (s.a * s.a));
}

double sampson_s(const SampsonSpec& s) {
  double p = sampson_p(s);
  if (!(p > s.tau)) throw DomainError("sampson closed form needs p > tau (under-damped)");
  return std::sqrt(p * p - s.tau * s.tau) / 2.0;
}

Shoreline thacker1d_shoreline(const ThackerSpec& s, double t) {
  check_time(t);
  // Shoreline offset is B a cos(wt) / sqrt(2 g h0) = cos(wt) / 2 for any a.
  double shift = -0.5 * std::cos(thacker1d_omega(s) * t);
  return {shift - s.a + s.length / 2.0, shift + s.a + s.length / 2.0};
}

Shoreline sampson_shoreline(const SampsonSpec& s, double t) {
  check_time(t);
  double c = s.a * s.a / (2.0 * kGravity * s.h0) * sampson_slope_factor(s, t);
  return {c - s.a + s.length / 2.0, c + s.a + s.length / 2.0};
}

double thacker1d_bed(const ThackerSpec& s, double x) {
  double xi = (x - s.length / 2.0) / s.a;
  return s.h0 * (xi * xi - 1.0);
}

double paraboloid_bed(const ThackerSpec& s, double x, double y) {
  double dx = x - s.length / 2.0, dy = y - s.length / 2.0;
  return -s.h0 * (1.0 - (dx * dx + dy * dy) / (s.a * s.a));
}

double sampson_bed(const SampsonSpec& s, double x) {
  double xi = x - s.length / 2.0;
  return s.h0 * xi * xi / (s.a * s.a);
}

State1D thacker1d(const ThackerSpec& s, double t, double x) {
  check_x(x, s.length);
  Shoreline sh = thacker1d_shoreline(s, t);
  if (x < sh.x1 || x > sh.x2) return {0.0, 0.0};
  const double w = thacker1d_omega(s);
  const double B = thacker1d_velocity(s);
  double arg = (x - s.length / 2.0) / s.a + B / std::sqrt(2.0 * kGravity * s.h0) * std::cos(w * t);
  double h = -s.h0 * (arg * arg - 1.0);
  if (!(h > 0.0)) return {0.0, 0.0};
  return {h, B * std::sin(w * t)};
}

State2D thacker_radial(const ThackerSpec& s, double t, double x, double y) {
  check_time(t);
  check_x(x, s.length);
  check_x(y, s.length);
  const double A = radial_amplitude(s);
  const double w = radial_omega(s);
  const double den = 1.0 - A * std::cos(w * t);
  double dx = x - s.length / 2.0, dy = y - s.length / 2.0;
  double r2 = (dx * dx + dy * dy) / (s.a * s.a);
  double h = s.h0 * (std::sqrt(1.0 - A * A) / den - 1.0 - r2 * ((1.0 - A * A) / (den * den) - 1.0)) -
             paraboloid_bed(s, x, y);
  if (!(h > 0.0)) return {0.0, 0.0, 0.0};
  double f = 0.5 * w * A * std::sin(w * t) / den;
  return {h, f * dx, f * dy};
}

State2D thacker_planar(const ThackerSpec& s, double t, double x, double y) {
  check_time(t);
  check_x(x, s.length);
  check_x(y, s.length);
  const double w = planar_omega(s);
  double dx = x - s.length / 2.0, dy = y - s.length / 2.0;
  double h = s.eta * s.h0 / (s.a * s.a) * (2.0 * dx * std::cos(w * t) + 2.0 * dy * std::sin(w * t) - s.eta) -
             paraboloid_bed(s, x, y);
  if (!(h > 0.0)) return {0.0, 0.0, 0.0};
  return {h, -s.eta * w * std::sin(w * t), s.eta * w * std::cos(w * t)};
}

State1D sampson(const SampsonSpec& s, double t, double x) {
  check_x(x, s.length);
  Shoreline sh = sampson_shoreline(s, t);
  if (x < sh.x1 || x > sh.x2) return {0.0, 0.0};
  const double sv = sampson_s(s);
  const double g = kGravity;
  const double decay = std::exp(-s.tau * t);
  const double xi = x - s.length / 2.0;
  double surface = s.h0 +
                   s.a * s.a * s.B * s.B * decay / (8.0 * g * g * s.h0) *
                       (-sv * s.tau * std::sin(2.0 * sv * t) + (s.tau * s.tau / 4.0 - sv * sv) * std::cos(2.0 * sv * t)) -
                   s.B * s.B * decay / (4.0 * g) + sampson_slope_factor(s, t) / g * xi;
  double h = surface - sampson_bed(s, x);
  if (!(h > 0.0)) return {0.0, 0.0};
  return {h, s.B * std::exp(-s.tau * t / 2.0) * std::sin(sv * t)};
}

FlowField1D thacker1d_field(const ThackerSpec& s, const Grid1D& grid, double t) {
  if (grid.length() != s.length) throw DomainError("grid length must match the basin");
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    State1D st = thacker1d(s, t, f.x[i]);
    f.h[i] = st.h;
    f.u[i] = st.u;
    f.z[i] = thacker1d_bed(s, f.x[i]);
    f.q[i] = st.h * st.u;
  }
  f.flush_dry();
  return f;
}

FlowField1D sampson_field(const SampsonSpec& s, const Grid1D& grid, double t) {
  if (grid.length() != s.length) throw DomainError("grid length must match the basin");
  FlowField1D f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    State1D st = sampson(s, t, f.x[i]);
    f.h[i] = st.h;
    f.u[i] = st.u;
    f.z[i] = sampson_bed(s, f.x[i]);
    f.q[i] = st.h * st.u;
  }
  f.flush_dry();
  return f;
}

namespace {

template <class Eval>
FlowField2D fill_2d(const ThackerSpec& s, const Grid2D& grid, Eval eval) {
  if (grid.x_axis().length() != s.length || grid.y_axis().length() != s.length) {
    throw DomainError("grid must cover the square basin");
  }
  FlowField2D f(grid);
  for (std::size_t k = 0; k < f.size(); ++k) {
    State2D st = eval(f.x[k], f.y[k]);
    f.h[k] = st.h;
    f.u[k] = st.u;
    f.v[k] = st.v;
    f.z[k] = paraboloid_bed(s, f.x[k], f.y[k]);
  }
  f.flush_dry();
  return f;
}

}  // namespace

FlowField2D radial_field(const ThackerSpec& s, const Grid2D& grid, double t) {
  return fill_2d(s, grid, [&](double x, double y) { return thacker_radial(s, t, x, y); });
}

FlowField2D planar_field(const ThackerSpec& s, const Grid2D& grid, double t) {
  return fill_2d(s, grid, [&](double x, double y) { return thacker_planar(s, t, x, y); });
}

}  // namespace swb::oscillations

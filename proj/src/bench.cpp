#include "swbench/bench.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>

#include "swbench/ascii.hpp"
#include "swbench/bump.hpp"
#include "swbench/core/constants.hpp"
#include "swbench/dambreak.hpp"

namespace swb::bench {

namespace {

bool wet(double h) { return h > kDryThreshold; }

struct Columns {
  const std::vector<double>& x;
  const std::vector<double>& h;
  std::vector<double> q;
};

ErrorReport compare_columns(const Columns& num, const Columns& ana, const kernels::KernelSet* k) {
  const std::size_t n = ana.h.size();
  if (num.h.size() != n) throw DomainError("compare: fields have different cell counts");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(num.x[i] - ana.x[i]) > 1e-9 * std::max(1.0, std::abs(ana.x[i]))) {
      throw DomainError("compare: cell centres differ at index " + std::to_string(i));
    }
  }
  if (!k) k = &kernels::active();

  ErrorReport r;
  r.cells = n;
  r.relative.assign(n, 0.0);
  std::vector<double> nh, ah, nq, aq;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = ana.h[i], v = num.h[i];
    // The wet mask follows the analytic field; h exactly at the threshold counts as wet.
    if (a < kDryThreshold) {
      ++r.excluded;
      if (wet(v)) {
        ++r.spurious_wet;
        r.relative[i] = kSentinel;
      }
      continue;
    }
    ++r.wet_cells;
    nh.push_back(v);
    ah.push_back(a);
    nq.push_back(num.q[i]);
    aq.push_back(ana.q[i]);
    if (!wet(v)) {
      ++r.missed_wet;
      r.relative[i] = -kSentinel;
    } else {
      r.relative[i] = std::clamp((v - a) / a * 100.0, -kSentinel, kSentinel);
    }
    if (std::abs(r.relative[i]) > best) {
      best = std::abs(r.relative[i]);
      r.max_index = i;
    }
  }
  if (r.wet_cells) {
    const double m = static_cast<double>(r.wet_cells);
    const std::size_t w = r.wet_cells;
    const double s1 = k->sum_abs_diff(nh.data(), ah.data(), w);
    r.l1_h = s1 / m;
    r.l2_h = std::sqrt(k->sum_sq_diff(nh.data(), ah.data(), w) / m);
    r.linf_h = k->max_abs_diff(nh.data(), ah.data(), w);
    r.l1_q = k->sum_abs_diff(nq.data(), aq.data(), w) / m;
    r.l2_q = std::sqrt(k->sum_sq_diff(nq.data(), aq.data(), w) / m);
    r.linf_q = k->max_abs_diff(nq.data(), aq.data(), w);
    double mass = 0.0;
    for (double a : ah) mass += a;
    r.l1_relative = mass > 0.0 ? s1 / mass : 0.0;
    r.max_x = ana.x[r.max_index];
    r.max_relative = r.relative[r.max_index];
  }
  return r;
}

std::vector<double> discharge(const FlowField1D& f) {
  if (f.q.size() == f.size()) return f.q;
  std::vector<double> q(f.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = f.h[i] * f.u[i];
  return q;
}

std::string fmt(double v) { return ascii::format_number(v); }

}  // namespace

ErrorReport compare(const FlowField1D& numeric, const FlowField1D& analytic, const kernels::KernelSet* k) {
  return compare_columns({numeric.x, numeric.h, discharge(numeric)}, {analytic.x, analytic.h, discharge(analytic)}, k);
}

ErrorReport compare(const FlowField2D& numeric, const FlowField2D& analytic, const kernels::KernelSet* k) {
  if (numeric.nx != analytic.nx || numeric.ny != analytic.ny) throw DomainError("compare: raster shapes differ");
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    if (std::abs(numeric.y[i] - analytic.y[i]) > 1e-9 * std::max(1.0, std::abs(analytic.y[i]))) {
      throw DomainError("compare: cell centres differ at index " + std::to_string(i));
    }
  }
  auto qx = [](const FlowField2D& f) {
    std::vector<double> q(f.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = f.h[i] * f.u[i];
    return q;
  };
  return compare_columns({numeric.x, numeric.h, qx(numeric)}, {analytic.x, analytic.h, qx(analytic)}, k);
}

void write_summary(std::ostream& os, const ErrorReport& r) {
  os << "cells=" << r.cells << '\n'
     << "wet_cells=" << r.wet_cells << '\n'
     << "excluded_dry=" << r.excluded << '\n'
     << "spurious_wet=" << r.spurious_wet << '\n'
     << "missed_wet=" << r.missed_wet << '\n'
     << "l1_h=" << fmt(r.l1_h) << '\n'
     << "l2_h=" << fmt(r.l2_h) << '\n'
     << "linf_h=" << fmt(r.linf_h) << '\n'
     << "l1_q=" << fmt(r.l1_q) << '\n'
     << "l2_q=" << fmt(r.l2_q) << '\n'
     << "linf_q=" << fmt(r.linf_q) << '\n'
     << "l1_relative=" << fmt(r.l1_relative) << '\n'
     << "max_relative_percent=" << fmt(r.max_relative) << '\n'
     << "max_relative_x=" << fmt(r.max_x) << '\n';
}

void write_report(std::ostream& os, const FlowField1D& numeric, const FlowField1D& analytic, const ErrorReport& r) {
  os << "#x\th_numeric\th_analytic\trelative_percent\n";
  for (std::size_t i = 0; i < r.cells; ++i) {
    os << fmt(analytic.x[i]) << '\t' << fmt(numeric.h[i]) << '\t' << fmt(analytic.h[i]) << '\t' << fmt(r.relative[i])
       << '\n';
  }
  write_summary(os, r);
}

CaseRun run_case(const catalog::Request& r, const SolverOptions& opt) {
  auto problem = catalog::solver_problem(r, opt.final_time);
  problem.config.order = opt.order;
  problem.config.cfl = opt.cfl;
  problem.config.kernels = opt.kernels;
  problem.config.history_stride = 50;
  fv::Solver solver(problem.grid, problem.config, problem.initial);
  auto result = solver.run();
  auto numeric = solver.field();
  return {std::move(problem), std::move(result), std::move(numeric)};
}

ConvergenceStudy fit(std::vector<ConvergencePoint> points) {
  if (points.size() < 3) throw DomainError("a convergence study needs at least 3 resolutions");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].error > 0.0) || !std::isfinite(points[i].error)) {
      throw DomainError("convergence errors must be positive and finite");
    }
    if (i && points[i].cells <= points[i - 1].cells) throw DomainError("cell counts must increase");
  }
  ConvergenceStudy s;
  s.points = points;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(points[0].error - points[1].error) <= 10.0 * eps * points[1].error) {
    points.erase(points.begin());
    s.dropped_coarsest = true;
  }
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += std::log(static_cast<double>(p.cells));
    my += std::log(p.error);
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(static_cast<double>(p.cells)) - mx;
    sxy += dx * (std::log(p.error) - my);
    sxx += dx * dx;
  }
  s.order = -sxy / sxx;
  return s;
}

ConvergenceStudy convergence(const catalog::Request& base, const SolverOptions& opt,
                             const std::vector<std::size_t>& resolutions) {
  std::vector<std::future<double>> runs;
  for (std::size_t n : resolutions) {
    catalog::Request r = base;
    r.cells = n;
    runs.push_back(std::async(std::launch::async, [r, opt] {
      auto run = run_case(r, opt);
      return compare(run.numeric, run.problem.reference, opt.kernels).l1_h;
    }));
  }
  std::vector<ConvergencePoint> points;
  std::vector<std::string> diag;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    try {
      points.push_back({resolutions[i], runs[i].get()});
    } catch (const std::exception& e) {
      diag.push_back(std::to_string(resolutions[i]) + " cells: " + e.what());
    }
  }
  if (!diag.empty()) throw StudyError("convergence study aborted: " + diag.front(), diag);
  return fit(std::move(points));
}

double wet_front(const FlowField1D& f) {
  if (f.size() == 0) return 0.0;
  const double half = f.size() > 1 ? 0.5 * (f.x[1] - f.x[0]) : f.x[0];
  double front = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (wet(f.h[i])) front = f.x[i] + half;
  }
  return front;
}

BandCheck default_band(const ErrorReport& report) {
  return {"l1_relative <= 5%", report.l1_relative <= 0.05, "l1_relative=" + fmt(report.l1_relative)};
}

std::vector<BandCheck> check_bands(const catalog::Request& r, double time, const FlowField1D& numeric,
                                   const FlowField1D& analytic, const ErrorReport& report) {
  using catalog::Type;
  const auto& a = r.address;
  const auto p = catalog::resolved_params(r);
  const double dx = analytic.size() > 1 ? analytic.x[1] - analytic.x[0] : 1.0;
  std::vector<BandCheck> out;

  if (a.dim == 1 && a.type == Type::Bump && a.number <= 2) {
    double dev = 0.0, qmax = 0.0;
    const double surface = p.at("surface");
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (wet(numeric.h[i])) dev = std::max(dev, std::abs(numeric.h[i] + numeric.z[i] - surface));
      qmax = std::max(qmax, std::abs(numeric.q.empty() ? numeric.h[i] * numeric.u[i] : numeric.q[i]));
    }
    out.push_back({"lake at rest: |h+z-surface| <= 1e-12", dev <= 1e-12, "max=" + fmt(dev)});
    out.push_back({"lake at rest: |q| <= 1e-12", qmax <= 1e-12, "max=" + fmt(qmax)});
    out.push_back({"wet set unchanged", report.spurious_wet == 0 && report.missed_wet == 0,
                   "spurious=" + std::to_string(report.spurious_wet) + " missed=" + std::to_string(report.missed_wet)});
    return out;
  }

  if (a.dim == 1 && a.type == Type::Bump && a.number == 5) {
    const auto shock = bump::locate_shock(p.at("q0"), p.at("h_out"));
    double worst = 0.0, wx = 0.0;
    std::size_t spread = 0;
    const double jump = shock.h2 - shock.h1;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      const double d = std::abs(analytic.x[i] - shock.x_shock);
      // Smeared cells: off the piecewise analytic profile by > 10% of the jump.
      if (d <= 10.0 * dx && std::abs(numeric.h[i] - analytic.h[i]) > 0.1 * jump) ++spread;
      if (d < 2.0 * dx || analytic.h[i] < kDryThreshold) continue;
      if (std::abs(report.relative[i]) > std::abs(worst)) {
        worst = report.relative[i];
        wx = analytic.x[i];
      }
    }
    out.push_back({"|relative| <= 3% outside the 4 cells around the shock", std::abs(worst) <= 3.0,
                   "max=" + fmt(worst) + "% at x=" + fmt(wx)});
    out.push_back({"shock spread <= 4 cells", spread <= 4, "intermediate cells=" + std::to_string(spread)});
    return out;
  }

  if (a.dim == 1 && a.type == Type::MacDonald && a.number == 9) {
    const double xs = 200.0 / 3.0;
    double worst = 0.0, wx = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (std::abs(analytic.x[i] - xs) <= 0.5 * dx) continue;
      if (std::abs(report.relative[i]) > std::abs(worst)) {
        worst = report.relative[i];
        wx = analytic.x[i];
      }
    }
    out.push_back({"|relative| <= 1% outside the shock cell", std::abs(worst) <= 1.0,
                   "max=" + fmt(worst) + "% at x=" + fmt(wx)});
    return out;
  }

  if (a.dim == 1 && a.type == Type::DamBreak && a.number == 2) {
    auto spec = dambreak::make_spec(dambreak::DamBreakKind::Ritter);
    spec.h_l = p.at("h_l");
    spec.x0 = p.at("x0");
    const double xb = dambreak::ritter_waves(spec, time).x_b;
    const double front = wet_front(numeric);
    bool negative = false, gap = false;
    bool seen_dry = false;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      negative = negative || numeric.h[i] < 0.0;
      if (analytic.x[i] < spec.x0) continue;
      if (!wet(numeric.h[i])) seen_dry = true;
      else if (seen_dry) gap = true;
    }
    out.push_back({"front not ahead of x_B", front <= xb, "front=" + fmt(front) + " x_B=" + fmt(xb)});
    out.push_back({"front within 0.4 m of x_B", xb - front <= 0.4, "lag=" + fmt(xb - front)});
    out.push_back({"no negative heights", !negative, ""});
    out.push_back({"no wet cells beyond the front", !gap && report.spurious_wet == 0,
                   "spurious=" + std::to_string(report.spurious_wet)});
    return out;
  }

  if (a.dim == 1 && a.type == Type::DamBreak && a.number == 3) {
    // Past x_T the analytic height is the uncorrected h_co, which diverges
    // at the front; only the corrected region carries a reference height.
    auto spec = dambreak::make_spec(dambreak::DamBreakKind::Dressler);
    spec.h_l = p.at("h_l");
    spec.x0 = p.at("x0");
    spec.chezy = p.at("chezy");
    const auto w = dambreak::dressler_waves(spec, time);
    double err = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < numeric.size() && analytic.x[i] <= w.x_t; ++i) {
      err += std::abs(numeric.h[i] - analytic.h[i]);
      mass += analytic.h[i];
    }
    const double rel = mass > 0.0 ? err / mass : 0.0;
    const double front = wet_front(numeric);
    out.push_back({"l1_relative <= 5% up to x_T", rel <= 0.05, "l1_relative=" + fmt(rel) + " x_T=" + fmt(w.x_t)});
    out.push_back({"front not ahead of x_B", front <= w.x_b, "front=" + fmt(front) + " x_B=" + fmt(w.x_b)});
    return out;
  }

  out.push_back(default_band(report));
  return out;
}

}  // namespace swb::bench

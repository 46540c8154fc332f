// Acceptance gate: one PASS/FAIL line per criterion. Tolerances are fixed
// here and not configurable. Optional argument: path to the swbench binary,
// used by the determinism check (falls back to the library otherwise).
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "swbench/ascii.hpp"
#include "swbench/bench.hpp"
#include "swbench/bump.hpp"
#include "swbench/catalog.hpp"
#include "swbench/core/constants.hpp"
#include "swbench/dambreak.hpp"
#include "swbench/fvsolver.hpp"
#include "swbench/macdonald.hpp"
#include "swbench/oscillations.hpp"
#include "swbench/pseudo2d.hpp"

using namespace swb;
using catalog::Type;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // failures first, then context

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

int report(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(dt < budget_s, "runtime " + num(dt) + " s < " + num(budget_s) + " s");
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << '\n';
  for (const auto& n : o.notes) std::cout << "    " << n << '\n';
  return o.pass ? 0 : 1;
}

catalog::Request request(int dim, Type t, int n, std::size_t cells) {
  catalog::Request r;
  r.address = {dim, t, n};
  r.cells = cells;
  return r;
}

// --- Gauss-Legendre rule, computed here rather than taken from the library.
struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_legendre(int n) {
  GaussRule g;
  for (int i = 1; i <= n; ++i) {
    double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.x.push_back(x);
    g.w.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return g;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels, const GaussRule& g) {
  double s = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h;
    for (std::size_t k = 0; k < g.x.size(); ++k) s += g.w[k] * f(c + 0.5 * h * g.x[k]);
  }
  return 0.5 * h * s;
}

// --- criterion 1

void bump_checks(Outcome& o) {
  const Grid1D grid(bump::kLength, 1000);
  auto head_spread = [](const FlowField1D& f, double lo, double hi) {
    double ref = std::numeric_limits<double>::quiet_NaN(), worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.x[i] < lo || f.x[i] > hi || f.h[i] <= 0.0) continue;
      const double head = bump::bernoulli_head(f.h[i], f.z[i], f.q[i]);
      if (std::isnan(ref)) ref = head;
      worst = std::max(worst, std::abs(head - ref) / std::abs(ref));
    }
    return worst;
  };
  const auto lake1 = bump::lake_at_rest(grid, 0.5);
  const auto lake2 = bump::lake_at_rest(grid, 0.1);
  const auto sub = bump::subcritical(grid);
  const auto noshock = bump::transcritical_noshock(grid);
  const auto shock = bump::transcritical_shock(grid);
  const double spreads[] = {
      head_spread(lake1, 0.0, 25.0),
      head_spread(lake2, 0.0, 9.0),
      head_spread(lake2, 11.0, 25.0),
      head_spread(sub, 0.0, 25.0),
      head_spread(noshock, 0.0, 25.0),
      head_spread(shock.field, 0.0, shock.shock.x_shock - 1e-9),
      head_spread(shock.field, shock.shock.x_shock + 1e-9, 25.0),
  };
  double worst = 0.0;
  for (double s : spreads) worst = std::max(worst, s);
  o.check(worst < 1e-10, "bump Bernoulli head spread per smooth branch " + num(worst) + " < 1e-10");
  const auto& sh = shock.shock;
  const double rh = std::abs(bump::rankine_hugoniot_residual(0.18, sh.h1, sh.h2));
  o.check(rh < 1e-10, "Rankine-Hugoniot residual " + num(rh) + " < 1e-10");
  o.check(sh.x_shock > 10.0 && sh.x_shock < 25.0, "x_shock = " + num(sh.x_shock) + " in (10, 25)");
}

void macdonald_checks(Outcome& o) {
  const GaussRule gl = gauss_legendre(10);
  const std::size_t base = 50;
  double worst_order = std::numeric_limits<double>::infinity();
  std::string worst_case;
  for (int n = 1; n <= 18; ++n) {
    // Same specs as the catalog entries.
    const auto r = request(1, Type::MacDonald, n, base);
    const auto p = catalog::resolved_params(r);
    static const macdonald::McCase ids[] = {
        macdonald::McCase::LongSub,          macdonald::McCase::LongSub,        macdonald::McCase::LongSuper,
        macdonald::McCase::LongSuper,        macdonald::McCase::LongSubSuper,   macdonald::McCase::LongSubSuper,
        macdonald::McCase::LongSuperSub,     macdonald::McCase::LongSuperSub,   macdonald::McCase::ShortSmoothShock,
        macdonald::McCase::ShortSuper,       macdonald::McCase::ShortSubSuper,  macdonald::McCase::Periodic,
        macdonald::McCase::RainSub,          macdonald::McCase::RainSub,        macdonald::McCase::RainSuper,
        macdonald::McCase::RainSuper,        macdonald::McCase::DiffusionSub,   macdonald::McCase::DiffusionSuper,
    };
    const auto fc = p.count("f") ? macdonald::FrictionChoice::DarcyWeisbach : macdonald::FrictionChoice::Manning;
    const auto spec = macdonald::make_case(ids[n - 1], fc);

    // Reference bed from the steady ODE, integrated with composite Gauss-Legendre.
    std::vector<double> cuts{0.0};
    for (double b : macdonald::breakpoints(spec.profile)) cuts.push_back(b);
    cuts.push_back(spec.length);
    const Grid1D grid(spec.length, base);
    std::vector<double> zref(base);
    for (std::size_t i = 0; i < base; ++i) {
      const double x = grid.center(i);
      double z = 0.0;
      for (std::size_t k = 0; k + 1 < cuts.size() && cuts[k] < x; ++k) {
        const double a = cuts[k], b = std::min(cuts[k + 1], x);
        z += integrate([&](double s) { return macdonald::topography_slope(spec, s, macdonald::hex_profile(spec, s)); },
                       a, b, 64, gl);
      }
      zref[i] = z;
    }
    double res[3];
    for (int k = 0; k < 3; ++k) {
      const std::size_t factor = std::size_t{2} << k;
      const auto topo = macdonald::synthesize_topography(spec, base * factor);
      const double z0 = topo(0.0);
      double worst = 0.0;
      for (std::size_t i = 0; i < base; ++i) worst = std::max(worst, std::abs(topo(grid.center(i)) - z0 - zref[i]));
      res[k] = worst;
    }
    const double order = std::min(std::log2(res[0] / res[1]), std::log2(res[1] / res[2]));
    if (order < worst_order) {
      worst_order = order;
      worst_case = "macdonald " + std::to_string(n) + " (residuals " + num(res[0]) + ", " + num(res[1]) + ", " +
                   num(res[2]) + ")";
    }
  }
  o.check(worst_order >= 3.5, "MacDonald steady-ODE residual order over fine factors 2/4/8: worst " +
                                  num(worst_order) + " >= 3.5 at " + worst_case);
}

void pseudo2d_checks(Outcome& o) {
  using pseudo2d::Pseudo2DCase;
  for (auto id : {Pseudo2DCase::ShortSub, Pseudo2DCase::ShortSuper, Pseudo2DCase::ShortSmooth, Pseudo2DCase::ShortJump,
                  Pseudo2DCase::LongSub, Pseudo2DCase::LongSmoothJump}) {
    const auto s = pseudo2d::make_case(id);
    const std::string name = "pseudo2d " + std::to_string(static_cast<int>(id) + 1);
    if (s.table_h_in) {
      const double h = pseudo2d::mean_height(s, 0.0).h;
      o.check(std::abs(h - *s.table_h_in) <= 1e-6, name + " h_in " + num(h) + " vs table " + num(*s.table_h_in));
    }
    if (s.table_h_out) {
      const double h = pseudo2d::mean_height(s, s.length).h;
      o.check(std::abs(h - *s.table_h_out) <= 1e-6, name + " h_out " + num(h) + " vs table " + num(*s.table_h_out));
    }
  }
}

void dambreak_checks(Outcome& o) {
  using dambreak::DamBreakKind;
  const auto st = dambreak::make_spec(DamBreakKind::Stoker);
  const double res = std::abs(dambreak::stoker_polynomial(st, dambreak::stoker_celerity(st)));
  o.check(res < 1e-12, "Stoker c_m polynomial residual " + num(res) + " < 1e-12");

  const auto ri = dambreak::make_spec(DamBreakKind::Ritter);
  double ss = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double xi = -0.3 + 0.8 * k / 200.0;  // x - x0 = xi t
    const auto a = dambreak::ritter(ri, 1.0, ri.x0 + xi);
    for (double t : {0.5, 2.0, 4.0}) {
      const auto b = dambreak::ritter(ri, t, ri.x0 + xi * t);
      ss = std::max({ss, std::abs(a.h - b.h), std::abs(a.u - b.u)});
    }
  }
  o.check(ss <= 1e-12, "Ritter self-similarity deviation " + num(ss) + " <= 1e-12");

  auto dr = dambreak::make_spec(DamBreakKind::Dressler);
  dr.chezy = std::numeric_limits<double>::infinity();
  double dd = 0.0;
  for (int k = 0; k <= 400; ++k) {
    const double x = dr.length * k / 400.0;
    const auto a = dambreak::dressler(dr, 40.0, x), b = dambreak::ritter(dr, 40.0, x);
    dd = std::max({dd, std::abs(a.h - b.h), std::abs(a.u - b.u)});
  }
  o.check(dd <= 1e-12, "Dressler with C^-2 = 0 vs Ritter " + num(dd) + " <= 1e-12");
}

// Volume of a 2D solution by rays from a centre inside the wet disk:
// bisection for the shoreline, Gauss-Legendre in r, trapezoid in theta.
double disk_volume(const std::function<double(double, double)>& h, double cx, double cy, double rmax) {
  const GaussRule gl = gauss_legendre(12);
  const int rays = 256;
  double v = 0.0;
  for (int k = 0; k < rays; ++k) {
    const double th = 2.0 * M_PI * k / rays, c = std::cos(th), s = std::sin(th);
    double lo = 0.0, hi = rmax;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (h(cx + mid * c, cy + mid * s) > 0.0 ? lo : hi) = mid;
    }
    v += integrate([&](double r) { return h(cx + r * c, cy + r * s) * r; }, 0.0, lo, 4, gl);
  }
  return v * 2.0 * M_PI / rays;
}

void oscillation_checks(Outcome& o) {
  namespace os = swb::oscillations;
  const auto t1 = os::thacker1d_spec();
  const double period = 2.0 * M_PI / os::thacker1d_omega(t1);
  const Grid1D fine(t1.length, 200000);
  const double v_exact = 4.0 / 3.0 * t1.h0 * t1.a;
  double worst = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const auto f = os::thacker1d_field(t1, fine, period * k / 20.0);
    double v = 0.0;
    for (double h : f.h) v += h * fine.dx();
    worst = std::max(worst, std::abs(v - v_exact) / v_exact);
  }
  o.check(worst <= 1e-6, "Thacker 1D volume drift over one period " + num(worst) + " <= 1e-6");

  const auto rad = os::radial_spec();
  const auto pl = os::planar_spec();
  const double rp = 2.0 * M_PI / os::radial_omega(rad), pp = 2.0 * M_PI / os::planar_omega(pl);
  double wr = 0.0, wp = 0.0, vr0 = 0.0, vp0 = 0.0;
  for (int k = 0; k <= 8; ++k) {
    const double tr = rp * k / 8.0, tp = pp * k / 8.0;
    const double vr = disk_volume([&](double x, double y) { return os::thacker_radial(rad, tr, x, y).h; },
                                  0.5 * rad.length, 0.5 * rad.length, 0.5 * rad.length);
    const double cx = 0.5 * pl.length + pl.eta * std::cos(os::planar_omega(pl) * tp);
    const double cy = 0.5 * pl.length + pl.eta * std::sin(os::planar_omega(pl) * tp);
    const double vp = disk_volume([&](double x, double y) { return os::thacker_planar(pl, tp, x, y).h; }, cx, cy,
                                  0.5 * pl.length);
    if (k == 0) {
      vr0 = vr;
      vp0 = vp;
    }
    wr = std::max(wr, std::abs(vr - vr0) / vr0);
    wp = std::max(wp, std::abs(vp - vp0) / vp0);
  }
  o.check(wr <= 1e-6, "Thacker radial volume drift over one period " + num(wr) + " <= 1e-6");
  o.check(wp <= 1e-6, "Thacker planar volume drift over one period " + num(wp) + " <= 1e-6");

  const auto sp = os::sampson_spec();
  bool ok = true;
  double margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 1000; ++k) {
    const double t = sp.final_time * k / 999.0;
    const double bound = sp.B * std::exp(-0.5 * sp.tau * t);
    for (double x : {0.3 * sp.length, 0.5 * sp.length, 0.7 * sp.length}) {
      const auto s = os::sampson(sp, t, x);
      if (s.h <= 0.0) continue;
      ok = ok && std::abs(s.u) <= bound * (1.0 + 1e-12);
      margin = std::min(margin, bound - std::abs(s.u));
    }
  }
  o.check(ok, "Sampson |u| <= B exp(-tau t / 2) at 1000 times (min margin " + num(margin) + ")");
}

// --- criterion 2

Outcome lakes() {
  Outcome o;
  for (int n : {1, 2}) {
    const auto prob = catalog::solver_problem(request(1, Type::Bump, n, 500), 100.0);
    const double surface = n == 1 ? 0.5 : 0.1;
    fv::Solver solver(prob.grid, prob.config, prob.initial);
    const auto r = solver.run();
    double dev = 0.0, qm = 0.0;
    for (std::size_t i = 0; i < r.state.h.size(); ++i) {
      if (r.state.h[i] > kDryThreshold) dev = std::max(dev, std::abs(r.state.h[i] + r.state.z[i] - surface));
      qm = std::max(qm, std::abs(r.state.q[i]));
    }
    const std::string name = n == 1 ? "immersed" : "emerged";
    o.check(dev < 1e-12, name + " lake |h+z - " + num(surface) + "| max " + num(dev) + " < 1e-12");
    o.check(qm < 1e-12, name + " lake |q| max " + num(qm) + " < 1e-12");
  }
  return o;
}

Outcome run_bands(const catalog::Request& r, double tend, int order) {
  Outcome o;
  bench::SolverOptions opt;
  opt.final_time = tend;
  opt.order = order;
  const auto run = bench::run_case(r, opt);
  const auto rep = bench::compare(run.numeric, run.problem.reference);
  for (const auto& b : bench::check_bands(r, tend, run.numeric, run.problem.reference, rep)) {
    o.check(b.pass, b.name + (b.detail.empty() ? "" : " [" + b.detail + "]"));
  }
  o.notes.push_back("steps " + std::to_string(run.result.steps) + ", clamped " + std::to_string(run.result.clamped));
  return o;
}

Outcome convergence_orders() {
  Outcome o;
  // T = 500 s: at 100 s the start-up transient still dominates the error.
  const auto r = request(1, Type::Bump, 3, 100);
  for (int order : {1, 2}) {
    bench::SolverOptions opt;
    opt.order = order;
    opt.final_time = 500.0;
    const auto s = bench::convergence(r, opt, {100, 200, 400, 800});
    const double need = order == 1 ? 0.8 : 1.5;
    std::string pts;
    for (const auto& p : s.points) pts += " " + std::to_string(p.cells) + ":" + num(p.error);
    o.check(s.order >= need, "order-" + std::to_string(order) + " scheme L1(h) order " + num(s.order) + " >= " +
                                 num(need) + " (" + pts.substr(1) + ")");
  }
  return o;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 65536> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  std::size_t checked = 0, differing = 0, failed = 0;
  for (const auto& e : catalog::entries()) {
    const std::size_t cells = e.address.dim == 2 ? 100 : 500;
    std::string a, b;
    if (!cli.empty()) {
      const std::string cmd = cli + " generate " + std::to_string(e.address.dim) + " " +
                              catalog::to_string(e.address.type) + " " + std::to_string(e.address.number) +
                              " --cells " + std::to_string(cells);
      int s1 = 0, s2 = 0;
      a = capture(cmd, s1);
      b = capture(cmd, s2);
      if (s1 != 0 || s2 != 0 || a.empty()) ++failed;
    } else {
      for (auto* out : {&a, &b}) {
        const auto g = catalog::generate(request(e.address.dim, e.address.type, e.address.number, cells));
        std::ostringstream os;
        if (g.two_d) ascii::write(os, g.header, g.field2d);
        else ascii::write(os, g.header, g.field1d);
        *out = os.str();
      }
    }
    ++checked;
    if (a != b) ++differing;
  }
  o.check(failed == 0, std::to_string(failed) + " generate invocations failed");
  o.check(differing == 0, std::to_string(differing) + " of " + std::to_string(checked) +
                              " addresses differ between two runs" + (cli.empty() ? " (library)" : " (CLI)"));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failures = 0;
  failures += report(1, "catalog self-consistency", 10.0, [] {
    Outcome o;
    bump_checks(o);
    macdonald_checks(o);
    pseudo2d_checks(o);
    dambreak_checks(o);
    oscillation_checks(o);
    return o;
  });
  failures += report(2, "lakes at rest stay at rest (500 cells, 100 s)", 10.0, lakes);
  failures += report(3, "transcritical bump with shock (500 cells, 100 s, order 2)", 60.0,
                     [] { return run_bands(request(1, Type::Bump, 5, 500), 100.0, 2); });
  failures += report(4, "MacDonald short channel, smooth transition and shock (500 cells, 150 s)", 60.0,
                     [] { return run_bands(request(1, Type::MacDonald, 9, 500), 150.0, 2); });
  failures += report(5, "Ritter dam break front (500 cells, 6 s, order 2)", 30.0,
                     [] { return run_bands(request(1, Type::DamBreak, 2, 500), 6.0, 2); });
  failures += report(6, "convergence on the subcritical bump (100/200/400/800 cells)", 300.0, convergence_orders);
  failures += report(7, "generate is deterministic for every address", 120.0, [&] { return determinism(cli); });
  std::cout << (failures ? std::to_string(failures) + " criteria FAILED" : std::string("all criteria PASS")) << '\n';
  return failures ? 1 : 0;
}

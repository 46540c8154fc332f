#include "swbench/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swbench/ascii.hpp"
#include "swbench/bump.hpp"
#include "swbench/core/errors.hpp"
#include "swbench/dambreak.hpp"
#include "swbench/macdonald.hpp"
#include "swbench/oscillations.hpp"
#include "swbench/pseudo2d.hpp"

namespace swb::catalog {

namespace {

constexpr double kBumpTime = 100.0;

std::vector<Entry> build_entries() {
  std::vector<Entry> e;
  auto add = [&](int dim, Type t, std::string key, std::string title, bool transient, bool solvable, double time) {
    e.push_back({{dim, t, static_cast<int>(std::count_if(e.begin(), e.end(), [&](const Entry& x) {
                                              return x.address.dim == dim && x.address.type == t;
                                            })) + 1},
                 std::move(key), std::move(title), transient, solvable, time});
  };
  add(1, Type::Bump, "lake_immersed", "Lake at rest with an immersed bump", false, true, kBumpTime);
  add(1, Type::Bump, "lake_emerged", "Lake at rest with an emerged bump", false, true, kBumpTime);
  add(1, Type::Bump, "subcritical", "Subcritical flow over a bump", false, true, kBumpTime);
  add(1, Type::Bump, "transcritical_noshock", "Transcritical flow over a bump without shock", false, true, kBumpTime);
  add(1, Type::Bump, "transcritical_shock", "Transcritical flow over a bump with shock", false, true, kBumpTime);

  add(1, Type::MacDonald, "long_sub_manning", "Long channel, subcritical, Manning", false, true, 1500.0);
  add(1, Type::MacDonald, "long_sub_dw", "Long channel, subcritical, Darcy-Weisbach", false, true, 1500.0);
  add(1, Type::MacDonald, "long_super_manning", "Long channel, supercritical, Manning", false, true, 1500.0);
  add(1, Type::MacDonald, "long_super_dw", "Long channel, supercritical, Darcy-Weisbach", false, true, 1500.0);
  add(1, Type::MacDonald, "long_subsuper_manning", "Long channel, sub- to supercritical, Manning", false, true, 1500.0);
  add(1, Type::MacDonald, "long_subsuper_dw", "Long channel, sub- to supercritical, Darcy-Weisbach", false, true, 1500.0);
  add(1, Type::MacDonald, "long_supersub_manning", "Long channel, super- to subcritical, Manning", false, true, 1500.0);
  add(1, Type::MacDonald, "long_supersub_dw", "Long channel, super- to subcritical, Darcy-Weisbach", false, true, 1500.0);
  add(1, Type::MacDonald, "short_smooth_shock", "Short channel, smooth transition and shock", false, true, 150.0);
  add(1, Type::MacDonald, "short_super", "Short channel, supercritical", false, true, 150.0);
  add(1, Type::MacDonald, "short_subsuper", "Short channel, sub- to supercritical", false, true, 150.0);
  add(1, Type::MacDonald, "periodic", "Periodic bed, subcritical", false, true, 5000.0);
  add(1, Type::MacDonald, "rain_sub_manning", "Rain, subcritical, Manning", false, true, 1500.0);
  add(1, Type::MacDonald, "rain_sub_dw", "Rain, subcritical, Darcy-Weisbach", false, true, 1500.0);
  add(1, Type::MacDonald, "rain_super_manning", "Rain from t=1500 s, supercritical, Manning", false, true, 3000.0);
  add(1, Type::MacDonald, "rain_super_dw", "Rain from t=1500 s, supercritical, Darcy-Weisbach", false, true, 3000.0);
  add(1, Type::MacDonald, "diffusion_sub", "Diffusion, subcritical", false, true, 1500.0);
  add(1, Type::MacDonald, "diffusion_super", "Diffusion, supercritical", false, true, 1500.0);

  const char* p2d[][2] = {
      {"short_sub", "short channel, subcritical"},
      {"short_super", "short channel, supercritical"},
      {"short_smooth", "short channel, smooth transition"},
      {"short_jump", "short channel, hydraulic jump"},
      {"long_sub", "long channel, subcritical"},
      {"long_smooth_jump", "long channel, smooth transition and jump"},
  };
  for (int dim = 1; dim <= 2; ++dim) {
    for (const auto& c : p2d) {
      add(dim, Type::Pseudo2D, c[0], std::string("Pseudo-2D, ") + c[1] + (dim == 1 ? " (mean height)" : " (raster)"),
          false, false, 0.0);
    }
  }

  add(1, Type::DamBreak, "stoker", "Dam break on a wet bed", true, true, 6.0);
  add(1, Type::DamBreak, "ritter", "Dam break on a dry bed", true, true, 6.0);
  add(1, Type::DamBreak, "dressler", "Dam break on a dry bed with Chezy friction", true, true, 40.0);

  add(1, Type::Oscillation, "thacker1d", "Planar surface in a parabolic bowl", true, true,
      oscillations::thacker1d_spec().final_time);
  add(1, Type::Oscillation, "sampson", "Oscillations with linear friction", true, true,
      oscillations::sampson_spec().final_time);
  add(2, Type::Oscillation, "radial", "Radially symmetric paraboloid", true, false,
      oscillations::radial_spec().final_time);
  add(2, Type::Oscillation, "planar", "Planar surface in a paraboloid", true, false,
      oscillations::planar_spec().final_time);
  return e;
}

bump::BumpCase bump_case(int n) { return static_cast<bump::BumpCase>(n - 1); }

struct McChoice {
  macdonald::McCase id;
  macdonald::FrictionChoice friction;
};

McChoice mc_choice(int n) {
  using macdonald::FrictionChoice;
  using macdonald::McCase;
  constexpr FrictionChoice M = FrictionChoice::Manning, D = FrictionChoice::DarcyWeisbach;
  static const McChoice table[] = {
      {McCase::LongSub, M},          {McCase::LongSub, D},          {McCase::LongSuper, M},
      {McCase::LongSuper, D},        {McCase::LongSubSuper, M},     {McCase::LongSubSuper, D},
      {McCase::LongSuperSub, M},     {McCase::LongSuperSub, D},     {McCase::ShortSmoothShock, M},
      {McCase::ShortSuper, M},       {McCase::ShortSubSuper, M},    {McCase::Periodic, M},
      {McCase::RainSub, M},          {McCase::RainSub, D},          {McCase::RainSuper, M},
      {McCase::RainSuper, D},        {McCase::DiffusionSub, M},     {McCase::DiffusionSuper, M},
  };
  return table[n - 1];
}

dambreak::DamBreakKind dam_kind(int n) { return static_cast<dambreak::DamBreakKind>(n - 1); }

// --- parameters <-> specs

Params bump_params(const bump::BumpCaseSpec& s) {
  switch (s.tag) {
    case bump::BumpCase::LakeImmersed:
    case bump::BumpCase::LakeEmerged:
      return {{"surface", s.initial_surface}};
    default:
      return {{"q0", s.q0}, {"h_out", s.h_out}};
  }
}

bump::BumpCaseSpec bump_spec(int n, const Params& p) {
  auto s = bump::default_spec(bump_case(n));
  if (s.tag == bump::BumpCase::LakeImmersed || s.tag == bump::BumpCase::LakeEmerged) {
    s.initial_surface = p.at("surface");
    return s;
  }
  s.q0 = p.at("q0");
  s.h_out = p.at("h_out");
  s.initial_surface = s.h_out;
  s.left.q = s.q0;
  s.right.h = s.h_out;
  return s;
}

Params friction_params(const FrictionLaw& law) {
  if (auto m = std::get_if<Manning>(&law)) return {{"n", m->n}};
  if (auto d = std::get_if<DarcyWeisbach>(&law)) return {{"f", d->f}};
  if (auto lt = std::get_if<LaminarTurbulent>(&law)) {
    return {{"k_l", lt->k_l}, {"k_t", lt->k_t}, {"mu_v", lt->mu_v}, {"mu_h", lt->mu_h}};
  }
  return {};
}

Params mc_params(const macdonald::MacDonaldCaseSpec& s) {
  Params p = friction_params(s.friction);
  p["q0"] = s.q0;
  if (s.rain != 0.0) p["rain"] = s.rain;
  if (s.rain_start != 0.0) p["rain_start"] = s.rain_start;
  return p;
}

macdonald::MacDonaldCaseSpec mc_spec(int n, const Params& p) {
  const auto c = mc_choice(n);
  auto s = macdonald::make_case(c.id, c.friction);
  s.q0 = p.at("q0");
  if (auto m = std::get_if<Manning>(&s.friction)) m->n = p.at("n");
  if (auto d = std::get_if<DarcyWeisbach>(&s.friction)) d->f = p.at("f");
  if (auto lt = std::get_if<LaminarTurbulent>(&s.friction)) {
    *lt = LaminarTurbulent{p.at("k_l"), p.at("k_t"), p.at("mu_v"), p.at("mu_h")};
  }
  if (p.count("rain")) s.rain = p.at("rain");
  if (p.count("rain_start")) s.rain_start = p.at("rain_start");
  validate(s.friction);
  if (!(s.q0 > 0.0)) throw DomainError("q0 must be > 0");
  if (!(s.rain >= 0.0) || !(s.rain_start >= 0.0)) throw DomainError("rain parameters must be >= 0");
  return s;
}

pseudo2d::Pseudo2DCaseSpec p2d_spec(int n, const Params& p) {
  auto s = pseudo2d::make_case(static_cast<pseudo2d::Pseudo2DCase>(n - 1));
  s.discharge = p.at("discharge");
  s.manning = p.at("manning");
  if (!(s.discharge > 0.0) || !(s.manning >= 0.0)) throw DomainError("discharge must be > 0 and manning >= 0");
  return s;
}

Params dam_params(dambreak::DamBreakKind k, const dambreak::DamBreakSpec& s) {
  Params p{{"h_l", s.h_l}, {"x0", s.x0}};
  if (k == dambreak::DamBreakKind::Stoker) p["h_r"] = s.h_r;
  if (k == dambreak::DamBreakKind::Dressler) p["chezy"] = s.chezy;
  return p;
}

dambreak::DamBreakSpec dam_spec(int n, const Params& p) {
  auto s = dambreak::make_spec(dam_kind(n));
  s.h_l = p.at("h_l");
  s.x0 = p.at("x0");
  if (p.count("h_r")) s.h_r = p.at("h_r");
  if (p.count("chezy")) s.chezy = p.at("chezy");
  if (!(s.x0 > 0.0 && s.x0 < s.length)) throw DomainError("x0 must lie inside the domain");
  if (!(s.h_l > 0.0)) throw DomainError("h_l must be > 0");
  return s;
}

Params thacker_params(int dim, int n, const oscillations::ThackerSpec& s) {
  Params p{{"a", s.a}, {"h0", s.h0}};
  if (dim == 2 && n == 1) p["r0"] = s.r0;
  if (dim == 2 && n == 2) p["eta"] = s.eta;
  return p;
}

oscillations::ThackerSpec thacker_spec(int dim, int n, const Params& p) {
  auto s = dim == 1 ? oscillations::thacker1d_spec() : (n == 1 ? oscillations::radial_spec() : oscillations::planar_spec());
  s.a = p.at("a");
  s.h0 = p.at("h0");
  if (p.count("r0")) s.r0 = p.at("r0");
  if (p.count("eta")) s.eta = p.at("eta");
  return s;
}

oscillations::SampsonSpec sampson_spec(const Params& p) {
  auto s = oscillations::sampson_spec();
  s.a = p.at("a");
  s.h0 = p.at("h0");
  s.tau = p.at("tau");
  s.B = p.at("B");
  return s;
}

const Entry& require(const Address& a) {
  const Entry* e = find(a);
  if (!e) throw UsageError("unknown case " + to_string(a));
  return *e;
}

Params merged(const Request& r, std::vector<std::string>* changed) {
  Params p = default_params(r.address);
  for (const auto& [k, v] : r.overrides) {
    auto it = p.find(k);
    if (it == p.end()) {
      std::string keys;
      for (const auto& kv : p) keys += (keys.empty() ? "" : ", ") + kv.first;
      throw UsageError("unknown parameter '" + k + "' for " + to_string(r.address) + " (valid: " + keys + ")");
    }
    if (!std::isfinite(v)) throw UsageError("parameter '" + k + "' must be finite");
    if (changed && v != it->second) changed->push_back(k);
    it->second = v;
  }
  return p;
}

std::vector<std::string> header_for(const Request& r, const Entry& e, const Params& p,
                                    const std::vector<std::string>& changed) {
  std::vector<std::string> h;
  h.push_back("case: " + to_string(e.address) + " " + e.key);
  h.push_back("title: " + e.title);
  for (const auto& [k, v] : p) h.push_back("param " + k + "=" + ascii::format_number(v));
  if (!changed.empty()) {
    std::string s = "NONSTANDARD: parameters overridden:";
    for (const auto& k : changed) s += " " + k;
    h.push_back(s);
  }
  std::string cells = "cells: " + std::to_string(r.cells);
  if (e.address.dim == 2) cells += " x " + std::to_string(r.cells_y ? r.cells_y : r.cells);
  h.push_back(cells);
  return h;
}

void check_cells(const Request& r) {
  if (r.cells < 2) throw UsageError("need at least 2 cells");
  if (r.address.dim == 1 && r.cells_y != 0) throw UsageError("--cells-y only applies to 2D cases");
}

}  // namespace

std::string to_string(Type t) {
  switch (t) {
    case Type::Bump: return "bump";
    case Type::MacDonald: return "macdonald";
    case Type::Pseudo2D: return "pseudo2d";
    case Type::DamBreak: return "dambreak";
    case Type::Oscillation: return "oscillation";
  }
  return "?";
}

std::optional<Type> parse_type(std::string_view s) {
  for (Type t : {Type::Bump, Type::MacDonald, Type::Pseudo2D, Type::DamBreak, Type::Oscillation}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string to_string(const Address& a) {
  return std::to_string(a.dim) + "d " + to_string(a.type) + " " + std::to_string(a.number);
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_entries();
  return e;
}

const Entry* find(const Address& a) {
  for (const auto& e : entries()) {
    if (e.address.dim == a.dim && e.address.type == a.type && e.address.number == a.number) return &e;
  }
  return nullptr;
}

std::string listing() {
  std::ostringstream os;
  os << "dim type         no  name                    description\n";
  for (const auto& e : entries()) {
    std::string type = to_string(e.address.type);
    std::string num = std::to_string(e.address.number);
    os << e.address.dim << "   " << type << std::string(13 - type.size(), ' ') << num
       << std::string(4 - num.size(), ' ') << e.key << std::string(e.key.size() < 24 ? 24 - e.key.size() : 1, ' ')
       << e.title << (e.transient ? " [transient]" : "") << (e.solvable ? "" : " [analytic only]") << '\n';
  }
  return os.str();
}

Params default_params(const Address& a) {
  const Entry& e = require(a);
  const int n = e.address.number;
  switch (a.type) {
    case Type::Bump: return bump_params(bump::default_spec(bump_case(n)));
    case Type::MacDonald: {
      const auto c = mc_choice(n);
      return mc_params(macdonald::make_case(c.id, c.friction));
    }
    case Type::Pseudo2D: {
      auto s = pseudo2d::make_case(static_cast<pseudo2d::Pseudo2DCase>(n - 1));
      return {{"discharge", s.discharge}, {"manning", s.manning}};
    }
    case Type::DamBreak: return dam_params(dam_kind(n), dambreak::make_spec(dam_kind(n)));
    case Type::Oscillation:
      if (a.dim == 1 && n == 2) {
        auto s = oscillations::sampson_spec();
        return {{"a", s.a}, {"h0", s.h0}, {"tau", s.tau}, {"B", s.B}};
      }
      return thacker_params(a.dim, n,
                            a.dim == 1 ? oscillations::thacker1d_spec()
                                       : (n == 1 ? oscillations::radial_spec() : oscillations::planar_spec()));
  }
  return {};
}

Params resolved_params(const Request& r) { return merged(r, nullptr); }

Generated generate(const Request& r) {
  const Entry& e = require(r.address);
  check_cells(r);
  std::vector<std::string> changed;
  const Params p = merged(r, &changed);
  if (r.time && !e.transient) throw UsageError(to_string(e.address) + " is a steady solution; --t does not apply");
  Generated g;
  g.time = r.time.value_or(e.transient ? e.final_time : 0.0);
  if (e.transient && !(g.time >= 0.0)) throw UsageError("time must be >= 0");
  g.nonstandard = !changed.empty();
  g.header = header_for(r, e, p, changed);
  if (e.transient) g.header.push_back("time: " + ascii::format_number(g.time));
  g.two_d = r.address.dim == 2;
  const int n = e.address.number;
  const std::size_t ny = r.cells_y ? r.cells_y : r.cells;

  switch (r.address.type) {
    case Type::Bump: {
      const auto s = bump_spec(n, p);
      Grid1D grid(s.length, r.cells);
      switch (s.tag) {
        case bump::BumpCase::LakeImmersed:
        case bump::BumpCase::LakeEmerged: g.field1d = bump::lake_at_rest(grid, s.initial_surface); break;
        case bump::BumpCase::Subcritical: g.field1d = bump::subcritical(grid, s.q0, s.h_out); break;
        case bump::BumpCase::TranscriticalNoShock: g.field1d = bump::transcritical_noshock(grid, s.q0); break;
        case bump::BumpCase::TranscriticalShock: {
          auto sol = bump::transcritical_shock(grid, s.q0, s.h_out);
          g.field1d = std::move(sol.field);
          g.header.push_back("shock: x=" + ascii::format_number(sol.shock.x_shock));
          break;
        }
      }
      break;
    }
    case Type::MacDonald: {
      const auto s = mc_spec(n, p);
      g.field1d = macdonald::steady_solution(s, Grid1D(s.length, r.cells));
      break;
    }
    case Type::Pseudo2D: {
      const auto s = p2d_spec(n, p);
      if (g.two_d) {
        g.field2d = pseudo2d::raster(s, Grid2D(s.length, pseudo2d::domain_width(s), r.cells, ny));
      } else {
        g.field1d = pseudo2d::steady_solution(s, Grid1D(s.length, r.cells));
      }
      break;
    }
    case Type::DamBreak: {
      const auto s = dam_spec(n, p);
      g.field1d = dambreak::field(dam_kind(n), s, Grid1D(s.length, r.cells), g.time);
      break;
    }
    case Type::Oscillation: {
      if (r.address.dim == 1 && n == 2) {
        const auto s = sampson_spec(p);
        g.field1d = oscillations::sampson_field(s, Grid1D(s.length, r.cells), g.time);
      } else {
        const auto s = thacker_spec(r.address.dim, n, p);
        if (r.address.dim == 1) {
          g.field1d = oscillations::thacker1d_field(s, Grid1D(s.length, r.cells), g.time);
        } else {
          Grid2D grid(s.length, s.length, r.cells, ny);
          g.field2d = n == 1 ? oscillations::radial_field(s, grid, g.time) : oscillations::planar_field(s, grid, g.time);
        }
      }
      break;
    }
  }
  return g;
}

SolverProblem solver_problem(const Request& r, std::optional<double> final_time) {
  const Entry& e = require(r.address);
  if (!e.solvable) {
    throw UsageError(to_string(e.address) + " has no 1D solver set-up (the solver handles rectangular 1D channels only)");
  }
  check_cells(r);
  std::vector<std::string> changed;
  const Params p = merged(r, &changed);
  const double T = final_time.value_or(e.final_time);
  if (!(T >= 0.0)) throw UsageError("final time must be >= 0");
  if (r.time) throw UsageError("--t is for generate; use --tend for the solver end time");

  fv::SolverConfig cfg;
  cfg.final_time = T;
  FlowField1D init;
  FlowField1D ref;
  double length = 0.0;
  const int n = e.address.number;

  switch (r.address.type) {
    case Type::Bump: {
      const auto s = bump_spec(n, p);
      length = s.length;
      Grid1D grid(length, r.cells);
      Request steady = r;
      steady.time.reset();
      ref = generate(steady).field1d;
      init = ref;
      for (std::size_t i = 0; i < init.size(); ++i) {
        init.h[i] = std::max(s.initial_surface - init.z[i], 0.0);
        init.q[i] = init.u[i] = 0.0;
      }
      init.flush_dry();
      cfg.left = s.left;
      cfg.right = s.right;
      break;
    }
    case Type::MacDonald: {
      const auto s = mc_spec(n, p);
      length = s.length;
      Grid1D grid(length, r.cells);
      const auto topo = macdonald::synthesize_topography(s, r.cells * 5);
      ref = macdonald::steady_solution(s, grid, topo);
      init = macdonald::initial_state(s, ref, topo);
      cfg.friction = s.friction;
      cfg.left = macdonald::left_boundary(s);
      cfg.right = macdonald::right_boundary(s);
      if (s.rain != 0.0) {
        const double rain = s.rain, start = s.rain_start;
        cfg.rain = [rain, start](double t) { return t >= start ? rain : 0.0; };
      }
      if (const auto* lt = std::get_if<LaminarTurbulent>(&s.friction); lt && s.diffusion) {
        cfg.viscosity = 4.0 * lt->mu_h;
      }
      break;
    }
    case Type::DamBreak: {
      const auto s = dam_spec(n, p);
      length = s.length;
      Grid1D grid(length, r.cells);
      init = FlowField1D(grid);
      for (std::size_t i = 0; i < grid.size(); ++i) init.h[i] = grid.center(i) < s.x0 ? s.h_l : s.h_r;
      init.flush_dry();
      ref = dambreak::field(dam_kind(n), s, grid, T);
      if (std::isfinite(s.chezy)) cfg.friction = Chezy{s.chezy};
      cfg.left = cfg.right = BoundaryCondition::free();
      break;
    }
    case Type::Oscillation: {
      cfg.left = cfg.right = BoundaryCondition::wall();
      if (n == 2) {
        const auto s = sampson_spec(p);
        length = s.length;
        Grid1D grid(length, r.cells);
        init = oscillations::sampson_field(s, grid, 0.0);
        ref = oscillations::sampson_field(s, grid, T);
        cfg.friction = LinearFriction{s.tau};
      } else {
        const auto s = thacker_spec(1, n, p);
        length = s.length;
        Grid1D grid(length, r.cells);
        init = oscillations::thacker1d_field(s, grid, 0.0);
        ref = oscillations::thacker1d_field(s, grid, T);
      }
      break;
    }
    case Type::Pseudo2D: break;  // rejected above
  }

  SolverProblem sp{Grid1D(length, r.cells), std::move(cfg), {}, std::move(ref), header_for(r, e, p, changed)};
  sp.initial.h = init.h;
  sp.initial.q = init.q;
  sp.initial.z = init.z;
  sp.header.push_back("solver: order " + std::to_string(sp.config.order) + ", cfl " +
                      ascii::format_number(sp.config.cfl) + ", left " + describe(sp.config.left) + ", right " +
                      describe(sp.config.right) + ", friction " + describe(sp.config.friction));
  sp.header.push_back("time: " + ascii::format_number(T));
  return sp;
}

}  // namespace swb::catalog

#include "swbench/fvsolver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/criticality.hpp"
#include "swbench/core/errors.hpp"
#include "swbench/core/numerics.hpp"

namespace swb::fv {

namespace {

constexpr std::size_t kGhosts = 2;

double velocity(double h, double q) { return h > kDryThreshold ? q / h : 0.0; }

// Left-boundary orientation: the outgoing invariant is u - 2c = r and the
// ghost carries discharge q. Returns a negative value when no height fits.
double height_for_discharge(double q, double r) {
  if (q == 0.0) return r < 0.0 ? r * r / (4.0 * kGravity) : -1.0;
  if (q > 0.0) {
    // q/h - 2 sqrt(g h) - r decreases on (0, inf): exactly one root.
    auto f = [&](double h) { return q / h - 2.0 * std::sqrt(kGravity * h) - r; };
    double lo = 1e-6, hi = 1.0;
    while (f(hi) > 0.0) hi *= 2.0;
    while (f(lo) < 0.0) lo *= 0.5;
    return solve_bracketed(f, lo, hi, 1e-14 * hi);
  }
  // Outflow through the left end: |q|/h + 2 sqrt(g h) = -r has two roots
  // around the critical height; keep the subcritical one.
  const double aq = -q;
  const double hc = critical_height(aq);
  auto f = [&](double h) { return aq / h + 2.0 * std::sqrt(kGravity * h) + r; };
  if (f(hc) > 0.0) return -1.0;
  double hi = 2.0 * hc;
  while (f(hi) < 0.0) hi *= 2.0;
  return solve_bracketed(f, hc, hi, 1e-14 * hi);
}

// Ghost for an imposed height in the left orientation (u - 2c conserved).
GhostState height_ghost(double hb, double h_in, double u_in) {
  if (hb <= kDryThreshold) return {0.0, 0.0};
  const double cb = std::sqrt(kGravity * hb);
  const double c_in = std::sqrt(kGravity * h_in);
  return {hb, u_in + 2.0 * (cb - c_in)};
}

GhostState left_oriented(const BoundaryCondition& bc, double h_in, double u_in) {
  using K = BoundaryCondition::Kind;
  switch (bc.kind) {
    case K::FreeOutflow:
    case K::Wall:
    case K::Periodic:
      return {h_in, u_in};
    case K::ImposedBoth:
      return {bc.h, velocity(bc.h, bc.q)};
    case K::ImposedHeight:
      return height_ghost(bc.h, h_in, u_in);
    case K::HeightWhileSubcritical: {
      // Supercritical flow leaving the domain takes no downstream data.
      const double c_in = std::sqrt(kGravity * h_in);
      if (h_in > kDryThreshold && -u_in > c_in) return {h_in, u_in};
      return height_ghost(bc.h, h_in, u_in);
    }
    case K::ImposedDischarge: {
      const double c_in = std::sqrt(kGravity * h_in);
      // Supercritical inflow has no outgoing characteristic: keep the height.
      if (h_in > kDryThreshold && u_in > c_in) return {h_in, velocity(h_in, bc.q)};
      const double h = height_for_discharge(bc.q, u_in - 2.0 * c_in);
      if (h <= kDryThreshold) return {h_in, velocity(h_in, bc.q)};
      return {h, bc.q / h};
    }
  }
  return {h_in, u_in};
}

}  // namespace

GhostState boundary_ghost(const BoundaryCondition& bc, double h_in, double u_in, bool left) {
  if (left) return left_oriented(bc, h_in, u_in);
  // Mirror the right end onto the left orientation.
  BoundaryCondition m = bc;
  m.q = -bc.q;
  GhostState g = left_oriented(m, h_in, -u_in);
  return {g.h, -g.u};
}

void validate(const SolverConfig& cfg) {
  if (cfg.order != 1 && cfg.order != 2) throw DomainError("solver order must be 1 or 2");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw DomainError("CFL must lie in (0, 1]");
  if (!(cfg.final_time >= 0.0)) throw DomainError("final time must be >= 0");
  if (!(cfg.min_dt > 0.0)) throw DomainError("min_dt must be > 0");
  if (!(cfg.viscosity >= 0.0 && std::isfinite(cfg.viscosity))) throw DomainError("viscosity must be >= 0");
  if (cfg.history_stride == 0) throw DomainError("history stride must be >= 1");
  const bool pl = cfg.left.kind == BoundaryCondition::Kind::Periodic;
  const bool pr = cfg.right.kind == BoundaryCondition::Kind::Periodic;
  if (pl != pr) throw DomainError("periodic boundaries must be set on both ends");
  swb::validate(cfg.friction);
}

InterfaceFlux hll_flux(double hl, double ul, double zl, double hr, double ur, double zr) {
  InterfaceFlux out{};
  kernels::FluxArgs a{&hl, &ul, &zl, &hr, &ur, &zr, &out.fh, &out.fq_left, &out.fq_right, &out.smax};
  kernels::scalar().interface_flux(a, 1);
  return out;
}

ReconstructedPair hydrostatic_reconstruction(double hl, double zl, double hr, double zr) {
  const double zm = std::max(zl, zr);
  return {std::max(hl + zl - zm, 0.0), std::max(hr + zr - zm, 0.0)};
}

Solver::Solver(const Grid1D& grid, SolverConfig cfg, SolverState init)
    : grid_(grid), cfg_(std::move(cfg)), state_(std::move(init)) {
  validate(cfg_);
  const std::size_t n = grid_.size();
  if (n < 2) throw DomainError("the solver needs at least two cells");
  if (state_.h.size() != n || state_.q.size() != n || state_.z.size() != n) {
    throw DomainError("initial state does not match the grid");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(state_.h[i] >= 0.0) || !std::isfinite(state_.q[i]) || !std::isfinite(state_.z[i])) {
      throw DomainError("initial state needs finite values and h >= 0");
    }
    if (state_.h[i] <= kDryThreshold) state_.h[i] = state_.q[i] = 0.0;
  }
  k_ = cfg_.kernels ? cfg_.kernels : &kernels::active();
  const std::size_t ne = n + 2 * kGhosts;
  for (auto* v : {&eh_, &eu_, &ez_, &eeta_, &hm_, &hp_, &um_, &up_, &etam_, &etap_, &zm_, &zp_}) v->assign(ne, 0.0);
  for (auto* v : {&fh_, &fql_, &fqr_, &smax_}) v->assign(n + 1, 0.0);
  for (auto* v : {&h1_, &q1_, &h2_, &q2_}) v->assign(n, 0.0);
}

void Solver::fill_ghosts(const std::vector<double>& h, const std::vector<double>& q) {
  const std::size_t n = grid_.size();
  const std::vector<double>& z = state_.z;
  for (std::size_t i = 0; i < n; ++i) {
    eh_[i + kGhosts] = h[i];
    eu_[i + kGhosts] = velocity(h[i], q[i]);
    ez_[i + kGhosts] = z[i];
  }
  using K = BoundaryCondition::Kind;
  auto set = [&](std::size_t e, double hh, double uu, double zz) {
    eh_[e] = hh;
    eu_[e] = uu;
    ez_[e] = zz;
  };
  const std::size_t last = n + kGhosts - 1;
  if (cfg_.left.kind == K::Periodic) {
    set(1, h[n - 1], eu_[last], z[n - 1]);
    set(0, h[n - 2], eu_[last - 1], z[n - 2]);
    set(last + 1, h[0], eu_[kGhosts], z[0]);
    set(last + 2, h[1], eu_[kGhosts + 1], z[1]);
  } else {
    if (cfg_.left.kind == K::Wall) {
      set(1, eh_[kGhosts], -eu_[kGhosts], ez_[kGhosts]);
      set(0, eh_[kGhosts + 1], -eu_[kGhosts + 1], ez_[kGhosts + 1]);
    } else {
      GhostState g = boundary_ghost(cfg_.left, eh_[kGhosts], eu_[kGhosts], true);
      set(1, g.h, g.u, ez_[kGhosts]);
      set(0, g.h, g.u, ez_[kGhosts]);
    }
    if (cfg_.right.kind == K::Wall) {
      set(last + 1, eh_[last], -eu_[last], ez_[last]);
      set(last + 2, eh_[last - 1], -eu_[last - 1], ez_[last - 1]);
    } else {
      GhostState g = boundary_ghost(cfg_.right, eh_[last], eu_[last], false);
      set(last + 1, g.h, g.u, ez_[last]);
      set(last + 2, g.h, g.u, ez_[last]);
    }
  }
  for (std::size_t e = 0; e < eh_.size(); ++e) eeta_[e] = eh_[e] + ez_[e];
}

double Solver::compute_fluxes(const std::vector<double>& h, const std::vector<double>& q, double /*t*/) {
  fill_ghosts(h, q);
  const std::size_t ne = eh_.size();
  if (cfg_.order == 2) {
    k_->muscl(eh_.data(), ne, hm_.data(), hp_.data());
    k_->muscl(eu_.data(), ne, um_.data(), up_.data());
    k_->muscl(eeta_.data(), ne, etam_.data(), etap_.data());
    for (std::size_t e = 0; e < ne; ++e) {
      zm_[e] = etam_[e] - hm_[e];
      zp_[e] = etap_[e] - hp_[e];
    }
  } else {
    hm_ = hp_ = eh_;
    um_ = up_ = eu_;
    zm_ = zp_ = ez_;
  }
  const std::size_t ni = grid_.size() + 1;
  kernels::FluxArgs a{hp_.data() + 1, up_.data() + 1, zp_.data() + 1, hm_.data() + 2, um_.data() + 2, zm_.data() + 2,
                      fh_.data(),     fql_.data(),    fqr_.data(),    smax_.data()};
  k_->interface_flux(a, ni);
  return *std::max_element(smax_.begin(), smax_.end());
}

void Solver::euler(const std::vector<double>& h, const std::vector<double>& q, double t, double dt,
                   std::vector<double>& h_out, std::vector<double>& q_out) {
  const std::size_t n = grid_.size();
  const double r = dt / grid_.dx();
  const double rain = cfg_.rain ? cfg_.rain(t) : 0.0;
  const bool friction = has_friction(cfg_.friction);
  const double visc = cfg_.viscosity * dt / (grid_.dx() * grid_.dx());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t e = i + kGhosts;
    double hn = h[i] - r * (fh_[i + 1] - fh_[i]) + dt * rain;
    double qn = q[i] - r * (fql_[i + 1] - fqr_[i]);
    if (cfg_.order == 2) qn += r * kGravity * 0.5 * (hm_[e] + hp_[e]) * (zm_[e] - zp_[e]);
    if (visc != 0.0) {
      const double hr = 0.5 * (eh_[e] + eh_[e + 1]), hl = 0.5 * (eh_[e - 1] + eh_[e]);
      qn += visc * (hr * (eu_[e + 1] - eu_[e]) - hl * (eu_[e] - eu_[e - 1]));
    }
    if (hn < 0.0) {
      ++clamped_;
      hn = 0.0;
    }
    if (hn <= kDryThreshold) {
      hn = 0.0;
      qn = 0.0;
    } else if (friction) {
      qn /= 1.0 + dt * friction_damping_rate(cfg_.friction, hn, qn);
    }
    h_out[i] = hn;
    q_out[i] = qn;
  }
}

double Solver::step(double dt_cap) {
  const double remaining = cfg_.final_time - state_.t;
  if (!(remaining > 0.0)) return 0.0;
  const double smax = compute_fluxes(state_.h, state_.q, state_.t);
  double dt = smax > 0.0 ? cfg_.cfl * grid_.dx() / smax : std::numeric_limits<double>::infinity();
  if (dt < cfg_.min_dt) {
    std::ostringstream os;
    os << "time step underflow: dt=" << dt << " at t=" << state_.t << " after " << steps_ << " steps";
    throw SolverError(os.str());
  }
  // Explicit viscous term: keep mu dt / dx^2 well inside its stability bound.
  if (cfg_.viscosity > 0.0) dt = std::min(dt, 0.25 * grid_.dx() * grid_.dx() / cfg_.viscosity);
  dt = std::min({dt, remaining, dt_cap});

  euler(state_.h, state_.q, state_.t, dt, h1_, q1_);
  if (cfg_.order == 2) {
    compute_fluxes(h1_, q1_, state_.t + dt);
    euler(h1_, q1_, state_.t + dt, dt, h2_, q2_);
    for (std::size_t i = 0; i < h1_.size(); ++i) {
      h1_[i] = 0.5 * (state_.h[i] + h2_[i]);
      q1_[i] = 0.5 * (state_.q[i] + q2_[i]);
      if (h1_[i] <= kDryThreshold) h1_[i] = q1_[i] = 0.0;
    }
  }
  for (std::size_t i = 0; i < h1_.size(); ++i) {
    if (!std::isfinite(h1_[i]) || !std::isfinite(q1_[i])) {
      std::ostringstream os;
      os << "non-finite state in cell " << i << " (x=" << grid_.center(i) << ") at t=" << state_.t + dt
         << " after " << steps_ << " steps";
      throw SolverError(os.str());
    }
  }
  residual_ = k_->sum_abs_diff(h1_.data(), state_.h.data(), h1_.size()) / (static_cast<double>(h1_.size()) * dt);
  state_.h.swap(h1_);
  state_.q.swap(q1_);
  state_.t = (dt == remaining) ? cfg_.final_time : state_.t + dt;
  ++steps_;
  return dt;
}

RunResult Solver::run() {
  RunResult res;
  while (state_.t < cfg_.final_time && steps_ < cfg_.max_steps) {
    step();
    if (steps_ % cfg_.history_stride == 0) res.history.push_back({steps_, state_.t, residual_});
    if (cfg_.stop_at_steady && residual_ < cfg_.steady_threshold) {
      res.steady = true;
      break;
    }
  }
  if (res.history.empty() || res.history.back().step != steps_) res.history.push_back({steps_, state_.t, residual_});
  res.steady = res.steady || residual_ < cfg_.steady_threshold;
  res.state = state_;
  res.steps = steps_;
  res.clamped = clamped_;
  return res;
}

double Solver::volume() const {
  double v = 0.0;
  for (double h : state_.h) v += h;
  return v * grid_.dx();
}

FlowField1D Solver::field() const {
  FlowField1D f(grid_);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.h[i] = state_.h[i];
    f.q[i] = state_.q[i];
    f.u[i] = velocity(state_.h[i], state_.q[i]);
    f.z[i] = state_.z[i];
  }
  return f;
}

}  // namespace swb::fv

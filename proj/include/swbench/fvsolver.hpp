#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "swbench/core/boundary.hpp"
#include "swbench/core/field.hpp"
#include "swbench/core/friction.hpp"
#include "swbench/core/grid.hpp"
#include "swbench/kernels.hpp"

// Well-balanced 1D finite volumes: HLL flux on hydrostatically reconstructed
// states, optional MUSCL (minmod on h, u, h+z) with Heun time stepping,
// semi-implicit friction and a rain source.
namespace swb::fv {

struct SolverConfig {
  int order = 2;
  double cfl = 0.4;
  FrictionLaw friction = NoFriction{};
  std::function<double(double)> rain;  // R(t) in m/s; empty means none
  double viscosity = 0.0;  // mu in the momentum term mu d/dx(h du/dx), m^2/s
  BoundaryCondition left = BoundaryCondition::free();
  BoundaryCondition right = BoundaryCondition::free();
  double final_time = 0.0;
  double steady_threshold = 1e-10;  // mean |dh|/dt, m/s
  bool stop_at_steady = false;
  double min_dt = 1e-12;
  std::size_t max_steps = std::numeric_limits<std::size_t>::max();
  std::size_t history_stride = 1;  // keep one residual sample every k steps
  const kernels::KernelSet* kernels = nullptr;  // nullptr selects kernels::active()
};

void validate(const SolverConfig& cfg);

struct SolverState {
  std::vector<double> h;
  std::vector<double> q;
  std::vector<double> z;
  double t = 0.0;
};

struct ResidualSample {
  std::size_t step;
  double t;
  double residual;
};

struct RunResult {
  SolverState state;
  std::vector<ResidualSample> history;
  std::size_t steps = 0;
  std::size_t clamped = 0;  // negative heights reset to zero
  bool steady = false;
};

struct InterfaceFlux {
  double fh;
  double fq_left;
  double fq_right;
  double smax;
};

// Single-interface HLL flux with hydrostatic reconstruction (scalar reference).
InterfaceFlux hll_flux(double hl, double ul, double zl, double hr, double ur, double zr);

struct ReconstructedPair {
  double hl;
  double hr;
};
ReconstructedPair hydrostatic_reconstruction(double hl, double zl, double hr, double zr);

class Solver {
 public:
  Solver(const Grid1D& grid, SolverConfig cfg, SolverState init);

  // Advances one time step, never past final_time nor by more than dt_cap.
  // Throws SolverError on dt underflow or non-finite values.
  double step(double dt_cap = std::numeric_limits<double>::infinity());
  RunResult run();

  const SolverState& state() const noexcept { return state_; }
  const SolverConfig& config() const noexcept { return cfg_; }
  std::size_t steps() const noexcept { return steps_; }
  std::size_t clamped() const noexcept { return clamped_; }
  double last_residual() const noexcept { return residual_; }
  double volume() const;
  FlowField1D field() const;

 private:
  void fill_ghosts(const std::vector<double>& h, const std::vector<double>& q);
  // Fluxes for state (h, q); returns the largest wave speed.
  double compute_fluxes(const std::vector<double>& h, const std::vector<double>& q, double t);
  void euler(const std::vector<double>& h, const std::vector<double>& q, double t, double dt,
             std::vector<double>& h_out, std::vector<double>& q_out);

  Grid1D grid_;
  SolverConfig cfg_;
  const kernels::KernelSet* k_;
  SolverState state_;
  std::size_t steps_ = 0;
  std::size_t clamped_ = 0;
  double residual_ = std::numeric_limits<double>::infinity();

  // Extended arrays (two ghosts per side) and per-interface buffers.
  std::vector<double> eh_, eu_, ez_, eeta_;
  std::vector<double> hm_, hp_, um_, up_, etam_, etap_, zm_, zp_;
  std::vector<double> fh_, fql_, fqr_, smax_;
  std::vector<double> h1_, q1_, h2_, q2_;
};

// Ghost-cell values imposed by a boundary condition, given the adjacent
// interior cell. `left` selects the outgoing characteristic.
struct GhostState {
  double h;
  double u;
};
GhostState boundary_ghost(const BoundaryCondition& bc, double h_in, double u_in, bool left);

}  // namespace swb::fv

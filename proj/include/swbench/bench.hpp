#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swbench/catalog.hpp"
#include "swbench/core/errors.hpp"
#include "swbench/core/field.hpp"
#include "swbench/fvsolver.hpp"
#include "swbench/kernels.hpp"

namespace swb::bench {

// Relative error written at front mismatches (analytic dry / numeric wet is
// +100, the reverse -100).
inline constexpr double kSentinel = 100.0;

struct ErrorReport {
  std::size_t cells = 0;
  std::size_t wet_cells = 0;  // analytic h >= dry threshold
  std::size_t excluded = 0;   // analytic dry cells, left out of the norms
  std::size_t spurious_wet = 0;
  std::size_t missed_wet = 0;
  // Over wet cells: L1 = mean |e|, L2 = sqrt(mean e^2), Linf = max |e|.
  double l1_h = 0.0, l2_h = 0.0, linf_h = 0.0;
  double l1_q = 0.0, l2_q = 0.0, linf_q = 0.0;
  double l1_relative = 0.0;  // sum |e_h| / sum h_analytic
  std::vector<double> relative;  // signed percent, positive when numeric overestimates
  std::size_t max_index = 0;     // cell with the largest |relative| among wet cells
  double max_x = 0.0;
  double max_relative = 0.0;
};

// Throws DomainError when the grids differ.
ErrorReport compare(const FlowField1D& numeric, const FlowField1D& analytic,
                    const kernels::KernelSet* k = nullptr);
// q is taken as h u (x discharge) for 2D fields.
ErrorReport compare(const FlowField2D& numeric, const FlowField2D& analytic,
                    const kernels::KernelSet* k = nullptr);

// Tab-separated per-cell table followed by key=value summary lines.
void write_report(std::ostream& os, const FlowField1D& numeric, const FlowField1D& analytic, const ErrorReport& r);
void write_summary(std::ostream& os, const ErrorReport& r);

struct SolverOptions {
  int order = 2;
  double cfl = 0.4;
  std::optional<double> final_time;
  const kernels::KernelSet* kernels = nullptr;
};

struct CaseRun {
  catalog::SolverProblem problem;
  fv::RunResult result;
  FlowField1D numeric;
};

// Builds the case's solver problem and runs it to the final time.
CaseRun run_case(const catalog::Request& r, const SolverOptions& opt);

struct ConvergencePoint {
  std::size_t cells;
  double error;
};

struct ConvergenceStudy {
  std::vector<ConvergencePoint> points;
  double order = 0.0;  // minus the least-squares slope of log(error) vs log(cells)
  bool dropped_coarsest = false;
};

// Needs >= 3 points with increasing cell counts and positive errors. The
// coarsest point is dropped when its error is within 10 eps of the next one.
ConvergenceStudy fit(std::vector<ConvergencePoint> points);

class StudyError : public SolverError {
 public:
  StudyError(const std::string& what, std::vector<std::string> diagnostics)
      : SolverError(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// L1(h) error of solver runs against the analytic reference, one run per
// resolution (run concurrently). Throws StudyError if any run fails.
ConvergenceStudy convergence(const catalog::Request& base, const SolverOptions& opt,
                             const std::vector<std::size_t>& resolutions);

struct BandCheck {
  std::string name;
  bool pass;
  std::string detail;
};

// Acceptance bands for a case: lakes stay at rest, the shocked bump and the
// short smooth+shock channel stay inside their error bands away from the
// shock, the dry dam-break front lags the analytic one; anything else must
// have L1-relative error <= 5%.
// `time` is the time both fields refer to.
std::vector<BandCheck> check_bands(const catalog::Request& r, double time, const FlowField1D& numeric,
                                   const FlowField1D& analytic, const ErrorReport& report);

// The catch-all band used where no case-specific rule exists.
BandCheck default_band(const ErrorReport& report);

// Position of the right edge of the last wet cell, or 0 if all dry.
double wet_front(const FlowField1D& f);

}  // namespace swb::bench

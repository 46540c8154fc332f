#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace swb {

using ScalarFunction = std::function<double(double)>;

struct RootOptions {
  double bracket_tol = 1e-8;   // bisection stops once the bracket is this narrow
  int newton_steps = 5;        // polishing steps, each kept only if it stays inside
  double residual_tol = 1e-12; // early exit
};

// Bisection followed by bracket-safe Newton polishing. The derivative is
// optional; without it the secant slope of the final bracket is used.
// Throws BracketError when f(lo) and f(hi) have the same strict sign.
double solve_bracketed(const ScalarFunction& f, double lo, double hi,
                       const RootOptions& opts = {},
                       const ScalarFunction& derivative = nullptr);

// Convenience overload: bracket tolerance only.
double solve_bracketed(const ScalarFunction& f, double lo, double hi, double tol);

// Classical fixed-step RK4 for y' = rhs(x, y). Returns n_steps + 1 samples,
// the first being y0. x1 < x0 integrates backwards.
// Throws IntegrationError (carrying the abscissa) on a non-finite evaluation.
std::vector<double> integrate_ode(const std::function<double(double, double)>& rhs,
                                  double x0, double x1, double y0, std::size_t n_steps);

// Composite Simpson rule with n_intervals panels (each panel uses its midpoint).
double simpson(const ScalarFunction& f, double a, double b, std::size_t n_intervals);

// Golden-section maximisation of a unimodal function on [a, b].
double golden_section_max(const ScalarFunction& f, double a, double b, double tol);

// Primitive P of a piecewise-smooth integrand, P' = F, tabulated on a fine
// grid that is split at the integrand's breakpoints so no step straddles a
// discontinuity. Between nodes P is completed by one partial step of the same
// rule, which keeps evaluation at arbitrary x consistent with the table.
class PiecewisePrimitive {
 public:
  struct Piece {
    double a;
    double b;
    ScalarFunction integrand;
  };
  enum class Rule { Rk4, Simpson };
  enum class Anchor { Left, Right };  // P = anchor_value at a of the first / b of the last piece

  // total_steps is distributed over the pieces proportionally to their length
  // (at least one step each). Pieces must be contiguous and increasing.
  PiecewisePrimitive(std::vector<Piece> pieces, std::size_t total_steps, Rule rule,
                     Anchor anchor, double anchor_value = 0.0);

  double operator()(double x) const;
  double a() const { return pieces_.front().a; }
  double b() const { return pieces_.back().b; }
  void shift(double offset);

  // All tabulated nodes and values (piece boundaries appear once per side).
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  double max_step() const { return max_step_; }

 private:
  std::size_t locate_piece(double x) const;
  double step(const ScalarFunction& f, double x0, double x1, double y0) const;

  std::vector<Piece> pieces_;
  Rule rule_;
  Anchor anchor_;
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<std::size_t> first_node_;  // index of each piece's first node
  double max_step_ = 0.0;
};

}  // namespace swb

#include "swbench/core/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "swbench/core/errors.hpp"

namespace swb {

namespace {

bool same_strict_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

double checked(const ScalarFunction& f, double x) {
  double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "function not finite at x=" << x;
    throw BracketError(os.str());
  }
  return v;
}

}  // namespace

double solve_bracketed(const ScalarFunction& f, double lo, double hi, const RootOptions& opts,
                       const ScalarFunction& derivative) {
  if (!(opts.bracket_tol > 0.0)) throw DomainError("bracket tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  double flo = checked(f, lo);
  double fhi = checked(f, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (same_strict_sign(flo, fhi)) {
    std::ostringstream os;
    os << "no sign change on [" << lo << ", " << hi << "]: f=" << flo << ", " << fhi;
    throw BracketError(os.str());
  }

  // 2000 halvings are far more than a double bracket can absorb.
  for (int it = 0; it < 2000 && hi - lo > opts.bracket_tol; ++it) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    double fm = checked(f, mid);
    if (fm == 0.0) return mid;
    if (same_strict_sign(fm, flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  double x = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fx = std::abs(flo) <= std::abs(fhi) ? flo : fhi;
  for (int k = 0; k < opts.newton_steps && std::abs(fx) >= opts.residual_tol; ++k) {
    double d = derivative ? derivative(x) : (fhi - flo) / (hi - lo);
    if (!std::isfinite(d) || d == 0.0) break;
    double xn = x - fx / d;
    if (!(xn >= lo && xn <= hi)) break;
    double fn = f(xn);
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = xn;
    fx = fn;
  }
  return x;
}

double solve_bracketed(const ScalarFunction& f, double lo, double hi, double tol) {
  RootOptions opts;
  opts.bracket_tol = tol;
  return solve_bracketed(f, lo, hi, opts);
}

std::vector<double> integrate_ode(const std::function<double(double, double)>& rhs, double x0,
                                  double x1, double y0, std::size_t n_steps) {
  if (n_steps == 0) throw DomainError("integrate_ode needs at least one step");
  auto eval = [&](double x, double y) {
    double v = rhs(x, y);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "non-finite right-hand side at x=" << x;
      throw IntegrationError(os.str(), x);
    }
    return v;
  };
  const double step = (x1 - x0) / static_cast<double>(n_steps);
  std::vector<double> y(n_steps + 1);
  y[0] = y0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    double x = x0 + static_cast<double>(k) * step;
    double xe = k + 1 == n_steps ? x1 : x0 + static_cast<double>(k + 1) * step;
    double hs = xe - x;
    double yk = y[k];
    double k1 = eval(x, yk);
    double k2 = eval(x + 0.5 * hs, yk + 0.5 * hs * k1);
    double k3 = eval(x + 0.5 * hs, yk + 0.5 * hs * k2);
    double k4 = eval(xe, yk + hs * k3);
    y[k + 1] = yk + hs / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

double simpson(const ScalarFunction& f, double a, double b, std::size_t n_intervals) {
  if (n_intervals == 0) throw DomainError("simpson needs at least one interval");
  const double step = (b - a) / static_cast<double>(n_intervals);
  double sum = 0.0;
  double fl = f(a);
  for (std::size_t k = 0; k < n_intervals; ++k) {
    double xl = a + static_cast<double>(k) * step;
    double xr = k + 1 == n_intervals ? b : a + static_cast<double>(k + 1) * step;
    double fr = f(xr);
    sum += (xr - xl) / 6.0 * (fl + 4.0 * f(0.5 * (xl + xr)) + fr);
    fl = fr;
  }
  return sum;
}

double golden_section_max(const ScalarFunction& f, double a, double b, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

PiecewisePrimitive::PiecewisePrimitive(std::vector<Piece> pieces, std::size_t total_steps,
                                       Rule rule, Anchor anchor, double anchor_value)
    : pieces_(std::move(pieces)), rule_(rule), anchor_(anchor) {
  if (pieces_.empty()) throw DomainError("primitive needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].b > pieces_[i].a)) throw DomainError("primitive pieces must be increasing");
    if (i > 0 && pieces_[i].a != pieces_[i - 1].b) throw DomainError("primitive pieces must be contiguous");
  }
  const double total = pieces_.back().b - pieces_.front().a;
  const std::size_t np = pieces_.size();

  std::vector<std::vector<double>> xs(np), vs(np);
  for (std::size_t i = 0; i < np; ++i) {
    double len = pieces_[i].b - pieces_[i].a;
    auto m = static_cast<std::size_t>(std::ceil(static_cast<double>(total_steps) * len / total - 1e-9));
    m = std::max<std::size_t>(m, 1);
    xs[i].resize(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      xs[i][k] = k == m ? pieces_[i].b : pieces_[i].a + len * static_cast<double>(k) / static_cast<double>(m);
    }
    max_step_ = std::max(max_step_, len / static_cast<double>(m));
  }

  auto fill = [&](std::size_t i, double start_value) {
    const auto& x = xs[i];
    auto& v = vs[i];
    const auto& f = pieces_[i].integrand;
    const std::size_t m = x.size() - 1;
    v.assign(m + 1, 0.0);
    if (anchor_ == Anchor::Left) {
      v[0] = start_value;
      if (rule_ == Rule::Rk4) {
        v = integrate_ode([&](double s, double) { return f(s); }, x[0], x[m], start_value, m);
      } else {
        for (std::size_t k = 0; k < m; ++k) v[k + 1] = step(f, x[k], x[k + 1], v[k]);
      }
    } else {
      v[m] = start_value;
      if (rule_ == Rule::Rk4) {
        auto back = integrate_ode([&](double s, double) { return f(s); }, x[m], x[0], start_value, m);
        for (std::size_t k = 0; k <= m; ++k) v[m - k] = back[k];
      } else {
        for (std::size_t k = m; k > 0; --k) v[k - 1] = step(f, x[k], x[k - 1], v[k]);
      }
    }
  };

  if (anchor_ == Anchor::Left) {
    double carry = anchor_value;
    for (std::size_t i = 0; i < np; ++i) {
      fill(i, carry);
      carry = vs[i].back();
    }
  } else {
    double carry = anchor_value;
    for (std::size_t i = np; i-- > 0;) {
      fill(i, carry);
      carry = vs[i].front();
    }
  }

  for (std::size_t i = 0; i < np; ++i) {
    first_node_.push_back(nodes_.size());
    nodes_.insert(nodes_.end(), xs[i].begin(), xs[i].end());
    values_.insert(values_.end(), vs[i].begin(), vs[i].end());
  }
}

double PiecewisePrimitive::step(const ScalarFunction& f, double x0, double x1, double y0) const {
  if (rule_ == Rule::Rk4) {
    return integrate_ode([&](double s, double) { return f(s); }, x0, x1, y0, 1).back();
  }
  return y0 + (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
}

std::size_t PiecewisePrimitive::locate_piece(double x) const {
  const double span = b() - a();
  if (x < a() - 1e-12 * span || x > b() + 1e-12 * span) {
    std::ostringstream os;
    os << "x=" << x << " outside [" << a() << ", " << b() << "]";
    throw DomainError(os.str());
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (x <= pieces_[i].b) return i;
  }
  return pieces_.size() - 1;
}

double PiecewisePrimitive::operator()(double x) const {
  const std::size_t i = locate_piece(x);
  const std::size_t first = first_node_[i];
  const std::size_t last = i + 1 < first_node_.size() ? first_node_[i + 1] - 1 : nodes_.size() - 1;
  const std::size_t m = last - first;
  const double a = pieces_[i].a;
  const double len = pieces_[i].b - a;
  x = std::clamp(x, a, pieces_[i].b);
  auto j = static_cast<std::size_t>(std::floor((x - a) / len * static_cast<double>(m)));
  j = std::min(j, m - 1);
  // Guard against the floor landing one node off through rounding.
  while (j > 0 && nodes_[first + j] > x) --j;
  while (j + 1 < m && nodes_[first + j + 1] <= x) ++j;
  const double xl = nodes_[first + j];
  const double xr = nodes_[first + j + 1];
  if (x == xl) return values_[first + j];
  if (x == xr) return values_[first + j + 1];
  const auto& f = pieces_[i].integrand;
  if (anchor_ == Anchor::Left) return step(f, xl, x, values_[first + j]);
  return step(f, xr, x, values_[first + j + 1]);
}

void PiecewisePrimitive::shift(double offset) {
  for (double& v : values_) v += offset;
}

}  // namespace swb

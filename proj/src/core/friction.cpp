#include "swbench/core/friction.hpp"

#include <cmath>
#include <sstream>

#include "swbench/core/constants.hpp"
#include "swbench/core/errors.hpp"

namespace swb {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_coefficient(double c, const char* name) {
  if (!std::isfinite(c) || c < 0.0) {
    throw DomainError(std::string("friction coefficient ") + name + " must be finite and >= 0");
  }
}

}  // namespace

void validate(const FrictionLaw& law) {
  std::visit(Overloaded{
                 [](const NoFriction&) {},
                 [](const Manning& m) { check_coefficient(m.n, "n"); },
                 [](const DarcyWeisbach& d) { check_coefficient(d.f, "f"); },
                 [](const Chezy& c) {
                   check_coefficient(c.C, "C");
                   if (c.C == 0.0) throw DomainError("Chezy coefficient must be positive");
                 },
                 [](const LinearFriction& l) { check_coefficient(l.tau, "tau"); },
                 [](const LaminarTurbulent& lt) {
                   check_coefficient(lt.k_l, "k_l");
                   check_coefficient(lt.k_t, "k_t");
                   check_coefficient(lt.mu_v, "mu_v");
                   check_coefficient(lt.mu_h, "mu_h");
                 },
             },
             law);
}

bool has_friction(const FrictionLaw& law) { return !std::holds_alternative<NoFriction>(law); }

LaminarTurbulentTerms laminar_turbulent_terms(const LaminarTurbulent& law, double h, double q) {
  if (!(h > 0.0)) throw DomainError("laminar/turbulent friction needs h > 0");
  // mu_v = 0 would mean an infinitely resisting layer; treat as no correction.
  double den = law.mu_v > 0.0 ? 1.0 + law.k_l * h / (3.0 * law.mu_v) : 1.0;
  double a0 = law.k_l / den;
  double a1 = law.k_t / (den * den);
  double u = q / h;
  return {a0, a1, (a0 / h * u + a1 * std::abs(u) * u) / kGravity};
}

double friction_slope(const FrictionLaw& law, double h, double q) {
  if (std::holds_alternative<NoFriction>(law)) return 0.0;
  if (!(h > 0.0)) {
    if (q == 0.0) return 0.0;
    throw DomainError("friction slope undefined for h <= 0 with nonzero discharge");
  }
  return std::visit(
      Overloaded{
          [](const NoFriction&) { return 0.0; },
          [&](const Manning& m) { return m.n * m.n * q * std::abs(q) / std::pow(h, 10.0 / 3.0); },
          [&](const DarcyWeisbach& d) { return d.f / (8.0 * kGravity) * q * std::abs(q) / (h * h * h); },
          [&](const Chezy& c) { return q * std::abs(q) / (c.C * c.C * h * h * h); },
          [&](const LinearFriction& l) { return l.tau * (q / h) / kGravity; },
          [&](const LaminarTurbulent& lt) { return laminar_turbulent_terms(lt, h, q).slope; },
      },
      law);
}

double friction_damping_rate(const FrictionLaw& law, double h, double q) {
  if (h <= kDryThreshold) return 0.0;
  double aq = std::abs(q);
  return std::visit(
      Overloaded{
          [](const NoFriction&) { return 0.0; },
          [&](const Manning& m) { return kGravity * m.n * m.n * aq / std::pow(h, 7.0 / 3.0); },
          [&](const DarcyWeisbach& d) { return d.f / 8.0 * aq / (h * h); },
          [&](const Chezy& c) { return kGravity * aq / (c.C * c.C * h * h); },
          [&](const LinearFriction& l) { return l.tau; },
          [&](const LaminarTurbulent& lt) {
            auto t = laminar_turbulent_terms(lt, h, q);
            return t.alpha0 / h + t.alpha1 * aq / h;
          },
      },
      law);
}

std::string describe(const FrictionLaw& law) {
  std::ostringstream os;
  os.precision(15);
  std::visit(Overloaded{
                 [&](const NoFriction&) { os << "none"; },
                 [&](const Manning& m) { os << "Manning n=" << m.n; },
                 [&](const DarcyWeisbach& d) { os << "Darcy-Weisbach f=" << d.f; },
                 [&](const Chezy& c) { os << "Chezy C=" << c.C; },
                 [&](const LinearFriction& l) { os << "linear tau=" << l.tau; },
                 [&](const LaminarTurbulent& lt) {
                   os << "laminar/turbulent k_l=" << lt.k_l << " k_t=" << lt.k_t
                      << " mu_v=" << lt.mu_v << " mu_h=" << lt.mu_h;
                 },
             },
             law);
  return os.str();
}

}  // namespace swb

#include "swbench/core/criticality.hpp"

#include <cmath>

#include "swbench/core/constants.hpp"
#include "swbench/core/errors.hpp"

namespace swb {

double froude(double h, double u) {
  if (!(h > 0.0)) throw DomainError("Froude number undefined on a dry cell");
  return std::abs(u) / std::sqrt(kGravity * h);
}

double critical_height(double q) {
  if (!std::isfinite(q)) throw DomainError("critical height needs a finite discharge");
  return std::cbrt(q * q / kGravity);
}

CriticalityDiagnostics diagnose(double h, double u) {
  if (h < 0.0) throw DomainError("negative water height");
  double c = std::sqrt(kGravity * h);
  double fr = h > 0.0 ? std::abs(u) / c : 0.0;
  return {fr, critical_height(h * u), u - c, u + c};
}

}  // namespace swb

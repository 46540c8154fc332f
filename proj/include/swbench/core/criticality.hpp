#pragma once

namespace swb {

// |u| / sqrt(g h). Throws DomainError for h <= 0.
double froude(double h, double u);

// (q / sqrt(g))^(2/3); the sign of q is ignored. Throws DomainError if q is not finite.
double critical_height(double q);

struct CriticalityDiagnostics {
  double froude;
  double critical_height;
  double lambda1;  // u - sqrt(g h)
  double lambda2;  // u + sqrt(g h)
};

// Accepts h = 0 (dry): froude is reported as 0 and both eigenvalues equal u.
CriticalityDiagnostics diagnose(double h, double u);

}  // namespace swb

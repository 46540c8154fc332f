#pragma once

#include <string>

namespace swb {

// Boundary descriptor shared by the case catalog and the solver.
struct BoundaryCondition {
  enum class Kind {
    FreeOutflow,             // zero-gradient
    Wall,                    // reflective
    Periodic,
    ImposedDischarge,        // q given, h from the outgoing characteristic
    ImposedHeight,           // h given, u from the outgoing characteristic
    ImposedBoth,             // h and q given (supercritical inflow)
    HeightWhileSubcritical,  // h given while the boundary cell is subcritical, free otherwise
  };
  Kind kind = Kind::FreeOutflow;
  double h = 0.0;
  double q = 0.0;

  static BoundaryCondition free() { return {Kind::FreeOutflow, 0.0, 0.0}; }
  static BoundaryCondition wall() { return {Kind::Wall, 0.0, 0.0}; }
  static BoundaryCondition periodic() { return {Kind::Periodic, 0.0, 0.0}; }
  static BoundaryCondition discharge(double q) { return {Kind::ImposedDischarge, 0.0, q}; }
  static BoundaryCondition height(double h) { return {Kind::ImposedHeight, h, 0.0}; }
  static BoundaryCondition both(double h, double q) { return {Kind::ImposedBoth, h, q}; }
  static BoundaryCondition height_while_subcritical(double h) {
    return {Kind::HeightWhileSubcritical, h, 0.0};
  }
};

std::string describe(const BoundaryCondition& bc);

}  // namespace swb

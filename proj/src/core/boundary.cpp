#include "swbench/core/boundary.hpp"

#include <sstream>

namespace swb {

std::string describe(const BoundaryCondition& bc) {
  std::ostringstream os;
  os.precision(15);
  using K = BoundaryCondition::Kind;
  switch (bc.kind) {
    case K::FreeOutflow: os << "free"; break;
    case K::Wall: os << "wall"; break;
    case K::Periodic: os << "periodic"; break;
    case K::ImposedDischarge: os << "q=" << bc.q; break;
    case K::ImposedHeight: os << "h=" << bc.h; break;
    case K::ImposedBoth: os << "h=" << bc.h << ",q=" << bc.q; break;
    case K::HeightWhileSubcritical: os << "h=" << bc.h << " while subcritical"; break;
  }
  return os.str();
}

}  // namespace swb

#include "swbench/core/grid.hpp"

#include <cmath>

#include "swbench/core/errors.hpp"

namespace swb {

Grid1D::Grid1D(double length, std::size_t n_cells) : length_(length), n_(n_cells) {
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("grid length must be positive");
  if (n_cells == 0) throw DomainError("grid needs at least one cell");
  dx_ = length / static_cast<double>(n_cells);
}

std::vector<double> Grid1D::centers() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = center(i);
  return out;
}

Grid2D::Grid2D(double lx, double ly, std::size_t nx, std::size_t ny) : x_(lx, nx), y_(ly, ny) {}

}  // namespace swb

#include "swbench/core/field.hpp"

#include "swbench/core/constants.hpp"

namespace swb {

FlowField1D::FlowField1D(const Grid1D& grid)
    : x(grid.centers()),
      h(grid.size(), 0.0),
      u(grid.size(), 0.0),
      z(grid.size(), 0.0),
      q(grid.size(), 0.0) {}

void FlowField1D::flush_dry() {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] <= kDryThreshold) {
      h[i] = 0.0;
      u[i] = 0.0;
      q[i] = 0.0;
    }
  }
}

FlowField2D::FlowField2D(const Grid2D& grid)
    : x(grid.size()),
      y(grid.size()),
      h(grid.size(), 0.0),
      u(grid.size(), 0.0),
      v(grid.size(), 0.0),
      z(grid.size(), 0.0),
      nx(grid.nx()),
      ny(grid.ny()) {
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      x[grid.index(i, j)] = grid.x_axis().center(i);
      y[grid.index(i, j)] = grid.y_axis().center(j);
    }
  }
}

void FlowField2D::flush_dry() {
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] <= kDryThreshold) {
      h[k] = 0.0;
      u[k] = 0.0;
      v[k] = 0.0;
    }
  }
}

}  // namespace swb

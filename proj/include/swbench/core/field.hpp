#pragma once

#include <cstddef>
#include <vector>

#include "swbench/core/grid.hpp"

namespace swb {

struct FlowField1D {
  std::vector<double> x;
  std::vector<double> h;
  std::vector<double> u;
  std::vector<double> z;
  std::vector<double> q;
  // Optional per-cell overrides for channels whose Froude number and critical
  // depth depend on the cross section. Empty means the rectangular formulas.
  std::vector<double> froude;
  std::vector<double> critical;

  FlowField1D() = default;
  explicit FlowField1D(const Grid1D& grid);

  std::size_t size() const noexcept { return x.size(); }
  // Forces u = q = 0 wherever h <= kDryThreshold (and h itself to 0).
  void flush_dry();
};

struct FlowField2D {
  std::vector<double> x;  // per cell, row-major (x fastest)
  std::vector<double> y;
  std::vector<double> h;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> z;
  std::size_t nx = 0;
  std::size_t ny = 0;

  FlowField2D() = default;
  explicit FlowField2D(const Grid2D& grid);

  std::size_t size() const noexcept { return h.size(); }
  void flush_dry();
};

}  // namespace swb

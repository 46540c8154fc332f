#pragma once

#include <cstddef>
#include <vector>

namespace swb {

// Uniform cell-centred grid on [0, L]; centres sit at (i + 1/2) * dx.
class Grid1D {
 public:
  Grid1D(double length, std::size_t n_cells);

  double length() const noexcept { return length_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  double center(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dx_; }
  std::vector<double> centers() const;

 private:
  double length_;
  std::size_t n_;
  double dx_;
};

class Grid2D {
 public:
  Grid2D(double lx, double ly, std::size_t nx, std::size_t ny);

  const Grid1D& x_axis() const noexcept { return x_; }
  const Grid1D& y_axis() const noexcept { return y_; }
  std::size_t nx() const noexcept { return x_.size(); }
  std::size_t ny() const noexcept { return y_.size(); }
  std::size_t size() const noexcept { return nx() * ny(); }
  // Row-major with x fastest.
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx() + i; }

 private:
  Grid1D x_;
  Grid1D y_;
};

}  // namespace swb

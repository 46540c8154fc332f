#include <cmath>

#include "doctest.h"
#include "swbench/core/errors.hpp"
#include "swbench/pseudo2d.hpp"

using namespace swb;
using namespace swb::pseudo2d;
using doctest::Approx;

namespace {
const Pseudo2DCase kAll[] = {Pseudo2DCase::ShortSub, Pseudo2DCase::ShortSuper, Pseudo2DCase::ShortSmooth,
                             Pseudo2DCase::ShortJump, Pseudo2DCase::LongSub, Pseudo2DCase::LongSmoothJump};
}

TEST_CASE("channel widths") {
  auto s1 = make_case(Pseudo2DCase::ShortSub);
  auto s2 = make_case(Pseudo2DCase::LongSub);
  CHECK(width(s1, 100.0) == Approx(5.0).epsilon(1e-15));
  CHECK(width(s1, 0.0) == Approx(9.589575006880506).epsilon(1e-14));
  CHECK(width(s2, 400.0 / 3.0) == Approx(4.980670399302636).epsilon(1e-14));
  CHECK(width(s2, 0.0) == Approx(9.9806703981858202).epsilon(1e-14));
  CHECK_THROWS_AS(width(s1, 201.0), DomainError);
  for (double x = 1.0; x < 199.0; x += 3.7) {
    double d = 1e-4;
    CHECK(width_derivative(s1, x) == Approx((width(s1, x + d) - width(s1, x - d)) / (2 * d)).epsilon(1e-6).scale(1e-4));
    CHECK(width(s1, x) > 0.0);
  }
}

TEST_CASE("mean heights") {
  auto sub = make_case(Pseudo2DCase::ShortSub);
  auto jump = make_case(Pseudo2DCase::ShortJump);
  CHECK(mean_height(sub, 100.0).h == Approx(1.2).epsilon(1e-15));
  CHECK(mean_height(sub, 200.0).h == Approx(0.90202138409972564).epsilon(1e-14));
  CHECK(mean_height(make_case(Pseudo2DCase::ShortSuper), 0.0).h == Approx(0.50336897349954273).epsilon(1e-14));
  CHECK(mean_height(jump, 0.0).h == Approx(0.7).epsilon(1e-15));
  CHECK(mean_height(jump, 200.0).h == Approx(1.4992361938645571).epsilon(1e-13));
  CHECK(mean_height(jump, 120.0).h == Approx(0.94663564011715269).epsilon(1e-14));
  CHECK(mean_height(jump, std::nextafter(120.0, 200.0)).h == Approx(1.2868091587284848).epsilon(1e-13));
  CHECK(mean_height(make_case(Pseudo2DCase::LongSub), 400.0).h == Approx(0.90409362084885299).epsilon(1e-14));
  CHECK(mean_height(make_case(Pseudo2DCase::LongSmoothJump), 400.0).h == Approx(1.1999999998078553).epsilon(1e-13));

  for (auto id : kAll) {
    auto s = make_case(id);
    CAPTURE(static_cast<int>(id));
    for (double x = 0.77; x < s.length - 1.0; x += 2.9) {
      if (s.tail && std::abs(x - s.tail->x1) < 1.0) continue;
      double d = 1e-4;
      double fd = (mean_height(s, x + d).h - mean_height(s, x - d).h) / (2 * d);
      CHECK(mean_height(s, x).dh == Approx(fd).epsilon(1e-6).scale(1e-4));
      CHECK(mean_height(s, x).h > 0.0);
    }
  }
}

TEST_CASE("jump cases are discontinuous at x = 120, others are continuous") {
  for (auto id : kAll) {
    auto s = make_case(id);
    double jump = std::abs(mean_height(s, std::nextafter(120.0, 1e3)).h - mean_height(s, 120.0).h);
    if (s.tail) {
      CHECK(jump > 0.1);
    } else {
      CHECK(jump < 1e-10);
    }
  }
}

TEST_CASE("bed slope") {
  CHECK(bed_slope(make_case(Pseudo2DCase::ShortSub), 100.0) == Approx(0.013226368724650899).epsilon(1e-12));
  CHECK(bed_slope(make_case(Pseudo2DCase::ShortSuper), 100.0) == Approx(0.022552769072360959).epsilon(1e-12));
}

TEST_CASE("topography quadrature") {
  auto s = make_case(Pseudo2DCase::LongSub);
  ChannelTopography topo(s, 800);
  CHECK(topo(400.0) == 0.0);
  CHECK(topo(0.0) > 0.0);
  // Fourth-order convergence of z(0).
  ChannelTopography t1(s, 50), t2(s, 100), t3(s, 200);
  double e1 = std::abs(t1(0.0) - t3(0.0)), e2 = std::abs(t2(0.0) - t3(0.0));
  CHECK(std::log2(e1 / e2) > 3.5);
  // Grid sampling uses the same primitive.
  Grid1D g(400.0, 80);
  auto z = topography(s, g, 5);
  ChannelTopography t5(s, 400);
  CHECK(z[10] == Approx(t5(g.center(10))).epsilon(1e-14));
  CHECK(z.back() > 0.0);
}

TEST_CASE("criticality per channel") {
  auto sub = make_case(Pseudo2DCase::ShortSub);
  auto sup = make_case(Pseudo2DCase::ShortSuper);
  auto f1 = steady_solution(sub, Grid1D(200.0, 400));
  auto f2 = steady_solution(sup, Grid1D(200.0, 400));
  for (std::size_t i = 0; i < f1.size(); ++i) {
    CHECK(f1.froude[i] < 1.0);
    CHECK(f2.froude[i] > 1.0);
    CHECK(f1.h[i] > f1.critical[i]);
    CHECK(f2.h[i] < f2.critical[i]);
    CHECK(f1.u[i] == Approx(20.0 / (f1.h[i] * width(sub, f1.x[i]))).epsilon(1e-14));
  }
  // Unit-width rectangle reduces to |u|/sqrt(gh).
  CHECK(section_froude(sub, 100.0, 1.2) == Approx(20.0 / (5.0 * 1.2) / std::sqrt(9.81 * 1.2)).epsilon(1e-14));
  CHECK(section_froude(sub, 100.0, critical_depth(sub, 100.0)) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("2D raster") {
  auto s = make_case(Pseudo2DCase::LongSub);
  Grid2D g(400.0, domain_width(s), 40, 32);
  auto f = raster(s, g);
  auto zc = topography(s, g.x_axis());
  for (std::size_t i = 0; i < g.nx(); ++i) {
    double surf = zc[i] + mean_height(s, g.x_axis().center(i)).h;
    for (std::size_t j = 0; j < g.ny(); ++j) {
      auto k = g.index(i, j);
      if (f.h[k] > 0.0) CHECK(f.h[k] + f.z[k] == Approx(surf).epsilon(1e-14));
      else CHECK(f.u[k] == 0.0);
    }
    // Axis cell is wet at the mean depth.
    CHECK(f.h[g.index(i, g.ny() / 2)] == Approx(mean_height(s, g.x_axis().center(i)).h).epsilon(1e-12));
  }
  CHECK_THROWS_AS(raster(s, Grid2D(400.0, 5.0, 4, 4)), DomainError);
}

TEST_CASE("boundary descriptors") {
  auto j = make_case(Pseudo2DCase::ShortJump);
  CHECK(left_boundary(j).kind == BoundaryCondition::Kind::ImposedBoth);
  CHECK(left_boundary(j).h == Approx(0.7));
  CHECK(right_boundary(j).kind == BoundaryCondition::Kind::ImposedHeight);
  CHECK(right_boundary(make_case(Pseudo2DCase::ShortSmooth)).kind == BoundaryCondition::Kind::FreeOutflow);
}

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "swbench/ascii.hpp"
#include "swbench/catalog.hpp"
#include "swbench/core/constants.hpp"
#include "swbench/dambreak.hpp"

using namespace swb;
using catalog::Type;

namespace {

std::string render(const catalog::Request& r) {
  const auto g = catalog::generate(r);
  std::ostringstream os;
  if (g.two_d) ascii::write(os, g.header, g.field2d);
  else ascii::write(os, g.header, g.field1d);
  return os.str();
}

catalog::Request req(int dim, Type t, int n, std::size_t cells) {
  catalog::Request r;
  r.address = {dim, t, n};
  r.cells = cells;
  return r;
}

}  // namespace

TEST_CASE("catalog addresses") {
  const auto& all = catalog::entries();
  CHECK(all.size() == 42);
  std::set<std::string> seen;
  for (const auto& e : all) {
    CHECK(seen.insert(catalog::to_string(e.address)).second);
    CHECK(catalog::find(e.address) == &e);
  }
  auto count = [&](int dim, Type t) {
    return std::count_if(all.begin(), all.end(), [&](const auto& e) { return e.address.dim == dim && e.address.type == t; });
  };
  CHECK(count(1, Type::Bump) == 5);
  CHECK(count(1, Type::MacDonald) == 18);
  CHECK(count(1, Type::Pseudo2D) == 6);
  CHECK(count(2, Type::Pseudo2D) == 6);
  CHECK(count(1, Type::DamBreak) == 3);
  CHECK(count(1, Type::Oscillation) == 2);
  CHECK(count(2, Type::Oscillation) == 2);
  CHECK(catalog::find({1, Type::Bump, 6}) == nullptr);
  CHECK(catalog::find({2, Type::Bump, 1}) == nullptr);
  CHECK(catalog::find({1, Type::MacDonald, 0}) == nullptr);
  CHECK(catalog::parse_type("macdonald") == Type::MacDonald);
  CHECK_FALSE(catalog::parse_type("Bump").has_value());
  CHECK(catalog::to_string(catalog::Address{1, Type::Bump, 3}) == "1d bump 3");
  CHECK(catalog::listing().find("transcritical_shock") != std::string::npos);
}

TEST_CASE("lake-immersed generation") {
  const auto g = catalog::generate(req(1, Type::Bump, 1, 500));
  REQUIRE(g.field1d.size() == 500);
  for (std::size_t i = 0; i < 500; ++i) {
    REQUIRE(g.field1d.h[i] > 0.0);
    CHECK(std::abs(g.field1d.h[i] + g.field1d.z[i] - 0.5) < 1e-15);
  }
  CHECK_FALSE(g.nonstandard);
}

TEST_CASE("Ritter at t = 6 has a dry tail beyond x_B") {
  auto r = req(1, Type::DamBreak, 2, 500);
  r.time = 6.0;
  const auto g = catalog::generate(r);
  const double xb = dambreak::ritter_waves(dambreak::make_spec(dambreak::DamBreakKind::Ritter), 6.0).x_b;
  CHECK(xb == doctest::Approx(7.65766815084201).epsilon(1e-12));
  for (std::size_t i = 0; i < g.field1d.size(); ++i) {
    if (g.field1d.x[i] > xb) CHECK(g.field1d.h[i] == 0.0);
    if (g.field1d.x[i] < xb - 0.05) CHECK(g.field1d.h[i] > 0.0);
  }
  CHECK(render(r).find("# time: 6\n") != std::string::npos);
}

TEST_CASE("overrides") {
  auto r = req(1, Type::Bump, 3, 50);
  r.overrides["q0"] = 4.0;
  const auto g = catalog::generate(r);
  CHECK(g.nonstandard);
  CHECK(render(r).find("# NONSTANDARD: parameters overridden: q0\n") != std::string::npos);
  CHECK(g.field1d.q[10] == doctest::Approx(4.0));
  r.overrides = {{"q0", 4.42}};
  CHECK_FALSE(catalog::generate(r).nonstandard);
  r.overrides = {{"bogus", 1.0}};
  CHECK_THROWS_AS(catalog::generate(r), catalog::UsageError);
  auto p = catalog::default_params({1, Type::MacDonald, 2});
  CHECK(p.at("f") == 0.093);
  CHECK(p.count("n") == 0);
  CHECK(catalog::default_params({1, Type::MacDonald, 15}).at("rain_start") == 1500.0);
}

TEST_CASE("usage errors") {
  auto steady = req(1, Type::Bump, 3, 50);
  steady.time = 2.0;
  CHECK_THROWS_AS(catalog::generate(steady), catalog::UsageError);
  CHECK_THROWS_AS(catalog::generate(req(1, Type::Bump, 9, 50)), catalog::UsageError);
  CHECK_THROWS_AS(catalog::generate(req(1, Type::Bump, 1, 1)), catalog::UsageError);
  auto flat = req(1, Type::Bump, 1, 50);
  flat.cells_y = 4;
  CHECK_THROWS_AS(catalog::generate(flat), catalog::UsageError);
  CHECK_THROWS_AS(catalog::solver_problem(req(1, Type::Pseudo2D, 1, 50)), catalog::UsageError);
  CHECK_THROWS_AS(catalog::solver_problem(req(2, Type::Oscillation, 1, 50)), catalog::UsageError);
}

TEST_CASE("2D rasters") {
  auto r = req(2, Type::Oscillation, 1, 40);
  r.cells_y = 30;
  const auto g = catalog::generate(r);
  CHECK(g.two_d);
  CHECK(g.field2d.nx == 40);
  CHECK(g.field2d.ny == 30);
  const auto p = catalog::generate(req(2, Type::Pseudo2D, 3, 20));
  CHECK(p.field2d.size() == 400);
}

TEST_CASE("generation is deterministic") {
  for (const auto& e : catalog::entries()) {
    auto r = req(e.address.dim, e.address.type, e.address.number, e.address.dim == 2 ? 12 : 60);
    CHECK(render(r) == render(r));
  }
}

TEST_CASE("solver problems") {
  const auto lake = catalog::solver_problem(req(1, Type::Bump, 2, 100));
  CHECK(lake.config.final_time == 100.0);
  for (std::size_t i = 0; i < 100; ++i) {
    if (lake.initial.h[i] > 0.0) CHECK(std::abs(lake.initial.h[i] + lake.initial.z[i] - 0.1) < 1e-15);
    CHECK(lake.initial.q[i] == 0.0);
  }
  const auto rain = catalog::solver_problem(req(1, Type::MacDonald, 15, 50));
  REQUIRE(rain.config.rain);
  CHECK(rain.config.rain(1499.0) == 0.0);
  CHECK(rain.config.rain(1500.0) == 0.001);
  CHECK(rain.config.final_time == 3000.0);
  const auto diff = catalog::solver_problem(req(1, Type::MacDonald, 17, 50));
  CHECK(diff.config.viscosity == doctest::Approx(0.004));
  const auto dam = catalog::solver_problem(req(1, Type::DamBreak, 2, 100), 3.0);
  CHECK(dam.config.final_time == 3.0);
  CHECK(dam.initial.h.front() == 0.005);
  CHECK(dam.initial.h.back() == 0.0);
  const auto& sam = catalog::solver_problem(req(1, Type::Oscillation, 2, 100));
  CHECK(std::holds_alternative<LinearFriction>(sam.config.friction));
  for (const auto& e : catalog::entries()) {
    if (!e.solvable) continue;
    const auto p = catalog::solver_problem(req(e.address.dim, e.address.type, e.address.number, 40));
    CHECK(p.initial.h.size() == 40);
    CHECK(p.reference.size() == 40);
    CHECK_NOTHROW(fv::validate(p.config));
  }
}

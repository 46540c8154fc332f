// swbench: analytic shallow-water solutions, reference solver runs and
// error reports on the command line.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swbench/ascii.hpp"
#include "swbench/bench.hpp"
#include "swbench/catalog.hpp"
#include "swbench/core/errors.hpp"
#include "swbench/fvsolver.hpp"

namespace {

constexpr int kExitBand = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

using namespace swb;

struct AddressArgs {
  int dim = 1;
  std::string type;
  int number = 0;
  std::size_t cells = 0;
  std::size_t cells_y = 0;
  std::vector<std::string> overrides;
};

struct SolveArgs {
  int order = 2;
  double cfl = 0.4;
  double tend = -1.0;
};

void add_address(CLI::App* cmd, AddressArgs& a) {
  cmd->add_option("dim", a.dim, "Dimension (1 or 2)")->required();
  cmd->add_option("type", a.type, "bump, macdonald, pseudo2d, dambreak or oscillation")->required();
  cmd->add_option("case", a.number, "Case number within the type")->required();
  cmd->add_option("--cells,-n", a.cells, "Number of cells (along x)")->required();
  cmd->add_option("--cells-y", a.cells_y, "Number of cells along y (2D cases; default: same as --cells)");
  cmd->add_option("--override", a.overrides, "Replace a case parameter, key=value (marks the output NONSTANDARD)");
}

void add_solver(CLI::App* cmd, SolveArgs& s) {
  cmd->add_option("--order", s.order, "Scheme order")->check(CLI::IsMember({1, 2}));
  cmd->add_option("--cfl", s.cfl, "CFL number");
  cmd->add_option("--tend", s.tend, "Final time of the run (default: the case's own)");
}

catalog::Request make_request(const AddressArgs& a) {
  auto type = catalog::parse_type(a.type);
  if (!type) throw catalog::UsageError("unknown type '" + a.type + "'");
  catalog::Request r;
  r.address = {a.dim, *type, a.number};
  if (!catalog::find(r.address)) throw catalog::UsageError("unknown case " + catalog::to_string(r.address));
  r.cells = a.cells;
  r.cells_y = a.cells_y;
  for (const auto& kv : a.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw catalog::UsageError("--override expects key=value, got '" + kv + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(kv.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != kv.size() - eq - 1) throw catalog::UsageError("bad number in --override '" + kv + "'");
    r.overrides[kv.substr(0, eq)] = v;
  }
  return r;
}

bench::SolverOptions solver_options(const SolveArgs& s) {
  bench::SolverOptions o;
  o.order = s.order;
  o.cfl = s.cfl;
  if (s.tend >= 0.0) o.final_time = s.tend;
  return o;
}

int cmd_generate(const AddressArgs& a, double t, bool compat) {
  auto r = make_request(a);
  if (t >= 0.0) r.time = t;
  if (compat && a.dim == 2) throw catalog::UsageError("--compat applies to 1D output only");
  const auto g = catalog::generate(r);
  std::ostringstream os;
  if (g.two_d) ascii::write(os, g.header, g.field2d);
  else ascii::write(os, g.header, g.field1d, compat);
  std::cout << os.str();
  return 0;
}

int cmd_solve(const AddressArgs& a, const SolveArgs& s) {
  const auto r = make_request(a);
  auto problem = catalog::solver_problem(r, solver_options(s).final_time);
  problem.config.order = s.order;
  problem.config.cfl = s.cfl;
  fv::Solver solver(problem.grid, problem.config, problem.initial);
  std::vector<std::string> log;
  auto note = [&] {
    std::ostringstream os;
    os << "residual step=" << solver.steps() << " t=" << ascii::format_number(solver.state().t)
       << " value=" << ascii::format_number(solver.last_residual());
    log.push_back(os.str());
  };
  try {
    while (solver.state().t < problem.config.final_time) {
      if (solver.step() == 0.0) break;
      if (solver.steps() % 100 == 0) note();
    }
  } catch (const SolverError& e) {
    note();
    for (const auto& l : log) std::cout << "# " << l << '\n';
    std::cerr << "swbench: solver failed: " << e.what() << '\n';
    return kExitRuntime;
  }
  note();
  std::ostringstream os;
  problem.header.push_back("order: " + std::to_string(s.order));
  ascii::write(os, problem.header, solver.field());
  for (const auto& l : log) os << "# " << l << '\n';
  os << "# residual final=" << ascii::format_number(solver.last_residual()) << " steps=" << solver.steps()
     << " clamped=" << solver.clamped() << '\n';
  std::cout << os.str();
  return 0;
}

int print_bands(const std::vector<bench::BandCheck>& bands) {
  bool ok = true;
  for (const auto& b : bands) {
    std::cout << "band " << (b.pass ? "PASS " : "FAIL ") << b.name;
    if (!b.detail.empty()) std::cout << " (" << b.detail << ")";
    std::cout << '\n';
    ok = ok && b.pass;
  }
  return ok ? 0 : kExitBand;
}

int cmd_bench(const AddressArgs& a, const SolveArgs& s, bool self, const std::string& input, double t) {
  auto r = make_request(a);
  if (self == !input.empty()) throw catalog::UsageError("bench needs exactly one of --self or --input FILE");
  if (self) {
    const auto run = bench::run_case(r, solver_options(s));
    const auto report = bench::compare(run.numeric, run.problem.reference);
    bench::write_report(std::cout, run.numeric, run.problem.reference, report);
    std::cout << "steps=" << run.result.steps << "\nclamped=" << run.result.clamped << '\n';
    return print_bands(bench::check_bands(r, run.problem.config.final_time, run.numeric, run.problem.reference, report));
  }

  const auto doc = ascii::parse_file(input);
  const bool transient = catalog::find(r.address)->transient;
  if (transient) {
    if (t >= 0.0) {
      r.time = t;
    } else {
      for (const auto& h : doc.header) {
        if (h.rfind("time:", 0) == 0) r.time = std::stod(h.substr(5));
      }
    }
  }
  if (a.dim == 2) {
    auto numeric = ascii::to_field_2d(doc);
    if (r.cells != numeric.nx) throw catalog::UsageError("--cells does not match the file");
    if (!r.cells_y) r.cells_y = numeric.ny;
    const auto g = catalog::generate(r);
    // Reference at file precision, so an unmodified generate output scores exactly zero.
    const auto report = bench::compare(numeric, ascii::quantized(g.field2d));
    bench::write_summary(std::cout, report);
    return print_bands({bench::default_band(report)});
  }
  auto numeric = ascii::to_field_1d(doc);
  if (r.cells != numeric.size()) throw catalog::UsageError("--cells does not match the file");
  const auto g = catalog::generate(r);
  const auto reference = ascii::quantized(g.field1d);
  const auto report = bench::compare(numeric, reference);
  bench::write_report(std::cout, numeric, reference, report);
  return print_bands(bench::check_bands(r, g.time, numeric, reference, report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic shallow-water benchmark solutions"};
  app.require_subcommand(1);

  AddressArgs gen_addr, solve_addr, bench_addr;
  SolveArgs solve_args, bench_args;
  double gen_t = -1.0, bench_t = -1.0;
  bool compat = false, self = false;
  std::string input;

  auto* gen = app.add_subcommand("generate", "Write an analytic solution as ASCII columns");
  add_address(gen, gen_addr);
  gen->add_option("--t", gen_t, "Time for transient solutions (default: the case's final time)");
  gen->add_flag("--compat", compat, "Only the x h u z columns");

  auto* solve = app.add_subcommand("solve", "Run the 1D finite-volume solver on a case");
  add_address(solve, solve_addr);
  add_solver(solve, solve_args);

  auto* bch = app.add_subcommand("bench", "Compare a numerical field with the analytic solution");
  add_address(bch, bench_addr);
  add_solver(bch, bench_args);
  bch->add_flag("--self", self, "Run the embedded solver");
  bch->add_option("--input", input, "Field file in swbench format");
  bch->add_option("--t", bench_t, "Time of the input field (default: its header)");

  auto* list = app.add_subcommand("list", "List every case address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (list->parsed()) {
      std::cout << catalog::listing();
      return 0;
    }
    if (gen->parsed()) return cmd_generate(gen_addr, gen_t, compat);
    if (solve->parsed()) return cmd_solve(solve_addr, solve_args);
    if (bch->parsed()) return cmd_bench(bench_addr, bench_args, self, input, bench_t);
  } catch (const catalog::UsageError& e) {
    std::cerr << "swbench: " << e.what() << "\n\nValid cases:\n" << catalog::listing();
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "swbench: " << input << ":" << e.line() << ": " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "swbench: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}

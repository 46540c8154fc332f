#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swbench/core/field.hpp"
#include "swbench/core/grid.hpp"
#include "swbench/fvsolver.hpp"

// Addressable registry of every analytic solution: (dimension, type, number)
// resolves to one entry with fixed default parameters.
namespace swb::catalog {

enum class Type { Bump, MacDonald, Pseudo2D, DamBreak, Oscillation };

std::string to_string(Type t);
std::optional<Type> parse_type(std::string_view s);

struct Address {
  int dim = 1;
  Type type = Type::Bump;
  int number = 1;
};

std::string to_string(const Address& a);  // "1d bump 3"

struct Entry {
  Address address;
  std::string key;    // stable snake_case name
  std::string title;
  bool transient;     // analytic solution depends on t
  bool solvable;      // the 1D solver can run it
  double final_time;  // analytic time for transients, solver end time otherwise
};

const std::vector<Entry>& entries();
// nullptr when the address is unknown.
const Entry* find(const Address& a);
// Human-readable table of every address.
std::string listing();

// Bad address, unknown override key, option that does not apply to the case.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, double>;

Params default_params(const Address& a);

struct Request {
  Address address;
  std::size_t cells = 500;
  std::size_t cells_y = 0;  // 2D only; 0 means same as cells
  std::optional<double> time;
  Params overrides;
};

// Defaults with the request's overrides applied; throws UsageError on unknown keys.
Params resolved_params(const Request& r);

struct Generated {
  std::vector<std::string> header;
  bool two_d = false;
  FlowField1D field1d;
  FlowField2D field2d;
  double time = 0.0;
  bool nonstandard = false;
};

Generated generate(const Request& r);

struct SolverProblem {
  Grid1D grid;
  fv::SolverConfig config;
  fv::SolverState initial;
  FlowField1D reference;  // analytic solution at config.final_time (steady profile otherwise)
  std::vector<std::string> header;
};

// Initial and boundary conditions for a solver run. `final_time` replaces the
// entry's default end time. Throws UsageError for cases the 1D solver cannot run.
SolverProblem solver_problem(const Request& r, std::optional<double> final_time = std::nullopt);

}  // namespace swb::catalog

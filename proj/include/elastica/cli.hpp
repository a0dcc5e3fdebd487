#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elastica/ode.hpp"
#include "elastica/types.hpp"

namespace elastica::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kNumericFailure = 3 };

struct Options {
  std::string config;
  std::string out;  // empty: standard output
  std::string trace;
  std::string a;
  std::string b;
  double step = 1e-3;
  double length = 10.0;
  ode::Method method = ode::Method::rk4;
  bool project = false;
  std::optional<double> tol;
  double lambda = 0.0;

  ode::RunOptions run_options() const;
};

/// One line of the invariant report.
struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass() const { return value <= tolerance; }
};

/// Invariant residuals of a curve trace. Each check carries its default
/// threshold unless `tol` overrides all of them.
std::vector<Check> invariant_checks(const CurveTrace& trace, std::optional<double> tol = {});

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err);
int cmd_hamiltonian(const Options& o, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream& err);
int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err);
int cmd_closed(const Options& o, std::ostream& out, std::ostream& err);
int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err);
int cmd_compare(const Options& o, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace elastica::cli

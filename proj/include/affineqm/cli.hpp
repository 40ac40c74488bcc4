// Command implementations behind the affineqm tool. Each command writes a
// self-describing table (CSV or JSON) to `out` and a short human-readable
// log to `log`, and returns the process exit code.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "affineqm/model.hpp"

namespace affineqm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Invalid command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ModelKind { Free, HalfHO, Shifted };
enum class OutputFormat { Csv, Json };
enum class VerifyTarget { Lemma, Closure, Commutator, Residuals, All };

ModelKind parse_model(const std::string& s);
std::string to_string(ModelKind m);
OutputFormat parse_output(const std::string& s);
std::string to_string(OutputFormat f);
VerifyTarget parse_verify_target(const std::string& s);
std::string to_string(VerifyTarget t);

struct RunConfig {
  ModelKind model = ModelKind::HalfHO;
  double b = 0.0;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double xmax = 12.0;
  int npoints = 8000;
  int count = 8;
  double tol = 1e-3;
  OutputFormat output = OutputFormat::Csv;
  bool dimensionless = false;

  PhysicalParams params() const { return {mass, omega, hbar}; }
  /// Throws UsageError on out-of-range values.
  void validate() const;
  /// One-line key=value echo written into every output header.
  std::string echo() const;
};

using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

struct Table {
  std::string command;
  std::vector<std::string> notes;  // header comment lines after the config
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV: '#' header comments, a header row, then data with 17 significant
/// digits. JSON: one object with "config", "columns" and "rows".
void write_table(const Table& table, const RunConfig& config, std::ostream& out);

/// Shortest round-trip decimal form of a double.
std::string format_shortest(double v);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_eigenfunc(const RunConfig& config, int n, int samples, std::ostream& out,
                  std::ostream& log);
int cmd_sweep_b(const RunConfig& config, const std::vector<double>& bvalues, std::ostream& out,
                std::ostream& log);
int cmd_verify(const RunConfig& config, VerifyTarget which, std::ostream& out,
               std::ostream& log);

/// `steps` evenly spaced values from bfrom to bto inclusive.
std::vector<double> linspace_b(double bfrom, double bto, int steps);

/// Full command-line entry point; argv[0] is the program name.
int run(int argc, char** argv, std::ostream& out, std::ostream& log);

}  // namespace affineqm::cli

#ifndef MZENT_CLI_CLI_HPP
#define MZENT_CLI_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mzent::cli {

enum class Command { point, fig2a, fig2b, fig3, fig4a, fig4b, compare };
enum class EngineChoice { gaussian, fock, both };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  Command command = Command::point;
  double n = 3.0;
  double gamma = 1.0;
  std::optional<double> gamma2;  // unset: same as gamma (point), full gamma2 set (fig3)
  double phi = 1.5707963267948966;
  std::optional<int> grid;       // unset: per-command default
  int dim = 0;                   // 0 means auto
  double tail_tol = 1e-8;
  EngineChoice engine = EngineChoice::gaussian;
  std::string output = "-";
  int precision = 9;
  int threads = 1;

  /// Throws DomainError on out-of-range fields.
  void validate() const;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Accepts plain reals and multiples/fractions of pi: "0.3", "pi", "-pi/4", "3pi/4", "3*pi/4", "2pi".
double parse_phase(std::string_view text);

/// Shortest round-trip-free rendering with `precision` significant digits; '.' separator, no locale.
std::string format_number(double value, int precision);

void write_csv(const Table& table, int precision, std::ostream& out);

/// Outcome of a command. `breach` marks a compare run whose discrepancies exceeded tolerance.
struct Outcome {
  Table table;
  bool breach = false;
  std::string summary;
};

Outcome execute(const RunConfig& config);

/// Full driver: parses argv (flags override --config file), runs, writes CSV.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mzent::cli

#endif  // MZENT_CLI_CLI_HPP

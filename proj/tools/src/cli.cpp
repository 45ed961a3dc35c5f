#include "mzent/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mzent/errors.hpp"
#include "mzent/fock.hpp"
#include "mzent/gaussian.hpp"
#include "mzent/input_spec.hpp"
#include "mzent/observables.hpp"
#include "mzent/validation.hpp"

namespace mzent::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kGammaSet = {0.2, 0.4, 0.6, 0.8, 1.0};
const std::vector<double> kGamma2Set = {0.0, 0.25, 0.5, 0.75, 1.0};

int grid_or(const RunConfig& c, int fallback) { return c.grid.value_or(fallback); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

// Rows are computed by index on up to `threads` workers and stored by index,
// so the table never depends on scheduling. The lowest-index failure is rethrown.
Table sweep(std::vector<std::string> header, std::size_t count, int threads,
            const std::function<std::vector<double>(std::size_t)>& row) {
  Table t;
  t.header = std::move(header);
  t.rows.resize(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        t.rows[i] = row(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return t;
}

void require_gaussian(const RunConfig& c, const char* command) {
  if (c.engine != EngineChoice::gaussian) {
    throw DomainError(std::string(command) +
                      " sweeps use the gaussian engine; use point or compare for the fock engine");
  }
}

fock::FockEvaluation run_fock(const InputSpec& a, const InputSpec& b, double phi, const RunConfig& c) {
  if (c.dim >= 2) return fock::evaluate(a, b, phi, {c.dim, c.tail_tol});
  return fock::evaluate_auto(a, b, phi, c.tail_tol);
}

Outcome cmd_point(const RunConfig& c) {
  const InputSpec a = InputSpec::from_energy(c.n, c.gamma);
  const double g2 = c.gamma2.value_or(c.gamma);
  const InputSpec b = InputSpec::from_energy(c.n, g2);

  Outcome o;
  std::vector<double> row = {c.n, c.gamma, g2, c.phi};
  o.table.header = {"N", "gamma", "gamma2", "phi"};
  auto append = [&row](std::initializer_list<double> values) {
    for (double v : values) row.push_back(v);
  };

  double eps_g = 0.0;
  double k_g = 0.0;
  double h_g = 0.0;
  if (c.engine != EngineChoice::fock) {
    const auto rep = gaussian::entanglement(a, b, c.phi);
    eps_g = rep.epsilon;
    k_g = K_gaussian(a, b, c.phi);
    h_g = H_gaussian(a, b, c.phi);
    const std::string suffix = c.engine == EngineChoice::both ? "_gaussian" : "";
    for (const char* name : {"epsilon", "n_phi", "K", "H"}) o.table.header.push_back(name + suffix);
    append({eps_g, rep.thermal_photons_a, k_g, h_g});
  }
  if (c.engine != EngineChoice::gaussian) {
    const auto ev = run_fock(a, b, c.phi, c);
    const std::string suffix = c.engine == EngineChoice::both ? "_fock" : "";
    for (const char* name : {"epsilon", "n_phi", "K", "H"}) o.table.header.push_back(name + suffix);
    o.table.header.insert(o.table.header.end(), {"D_used", "tail"});
    append({ev.epsilon, ev.thermal_photons_a, ev.K, ev.H, static_cast<double>(ev.dim), ev.tail});
    if (c.engine == EngineChoice::both) {
      o.table.header.insert(o.table.header.end(), {"d_epsilon", "d_K", "d_H"});
      append({std::abs(eps_g - ev.epsilon), std::abs(k_g - ev.K), std::abs(h_g - ev.H)});
    }
  }
  o.table.rows.push_back(std::move(row));
  return o;
}

Outcome cmd_fig2a(const RunConfig& c) {
  require_gaussian(c, "fig2a");
  const int n = grid_or(c, 33);
  if (n < 16) throw DomainError("fig2a needs grid >= 16 per axis");
  const auto gammas = linspace(0.0, 1.0, n);
  const auto phis = linspace(0.0, kPi / 2, n);
  Outcome o;
  o.table = sweep({"gamma", "phi", "epsilon"}, gammas.size() * phis.size(), c.threads, [&](std::size_t i) {
    const double g = gammas[i / phis.size()];
    const double phi = phis[i % phis.size()];
    const auto s = InputSpec::from_energy(c.n, g);
    return std::vector<double>{g, phi, gaussian::epsilon(s, s, phi)};
  });
  return o;
}

Outcome cmd_fig2b(const RunConfig& c) {
  require_gaussian(c, "fig2b");
  const int n = grid_or(c, 40);
  if (n < 2) throw DomainError("fig2b needs grid >= 2");
  const auto ns = logspace(0.1, 50.0, n);
  Outcome o;
  o.table = sweep({"N", "gamma", "epsilon"}, ns.size() * kGammaSet.size(), c.threads, [&](std::size_t i) {
    const double nn = ns[i / kGammaSet.size()];
    const double g = kGammaSet[i % kGammaSet.size()];
    const auto s = InputSpec::from_energy(nn, g);
    return std::vector<double>{nn, g, gaussian::epsilon(s, s, c.phi)};
  });
  return o;
}

Outcome cmd_fig3(const RunConfig& c) {
  require_gaussian(c, "fig3");
  const int n = grid_or(c, 33);
  if (n < 2) throw DomainError("fig3 needs grid >= 2");
  const auto g1 = linspace(0.0, 1.0, n);
  const std::vector<double> g2 = c.gamma2 ? std::vector<double>{*c.gamma2} : kGamma2Set;
  Outcome o;
  o.table = sweep({"gamma1", "gamma2", "epsilon"}, g1.size() * g2.size(), c.threads, [&](std::size_t i) {
    const double a = g1[i / g2.size()];
    const double b = g2[i % g2.size()];
    return std::vector<double>{
        a, b, gaussian::epsilon(InputSpec::from_energy(c.n, a), InputSpec::from_energy(c.n, b), c.phi)};
  });
  return o;
}

Outcome cmd_fig4(const RunConfig& c, bool homodyne) {
  require_gaussian(c, homodyne ? "fig4b" : "fig4a");
  const int n = grid_or(c, 40);
  if (n < 2) throw DomainError("fig4 needs grid >= 2");
  const auto ns = logspace(0.1, 50.0, n);
  Outcome o;
  o.table = sweep({"N", "gamma", "V"}, ns.size() * kGammaSet.size(), c.threads, [&](std::size_t i) {
    const double nn = ns[i / kGammaSet.size()];
    const double g = kGammaSet[i % kGammaSet.size()];
    const auto s = InputSpec::from_energy(nn, g);
    const double v = homodyne ? visibility_H(s, s).v : visibility_K(s, s).v;
    return std::vector<double>{nn, g, v};
  });
  return o;
}

Outcome cmd_compare(const RunConfig& c) {
  const auto grid = standard_validation_grid();
  std::vector<EngineComparison> results(grid.size());
  Outcome o;
  o.table = sweep({"N", "gamma", "phi", "d_epsilon", "d_K", "d_H", "D_used", "tail"}, grid.size(), c.threads,
                  [&](std::size_t i) {
                    const auto& p = grid[i];
                    const auto s = InputSpec::from_energy(p.mean_photons, p.gamma);
                    results[i] = compare_engines(s, s, p.phi, c.tail_tol, c.dim);
                    const auto& r = results[i];
                    return std::vector<double>{p.mean_photons, p.gamma, p.phi, r.d_epsilon, r.d_K, r.d_H,
                                               static_cast<double>(r.fock.dim), r.fock.tail};
                  });

  double max_eps = 0.0;
  double max_k = 0.0;
  double max_h = 0.0;
  std::ostringstream os;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = results[i];
    max_eps = std::max(max_eps, r.d_epsilon);
    max_k = std::max(max_k, r.d_K);
    max_h = std::max(max_h, r.d_H);
    if (!r.within_tolerance()) {
      o.breach = true;
      os << "tolerance breach at row " << i + 1 << ": N=" << grid[i].mean_photons << " gamma=" << grid[i].gamma
         << " phi=" << grid[i].phi << " d_epsilon=" << r.d_epsilon << " d_K=" << r.d_K << " d_H=" << r.d_H
         << "\n";
    }
  }
  os << "max d_epsilon=" << max_eps << " max d_K=" << max_k << " max d_H=" << max_h << " over " << grid.size()
     << " points\n";
  o.summary = os.str();
  return o;
}

const std::map<std::string, Command> kCommands = {
    {"point", Command::point}, {"fig2a", Command::fig2a}, {"fig2b", Command::fig2b},
    {"fig3", Command::fig3},   {"fig4a", Command::fig4a}, {"fig4b", Command::fig4b},
    {"compare", Command::compare}};
const std::map<std::string, EngineChoice> kEngines = {
    {"gaussian", EngineChoice::gaussian}, {"fock", EngineChoice::fock}, {"both", EngineChoice::both}};

double parse_real(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError("not a number: '" + std::string(text) + "'");
  return v;
}

}  // namespace

void RunConfig::validate() const {
  if (!std::isfinite(n) || n < 0.0) throw DomainError("--n must be a finite value >= 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("--gamma must lie in [0, 1]");
  if (gamma2 && !(*gamma2 >= 0.0 && *gamma2 <= 1.0)) throw DomainError("--gamma2 must lie in [0, 1]");
  if (!std::isfinite(phi)) throw DomainError("--phi must be finite");
  if (dim != 0 && dim < 2) throw DomainError("--dim must be 'auto' or an integer >= 2");
  if (!(tail_tol > 0.0 && tail_tol <= 1e-4)) throw DomainError("--tail-tol must lie in (0, 1e-4]");
  if (precision < 3 || precision > 17) throw DomainError("--precision must lie in [3, 17]");
  if (threads < 1) throw DomainError("--threads must be >= 1");
}

double parse_phase(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty phase");
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_real(s);

  std::string coeff = s.substr(0, pos);
  std::string rest = s.substr(pos + 2);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    factor = parse_real(coeff.front() == '+' ? coeff.substr(1) : coeff);
  }
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw DomainError("cannot parse phase '" + std::string(text) + "'");
    divisor = parse_real(rest.substr(1));
    if (divisor == 0.0) throw DomainError("phase divides by zero");
  }
  return factor * kPi / divisor;
}

std::string format_number(double value, int precision) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_csv(const Table& table, int precision, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i], precision);
    out << '\n';
  }
}

Outcome execute(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::point: return cmd_point(config);
    case Command::fig2a: return cmd_fig2a(config);
    case Command::fig2b: return cmd_fig2b(config);
    case Command::fig3: return cmd_fig3(config);
    case Command::fig4a: return cmd_fig4(config, false);
    case Command::fig4b: return cmd_fig4(config, true);
    case Command::compare: return cmd_compare(config);
  }
  throw DomainError("unknown command");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement and fringe visibility at the output of a Mach-Zehnder interferometer "
               "fed by two squeezed-coherent beams. Writes CSV."};
  app.set_config("--config", "", "Read options from a key=value file ('#' comments); flags override it");
  app.get_formatter()->column_width(34);

  RunConfig cfg;
  std::string command = "point";
  std::string phi_text = "pi/2";
  std::string dim_text = "auto";
  std::string engine = "gaussian";
  double gamma2 = 0.0;
  int grid = 0;

  app.add_option("--command", command, "point | fig2a | fig2b | fig3 | fig4a | fig4b | compare")
      ->check(CLI::IsMember({"point", "fig2a", "fig2b", "fig3", "fig4a", "fig4b", "compare"}))
      ->capture_default_str();
  app.add_option("--n", cfg.n, "Mean photon number N of each input beam")->capture_default_str();
  app.add_option("--gamma", cfg.gamma, "Squeezing fraction of beam a (and of beam b unless --gamma2)")
      ->capture_default_str();
  auto* g2 = app.add_option("--gamma2", gamma2, "Squeezing fraction of beam b (fig3: single gamma2 curve)");
  app.add_option("--phi", phi_text, "Interferometer phase in radians; accepts pi fractions like 3pi/4")
      ->capture_default_str();
  auto* grid_opt = app.add_option(
      "--grid", grid, "Sweep points: fig2a per axis (33), fig2b/fig4 N points (40), fig3 gamma1 points (33)");
  app.add_option("--dim", dim_text, "Fock truncation per mode: integer >= 2 or auto")->capture_default_str();
  app.add_option("--tail-tol", cfg.tail_tol, "Fock truncation tolerance in (0, 1e-4]")->capture_default_str();
  app.add_option("--engine", engine, "gaussian | fock | both (fock/both: point only; compare runs both)")
      ->check(CLI::IsMember({"gaussian", "fock", "both"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "CSV destination; '-' for standard output")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Significant digits in CSV cells, 3..17")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps (output does not depend on it)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cfg.command = kCommands.at(command);
    cfg.engine = kEngines.at(engine);
    if (g2->count() > 0) cfg.gamma2 = gamma2;
    if (grid_opt->count() > 0) cfg.grid = grid;
    cfg.phi = parse_phase(phi_text);
    if (dim_text == "auto") {
      cfg.dim = 0;
    } else {
      const double d = parse_real(dim_text);
      if (d != std::floor(d) || d < 2 || d > 4096) throw DomainError("--dim must be 'auto' or an integer >= 2");
      cfg.dim = static_cast<int>(d);
    }

    const Outcome outcome = execute(cfg);
    if (cfg.output == "-") {
      write_csv(outcome.table, cfg.precision, out);
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw DomainError("cannot open output file '" + cfg.output + "'");
      write_csv(outcome.table, cfg.precision, file);
    }
    if (!outcome.summary.empty()) err << outcome.summary;
    return outcome.breach ? kExitNumerical : kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace mzent::cli

// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance              run all criteria
//   acceptance --criterion K  run only criterion K (1..12)
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mzent/cli/cli.hpp"
#include "mzent/fock.hpp"
#include "mzent/gaussian.hpp"
#include "mzent/golden_section.hpp"
#include "mzent/observables.hpp"
#include "mzent/validation.hpp"

using namespace mzent;
using fock::Complex;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::vector<double> fig4_grid() {
  std::vector<double> n(40);
  for (int i = 0; i < 40; ++i) {
    n[static_cast<std::size_t>(i)] = std::exp(std::log(0.1) + std::log(500.0) * i / 39.0);
  }
  n.front() = 0.1;
  n.back() = 50.0;
  return n;
}

// Random spec with N in [0, n_max], gamma in [0, 1] and a uniformly random coherent phase.
InputSpec random_spec(std::mt19937_64& rng, double n_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  InputSpec s = InputSpec::from_energy(n_max * u(rng), u(rng));
  s.alpha *= std::polar(1.0, 2.0 * pi * u(rng));
  return s;
}

double purity(const fock::ModeDensity& rho) { return (rho.matrix * rho.matrix).trace().real(); }

Verdict criterion_1() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst_g = 0.0;
  double worst_f = 0.0;
  int max_dim = 0;
  for (int i = 0; i < 50; ++i) {
    const InputSpec a = random_spec(rng, 2.0);
    const InputSpec b = random_spec(rng, 2.0);
    worst_g = std::max(worst_g, std::abs(gaussian::epsilon(a, b, 0.0)));
    const auto ev = fock::evaluate_auto(a, b, 0.0);
    worst_f = std::max(worst_f, std::abs(ev.epsilon));
    max_dim = std::max(max_dim, ev.dim);
  }
  const double t = seconds_since(t0);
  return {worst_g <= 1e-10 && worst_f <= 1e-9 && t < 10.0,
          "max|eps_gaussian|=" + fmt(worst_g) + " max|eps_fock|=" + fmt(worst_f) + " D_max=" +
              std::to_string(max_dim) + " time=" + fmt(t) + "s"};
}

Verdict criterion_2() {
  double worst_g = 0.0;
  double worst_f = 0.0;
  for (double n : {0.5, 1.0, 3.0, 10.0}) {
    const auto s = InputSpec::from_energy(n, 1.0);
    worst_g = std::max(worst_g, std::abs(gaussian::epsilon(s, s, pi / 2) - 1.0));
    if (n <= 3.0) worst_f = std::max(worst_f, std::abs(fock::evaluate_auto(s, s, pi / 2).epsilon - 1.0));
  }
  return {worst_g <= 1e-10 && worst_f <= 2e-3,
          "max|eps_gaussian-1|=" + fmt(worst_g) + " max|eps_fock-1| (N<=3)=" + fmt(worst_f)};
}

Verdict criterion_3() {
  double worst_half = 0.0;
  double worst_zero = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double r = 0.1 * i;
    for (double gamma : {0.25, 0.5, 1.0}) {
      // fix the squeezing, let the coherent part follow from gamma
      const double nu2 = std::sinh(r) * std::sinh(r);
      const double n = gamma > 0.0 ? nu2 / gamma : 0.0;
      InputSpec s = InputSpec::from_energy(n, gamma);
      s.r = r;
      worst_half = std::max(worst_half, std::abs(gaussian::entanglement(s, s, pi / 2).thermal_photons_a - nu2));
      worst_zero = std::max(worst_zero, std::abs(gaussian::entanglement(s, s, 0.0).thermal_photons_a));
    }
  }
  return {worst_half <= 1e-12 && worst_zero <= 1e-12,
          "max|N_phi(pi/2)-gamma N|=" + fmt(worst_half) + " max|N_phi(0)|=" + fmt(worst_zero) + " r in [0,2]"};
}

Verdict criterion_4() {
  const InputSpec a = InputSpec::coherent(std::polar(1.2, 0.3));
  const InputSpec b = InputSpec::coherent(-0.8);
  const fock::FockCutoff cutoff = fock::auto_cutoff(a, b, pi / 2, 1e-8);
  const auto in = fock::build_input(a, b, cutoff);
  double worst_eps = 0.0;
  double worst_purity = 1.0;
  for (int i = 0; i < 32; ++i) {
    const double phi = 2.0 * pi * i / 32.0;
    worst_eps = std::max(worst_eps, std::abs(gaussian::epsilon(a, b, phi)));
    const auto out = fock::MzUnitary(phi, cutoff.dim).apply(in);
    const double norm2 = out.norm_squared() * out.norm_squared();
    for (Mode m : {Mode::a, Mode::b}) {
      worst_purity = std::min(worst_purity, purity(fock::reduced_density(out, m)) / norm2);
    }
  }
  return {worst_eps <= 1e-10 && worst_purity > 1.0 - 1e-8,
          "max|eps|=" + fmt(worst_eps) + " max purity deficit=" + fmt(1.0 - worst_purity) + " D=" +
              std::to_string(cutoff.dim)};
}

Verdict criterion_5() {
  const auto t0 = Clock::now();
  double d_eps = 0.0;
  double d_k = 0.0;
  double d_h = 0.0;
  int breaches = 0;
  int max_dim = 0;
  for (const auto& p : standard_validation_grid()) {
    const auto s = InputSpec::from_energy(p.mean_photons, p.gamma);
    const auto c = compare_engines(s, s, p.phi);
    d_eps = std::max(d_eps, c.d_epsilon);
    d_k = std::max(d_k, c.d_K / (1.0 + c.K_gaussian));
    d_h = std::max(d_h, c.d_H / (1.0 + c.H_gaussian));
    max_dim = std::max(max_dim, c.fock.dim);
    if (!c.within_tolerance()) ++breaches;
  }
  const double t = seconds_since(t0);
  return {breaches == 0 && t < 300.0,
          "36 points, max d_eps=" + fmt(d_eps) + " max d_K/(1+K)=" + fmt(d_k) + " max d_H/(1+H)=" + fmt(d_h) +
              " D_max=" + std::to_string(max_dim) + " breaches=" + std::to_string(breaches) + " time=" + fmt(t) +
              "s"};
}

Verdict criterion_6() {
  const int dim = 40;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const InputSpec a = random_spec(rng, 0.5);
    const InputSpec b = random_spec(rng, 0.5);
    const double phi = 2.0 * pi * u(rng);
    const auto in = fock::build_input(a, b, {dim, 1e-8});
    const auto out = fock::MzUnitary(phi, dim).apply(in);
    const Complex k_in = fock::expectation(fock::expanded_K_operator(phi, dim), in);
    const Complex h_in = fock::expectation(fock::expanded_H_operator(phi, dim), in);
    worst = std::max({worst, std::abs(k_in - fock::expectation_K(out)), std::abs(h_in - fock::expectation_H(out))});
  }
  return {worst <= 1e-8, "D=40, 10 specs (N<=0.5 per beam), max deviation=" + fmt(worst)};
}

Verdict criterion_7() {
  double worst_v = 0.0;
  double worst_h = 0.0;
  for (double n : fig4_grid()) {
    const auto s = InputSpec::from_energy(n, 1.0);
    worst_v = std::max(worst_v, std::abs(visibility_H(s, s).v - 1.0));
    worst_h = std::max(worst_h, H_gaussian(s, s, pi / 2) / (1.0 + n * n));
  }
  const auto sv = InputSpec::from_energy(1.0, 1.0);
  const auto out = fock::MzUnitary(pi / 2, 96).apply(fock::build_input(sv, sv, {96, 1e-8}));
  const double h_fock = fock::expectation_H(out);
  return {worst_v <= 1e-6 && worst_h <= 1e-12 && h_fock <= 1e-12,
          "max|V_H-1|=" + fmt(worst_v) + " max H(pi/2)/(1+N^2)=" + fmt(worst_h) + " H_fock(N=1)=" + fmt(h_fock)};
}

Verdict criterion_8() {
  double prev = 2.0;
  bool decreasing = true;
  double max_above5 = 0.0;
  double first = 0.0;
  double last = 0.0;
  for (double n : fig4_grid()) {
    const auto s = InputSpec::from_energy(n, 1.0);
    const double v = visibility_K(s, s).v;
    if (v >= prev) decreasing = false;
    if (n >= 5.0) max_above5 = std::max(max_above5, v);
    if (prev > 1.5) first = v;
    last = v;
    prev = v;
  }
  return {decreasing && max_above5 < 0.5, std::string("decreasing=") + (decreasing ? "yes" : "no") +
                                              " V_K(0.1)=" + fmt(first) + " V_K(50)=" + fmt(last) +
                                              " max V_K(N>=5)=" + fmt(max_above5)};
}

Verdict criterion_9() {
  int violations = 0;
  int points = 0;
  double worst = 1.0;
  for (double n : fig4_grid()) {
    if (n < 1.0) continue;
    for (double g : {0.2, 0.4, 0.6, 0.8, 1.0}) {
      const auto s = InputSpec::from_energy(n, g);
      const double margin = visibility_H(s, s).v - visibility_K(s, s).v;
      worst = std::min(worst, margin);
      ++points;
      if (margin < 0.0) ++violations;
    }
  }
  return {violations == 0, std::to_string(points) + " points with N>=1, violations=" + std::to_string(violations) +
                               " min(V_H-V_K)=" + fmt(worst)};
}

Verdict criterion_10() {
  auto eps = [](double g1) {
    return gaussian::epsilon(InputSpec::from_energy(3.0, g1), InputSpec::from_energy(3.0, 0.0), pi / 2);
  };
  double best = 0.0;
  double best_g = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double g = i / 200.0;
    if (eps(g) > best) {
      best = eps(g);
      best_g = g;
    }
  }
  const auto refined = golden_section_minimize([&](double g) { return -eps(std::clamp(g, 0.0, 1.0)); },
                                               std::max(0.0, best_g - 0.005), std::min(1.0, best_g + 0.005), 1e-9);
  best = std::max(best, -refined.fx);
  return {best < 0.5, "max over gamma1 of eps(N=3, gamma2=0)=" + fmt(best) + " at gamma1~" + fmt(best_g)};
}

Verdict criterion_11() {
  bool ok = true;
  std::string detail;
  for (double g : {0.3, 0.5, 0.8}) {
    const auto s = InputSpec::from_energy(1000.0, g);
    const double gap = std::abs(gaussian::epsilon(s, s, pi / 2) - gaussian::epsilon_asymptotic(1000.0, g));
    const bool sub = gap <= 0.02;
    ok = ok && sub;
    detail += "gamma=" + fmt(g) + ":|d|=" + fmt(gap) + (sub ? "" : "(>0.02)") + " ";
  }
  const auto s = InputSpec::from_energy(100.0, 0.5);
  const double vh = visibility_H(s, s).v;
  const double target = vh_asymptotic(100.0, 0.5);
  const double rel = std::abs(vh - target) / target;
  ok = ok && rel <= 0.2;
  detail += "V_H(100,0.5)=" + fmt(vh) + " vs " + fmt(target) + " rel=" + fmt(rel);
  return {ok, detail};
}

Verdict criterion_12() {
  std::mt19937_64 rng(1212);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int symplectic = 0;
  int uncertainty = 0;
  int energy = 0;
  int symmetry = 0;
  for (int i = 0; i < 200; ++i) {
    const InputSpec a = random_spec(rng, 10.0);
    const InputSpec b = random_spec(rng, 10.0);
    const double phi = 4.0 * pi * (u(rng) - 0.5);
    if (!is_symplectic(gaussian::mz_map(phi).matrix, 1e-12)) ++symplectic;
    const auto out = gaussian::output_state(a, b, phi);
    try {
      out.validate();
    } catch (const std::exception&) {
      ++uncertainty;
    }
    const double n_in = a.mean_photons() + b.mean_photons();
    if (std::abs(out.mean_photons(Mode::a) + out.mean_photons(Mode::b) - n_in) > 1e-10 * (1.0 + n_in)) ++energy;
    const auto rep = gaussian::entanglement(a, b, phi);
    if (std::abs(rep.entropy_a - rep.entropy_b) > 1e-9 * (1.0 + rep.entropy_a)) ++symmetry;
  }
  for (int i = 0; i < 4; ++i) {
    const InputSpec a = random_spec(rng, 1.0);
    const InputSpec b = random_spec(rng, 1.0);
    const auto ev = fock::evaluate_auto(a, b, 2.0 * pi * u(rng));
    if (std::abs(ev.entropy_a - ev.entropy_b) > 1e-6) ++symmetry;
  }

  int csv = 0;
  for (const char* command : {"fig2a", "fig3", "fig4a"}) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "4"}) {
      const char* argv[] = {"mzent", "--command", command, "--grid", "16", "--threads", threads};
      std::ostringstream out;
      std::ostringstream err;
      if (cli::run(7, argv, out, err) != 0) ++csv;
      outputs.push_back(out.str());
    }
    if (outputs[0] != outputs[1] || outputs[0] != outputs[2]) ++csv;
  }
  const int failures = symplectic + uncertainty + energy + symmetry + csv;
  return {failures == 0, "failures: symplectic=" + std::to_string(symplectic) + " uncertainty=" +
                             std::to_string(uncertainty) + " energy=" + std::to_string(energy) +
                             " entropy-symmetry=" + std::to_string(symmetry) + " csv-determinism=" +
                             std::to_string(csv)};
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"zero entanglement at phi=0", criterion_1},
      {"maximal entanglement for squeezed vacuum at pi/2", criterion_2},
      {"twin-beam thermal photon number", criterion_3},
      {"coherent inputs stay separable", criterion_4},
      {"gaussian/fock oracle equivalence", criterion_5},
      {"Heisenberg-picture expansions of K and H", criterion_6},
      {"V_H = 1 for squeezed vacuum", criterion_7},
      {"V_K saturation below 1/2", criterion_8},
      {"V_H >= V_K for N >= 1", criterion_9},
      {"unequal squeezing bound", criterion_10},
      {"large-N asymptotics", criterion_11},
      {"property suites", criterion_12},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int k = std::atoi(argv[++i]);
      if (k < 1 || k > static_cast<int>(criteria.size())) {
        std::cerr << "criterion must be in 1.." << criteria.size() << "\n";
        return 2;
      }
      selected.push_back(k);
    } else {
      std::cerr << "usage: acceptance [--criterion K]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);
  }

  int failed = 0;
  for (int k : selected) {
    const auto& c = criteria[static_cast<std::size_t>(k - 1)];
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", k, c.title, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

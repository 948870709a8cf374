// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Each criterion carries its tolerance and a wall-clock budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "byzdet/attack.hpp"
#include "byzdet/detection.hpp"
#include "byzdet/fusion.hpp"
#include "byzdet/simulate.hpp"
#include "byzdet/sweep.hpp"
#include "oracles.hpp"

using namespace byzdet;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct GridMax {
  double a1 = 0.0, a2 = 0.0, value = -1e300;
};

GridMax argmax(const SweepResult& surface) {
  GridMax best;
  for (std::size_t i = 0; i < surface.axis1_values.size(); ++i) {
    for (std::size_t j = 0; j < surface.axis2_values.size(); ++j) {
      if (surface.at(i, j) > best.value) {
        best = {surface.axis1_values[i], surface.axis2_values[j], surface.at(i, j)};
      }
    }
  }
  return best;
}

// --- criterion 1: critical power ------------------------------------------
void criterion_blinding(Checker& check) {
  const auto alpha = blinding_fraction(1.0, 1.0);
  check.require(alpha.has_value() && *alpha == 0.5, "blinding_fraction(1,1) != 0.5");

  const NetworkConfig cfg{10, {0.8, 0.1}, {0.4, 0.6}, {0.5, 1.0, 1.0}};
  const double best = brute_force_rule_search(cfg).best_pe;
  check.require(std::abs(best - 0.4) <= 1e-12,
                "blind-point min over rules " + std::to_string(best) + " != min prior 0.4");
}

// --- criterion 2: local-error surfaces ------------------------------------
void criterion_local_surfaces(Checker& check) {
  SweepSpec spec;
  spec.base = {10, {0.8, 0.1}, {0.5, 0.5}, {0.5, 0.0, 0.0}};
  spec.axis1 = {SweepParam::P10, 0.0, 1.0, 0.01};
  spec.axis2 = {SweepParam::P01, 0.0, 1.0, 0.01};
  spec.objective = SweepObjective::LocalError;

  const GridMax even = argmax(evaluate_sweep(spec));
  check.require(even.a1 == 1.0 && even.a2 == 1.0, "even-prior argmax not at (1,1)");

  spec.base.priors = {0.1, 0.9};
  const GridMax skewed = argmax(evaluate_sweep(spec));
  check.require(skewed.a1 == 0.0 && skewed.a2 == 1.0, "skewed-prior argmax not at (0,1)");
}

// --- criterion 3: majority-rule surface structure --------------------------
void criterion_majority_structure(Checker& check) {
  for (int n : {10, 11}) {
    const FusionRule rule = majority_rule(n);
    SweepSpec spec;
    spec.base = {n, {0.8, 0.1}, {0.4, 0.6}, {0.30, 0.0, 0.0}};
    spec.axis1 = {SweepParam::P10, 0.0, 1.0, 0.01};
    spec.axis2 = {SweepParam::P01, 0.0, 1.0, 0.01};
    spec.objective = SweepObjective::SystemErrorAtRule;
    spec.rule = rule;
    const SweepResult surface = evaluate_sweep(spec);
    const std::size_t count = surface.axis1_values.size();

    for (std::size_t fixed = 0; fixed < count; ++fixed) {
      const auto row = oracle::first_difference_profile(
          [&](int i) { return surface.at(fixed, i); }, static_cast<int>(count));
      const auto col = oracle::first_difference_profile(
          [&](int i) { return surface.at(i, fixed); }, static_cast<int>(count));
      check.require(row.sign_changes <= 1 && row.valley,
                    "n=" + std::to_string(n) + ": p01 slice not unimodal-valley");
      check.require(col.sign_changes <= 1 && col.valley,
                    "n=" + std::to_string(n) + ": p10 slice not unimodal-valley");
      if (!check.failures.empty()) return;
    }

    const GridMax best = argmax(surface);
    const bool corner = (best.a1 == 1.0 && best.a2 == 0.0) ||
                        (best.a1 == 0.0 && best.a2 == 1.0) ||
                        (best.a1 == 1.0 && best.a2 == 1.0);
    check.require(corner, "n=" + std::to_string(n) + ": surface argmax (" +
                              std::to_string(best.a1) + "," + std::to_string(best.a2) +
                              ") not a flip corner");
  }
}

// --- criterion 4: min-over-rules surfaces ----------------------------------
void criterion_min_rule_surfaces(Checker& check) {
  SweepSpec spec;
  spec.base = {11, {0.6, 0.4}, {0.4, 0.6}, {0.4, 0.0, 0.0}};
  spec.axis1 = {SweepParam::P10, 0.0, 1.0, 0.05};
  spec.axis2 = {SweepParam::P01, 0.0, 1.0, 0.05};
  spec.objective = SweepObjective::MinErrorOverRules;

  const GridMax low = argmax(evaluate_sweep(spec));
  check.require(low.a1 == 1.0 && low.a2 == 1.0, "alpha=0.4 argmax of min_K P_E not at (1,1)");

  spec.base.attack.alpha = 0.8;
  const SweepResult surface = evaluate_sweep(spec);
  int on_line = 0;
  for (std::size_t i = 0; i < surface.axis1_values.size(); ++i) {
    for (std::size_t j = 0; j < surface.axis2_values.size(); ++j) {
      if (std::abs(surface.axis1_values[i] + surface.axis2_values[j] - 1.25) <= 1e-9) {
        ++on_line;
        if (std::abs(surface.at(i, j) - 0.4) > 1e-9) {
          check.require(false, "blinding-line cell off the 0.4 floor at p10=" +
                                   std::to_string(surface.axis1_values[i]));
          return;
        }
      }
    }
  }
  check.require(on_line >= 10, "too few grid cells on the blinding line");
}

// --- criterion 5: optimal rule vs brute force + sandwich -------------------
void criterion_rule_oracle(Checker& check) {
  oracle::ConfigGen gen(0xACCE5501ULL);
  int tested = 0;
  while (tested < 2000) {
    const NetworkConfig cfg = gen.network(1, 25);
    const double mass = cfg.attack.alpha * (cfg.attack.p10 + cfg.attack.p01);
    if (std::abs(mass - 1.0) < 1e-9) continue;
    ++tested;
    const double best = brute_force_rule_search(cfg).best_pe;
    const double at_optimal = system_error(cfg, optimal_fusion_rule(cfg)).pe_system;
    if (at_optimal > best + 1e-12) {
      check.require(false, "closed-form rule loses to brute force by " +
                               std::to_string(at_optimal - best));
      return;
    }
    if (cfg.attack.alpha <= 0.5 && mass < 1.0) {
      const auto bounds = sandwich_bounds(cfg);
      const double k_ceil = std::ceil(map_threshold(cfg));
      if (!(bounds.b < k_ceil && k_ceil < bounds.a)) {
        check.require(false, "sandwich bounds violated at config " + std::to_string(tested));
        return;
      }
    }
  }
}

// --- criterion 6: derivative suite -----------------------------------------
void criterion_derivatives(Checker& check) {
  oracle::ConfigGen gen(0xACCE5506ULL);
  for (int i = 0; i < 100; ++i) {
    const NetworkConfig cfg = gen.network_interior(2, 20);
    const int k = gen.uniform_int(1, cfg.n);
    const double fd10 = oracle::central_diff(
        [&](double x) {
          NetworkConfig c = cfg;
          c.attack.p10 = x;
          return system_error(c, {k, Polarity::Normal}).pe_system;
        },
        cfg.attack.p10);
    const double fd01 = oracle::central_diff(
        [&](double x) {
          NetworkConfig c = cfg;
          c.attack.p01 = x;
          return system_error(c, {k, Polarity::Normal}).pe_system;
        },
        cfg.attack.p01);
    const double fd_local10 = oracle::central_diff(
        [&](double x) {
          AttackConfig a = cfg.attack;
          a.p10 = x;
          return local_error(a, cfg.sensor, cfg.priors);
        },
        cfg.attack.p10);
    const double fd_local01 = oracle::central_diff(
        [&](double x) {
          AttackConfig a = cfg.attack;
          a.p01 = x;
          return local_error(a, cfg.sensor, cfg.priors);
        },
        cfg.attack.p01);
    const auto [dl10, dl01] = d_pe_local(cfg.attack, cfg.sensor, cfg.priors);
    const bool ok = std::abs(d_pE_dP10(cfg, k) - fd10) <= 1e-6 &&
                    std::abs(d_pE_dP01(cfg, k) - fd01) <= 1e-6 &&
                    std::abs(dl10 - fd_local10) <= 1e-6 &&
                    std::abs(dl01 - fd_local01) <= 1e-6;
    if (!ok) {
      check.require(false, "derivative/finite-difference mismatch at config " +
                               std::to_string(i));
      return;
    }
  }

  for (int n : {10, 11}) {
    const int k = majority_rule(n).k;
    for (double fixed : {0.0, 0.5, 1.0}) {
      double prev10 = -1e300, prev01 = -1e300;
      for (int i = 0; i <= 100; ++i) {
        const double x = i * 0.01;
        const double v10 = r_p10({n, {0.8, 0.1}, {0.4, 0.6}, {0.30, x, fixed}}, k);
        const double v01 = r_p01({n, {0.8, 0.1}, {0.4, 0.6}, {0.30, fixed, x}}, k);
        if (!(v10 > prev10) || !(v01 > prev01)) {
          check.require(false, "r not strictly increasing on the grid");
          return;
        }
        prev10 = v10;
        prev01 = v01;
      }
    }
  }
}

// --- criterion 7: Monte Carlo concordance ----------------------------------
void criterion_monte_carlo(Checker& check) {
  oracle::ConfigGen gen(0xACCE5507ULL);
  int within = 0;
  for (int i = 0; i < 50; ++i) {
    SimConfig cfg;
    cfg.network = gen.network(1, 20);
    cfg.rule = {gen.uniform_int(0, cfg.network.n + 1),
                gen.uniform_int(0, 1) ? Polarity::Normal : Polarity::Inverted};
    cfg.trials = 100000;
    cfg.seed = 0xC0FFEE00ULL + i;
    within += !validate_against_closed_form(cfg).flagged;
  }
  check.require(within >= 47, "only " + std::to_string(within) +
                                  "/50 configs within 3 standard errors");

  SimConfig cfg;
  cfg.network = {12, {0.8, 0.1}, {0.4, 0.6}, {0.37, 0.9, 0.4}};
  cfg.rule = majority_rule(12);
  cfg.trials = 100000;
  cfg.seed = 77;
  const SimResult serial = simulate_reference(cfg);
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2}) {
    omp_set_num_threads(threads);
    check.require(simulate(cfg) == serial,
                  "thread count " + std::to_string(threads) + " changed the result");
  }
  omp_set_num_threads(saved);
#else
  check.require(simulate(cfg) == serial, "parallel result differs from reference");
#endif
}

// --- criterion 8: dominance of (1,1) for alpha <= 0.5 -----------------------
void criterion_dominance(Checker& check) {
  for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    NetworkConfig cfg{11, {0.6, 0.4}, {0.4, 0.6}, {alpha, 1.0, 1.0}};
    const double at_corner = brute_force_rule_search(cfg).best_pe;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        cfg.attack.p10 = i == 20 ? 1.0 : i * 0.05;
        cfg.attack.p01 = j == 20 ? 1.0 : j * 0.05;
        const double value = brute_force_rule_search(cfg).best_pe;
        if (at_corner < value - 1e-12) {
          check.require(false, "alpha=" + std::to_string(alpha) + ": (1,1) dominated at p10=" +
                                   std::to_string(cfg.attack.p10) + " p01=" +
                                   std::to_string(cfg.attack.p01));
          return;
        }
      }
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "critical power blinds the fusion center at alpha=0.5", 1.0, criterion_blinding},
      {2, "local-error surfaces peak at the predicted corners", 5.0, criterion_local_surfaces},
      {3, "majority-rule surfaces are unimodal valleys with corner maxima", 30.0,
       criterion_majority_structure},
      {4, "min-over-rules surfaces: (1,1) peak and blinding-line floor", 60.0,
       criterion_min_rule_surfaces},
      {5, "closed-form optimal rule matches exhaustive search + sandwich", 60.0,
       criterion_rule_oracle},
      {6, "closed-form derivatives match finite differences; r increases", 10.0,
       criterion_derivatives},
      {7, "Monte Carlo agrees with closed forms; thread-count invariant", 300.0,
       criterion_monte_carlo},
      {8, "(1,1) dominates every strategy for alpha <= 0.5", 60.0, criterion_dominance},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      check.require(false, "runtime " + std::to_string(elapsed) + "s over budget " +
                               std::to_string(criterion.budget_seconds) + "s");
    }
    if (check.failures.empty()) {
      std::printf("[PASS] criterion %d: %s (%.2fs)\n", criterion.id, criterion.name, elapsed);
    } else {
      ++failed;
      std::printf("[FAIL] criterion %d: %s (%.2fs) -- %s\n", criterion.id, criterion.name,
                  elapsed, check.failures.front().c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}

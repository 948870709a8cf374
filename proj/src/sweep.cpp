#include "byzdet/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "byzdet/detection.hpp"
#include "byzdet/fusion.hpp"

namespace byzdet {

namespace {

double evaluate_cell(const SweepSpec& spec, const NetworkConfig& cfg) {
  switch (spec.objective) {
    case SweepObjective::LocalError:
      return local_error(cfg.attack, cfg.sensor, cfg.priors);
    case SweepObjective::SystemErrorAtRule: {
      const FusionRule rule = spec.rule ? *spec.rule : majority_rule(cfg.n);
      return system_error(cfg, rule).pe_system;
    }
    case SweepObjective::MinErrorOverRules:
      return brute_force_rule_search(cfg).best_pe;
  }
  throw validation_error("unknown sweep objective");
}

SweepResult prepare(const SweepSpec& spec, std::vector<NetworkConfig>& cells) {
  checked(spec.base);
  if (spec.rule) checked(*spec.rule, spec.base.n);
  SweepResult result;
  result.axis1_values = axis_values(spec.axis1);
  result.axis2_values = axis_values(spec.axis2);
  result.values.assign(result.axis1_values.size() * result.axis2_values.size(), 0.0);

  // Build and validate every cell config up front so the parallel region
  // never throws.
  cells.reserve(result.values.size());
  for (double v1 : result.axis1_values) {
    for (double v2 : result.axis2_values) {
      NetworkConfig cfg = with_param(spec.base, spec.axis1.param, v1);
      cfg = with_param(cfg, spec.axis2.param, v2);
      cells.push_back(checked(cfg));
    }
  }
  return result;
}

}  // namespace

std::vector<double> axis_values(const SweepAxis& axis) {
  if (!(axis.step > 0.0)) throw validation_error("sweep step must be > 0");
  if (axis.max < axis.min) throw validation_error("sweep range must have min <= max");
  const double span = (axis.max - axis.min) / axis.step;
  if (span > 1e7) throw validation_error("sweep axis has too many points");
  const int count = static_cast<int>(std::floor(span + 1e-6)) + 1;
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) values[i] = axis.min + i * axis.step;
  if (std::abs(values.back() - axis.max) < 1e-9) values.back() = axis.max;
  return values;
}

SweepResult evaluate_sweep(const SweepSpec& spec) {
  std::vector<NetworkConfig> cells;
  SweepResult result = prepare(spec, cells);
  const long long total = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < total; ++i) {
    result.values[i] = evaluate_cell(spec, cells[i]);
  }
  return result;
}

SweepResult evaluate_sweep_serial(const SweepSpec& spec) {
  std::vector<NetworkConfig> cells;
  SweepResult result = prepare(spec, cells);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    result.values[i] = evaluate_cell(spec, cells[i]);
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  std::string out = "axis1,axis2,objective_value\n";
  char row[96];
  for (std::size_t i1 = 0; i1 < result.axis1_values.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < result.axis2_values.size(); ++i2) {
      std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g\n", result.axis1_values[i1],
                    result.axis2_values[i2], result.at(i1, i2));
      out += row;
    }
  }
  return out;
}

SweepParam sweep_param_from_name(const std::string& name) {
  if (name == "p10") return SweepParam::P10;
  if (name == "p01") return SweepParam::P01;
  if (name == "alpha") return SweepParam::Alpha;
  if (name == "pd") return SweepParam::Pd;
  if (name == "pf") return SweepParam::Pf;
  if (name == "p0") return SweepParam::P0;
  throw validation_error("unknown sweep parameter '" + name +
                         "' (expected p10|p01|alpha|pd|pf|p0)");
}

const char* sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::P10: return "p10";
    case SweepParam::P01: return "p01";
    case SweepParam::Alpha: return "alpha";
    case SweepParam::Pd: return "pd";
    case SweepParam::Pf: return "pf";
    case SweepParam::P0: return "p0";
  }
  return "?";
}

NetworkConfig with_param(NetworkConfig cfg, SweepParam param, double value) {
  switch (param) {
    case SweepParam::P10: cfg.attack.p10 = value; break;
    case SweepParam::P01: cfg.attack.p01 = value; break;
    case SweepParam::Alpha: cfg.attack.alpha = value; break;
    case SweepParam::Pd: cfg.sensor.pd = value; break;
    case SweepParam::Pf: cfg.sensor.pf = value; break;
    case SweepParam::P0:
      cfg.priors.p0 = value;
      cfg.priors.p1 = 1.0 - value;
      break;
  }
  return cfg;
}

}  // namespace byzdet

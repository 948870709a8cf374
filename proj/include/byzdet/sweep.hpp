#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "byzdet/types.hpp"

namespace byzdet {

enum class SweepObjective { LocalError, SystemErrorAtRule, MinErrorOverRules };

enum class SweepParam { P10, P01, Alpha, Pd, Pf, P0 };

struct SweepAxis {
  SweepParam param = SweepParam::P10;
  double min = 0.0;
  double max = 1.0;
  double step = 0.01;
};

struct SweepSpec {
  NetworkConfig base;
  SweepAxis axis1;
  SweepAxis axis2;
  SweepObjective objective = SweepObjective::LocalError;
  std::optional<FusionRule> rule;  ///< SystemErrorAtRule only; majority when unset
};

/// Row-major surface: values[i1 * axis2_values.size() + i2].
struct SweepResult {
  std::vector<double> axis1_values;
  std::vector<double> axis2_values;
  std::vector<double> values;

  double at(std::size_t i1, std::size_t i2) const {
    return values[i1 * axis2_values.size() + i2];
  }
};

/// Inclusive grid for one axis; the endpoint lands exactly on max when the
/// span is a whole number of steps.
std::vector<double> axis_values(const SweepAxis& axis);

/// Evaluates the objective over the grid, cells in parallel; rows are stored
/// in deterministic row-major order regardless of scheduling.
SweepResult evaluate_sweep(const SweepSpec& spec);

/// Serial reference for the parallel sweep.
SweepResult evaluate_sweep_serial(const SweepSpec& spec);

/// CSV with header "axis1,axis2,objective_value", rows in row-major axis
/// order, floats at 12 significant digits, LF line endings.
std::string to_csv(const SweepResult& result);

SweepParam sweep_param_from_name(const std::string& name);
const char* sweep_param_name(SweepParam param);

NetworkConfig with_param(NetworkConfig cfg, SweepParam param, double value);

}  // namespace byzdet

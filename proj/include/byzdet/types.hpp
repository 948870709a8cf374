#pragma once

#include <stdexcept>
#include <string>

namespace byzdet {

// Boundary tolerance for probability validation: values within this of [0,1]
// are clamped, values outside are rejected.
inline constexpr double kProbabilityTolerance = 1e-12;

// Tolerance on |pi11 - pi10| (and on alpha*(p10+p01) - 1) below which the
// received data carries no information about the hypothesis.
inline constexpr double kBlindTolerance = 1e-12;

class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Per-node operating point, identical across nodes.
struct SensorModel {
  double pd = 0.0;  ///< P(v=1 | H1)
  double pf = 0.0;  ///< P(v=1 | H0)
};

/// Hypothesis prior probabilities.
struct Priors {
  double p0 = 0.5;
  double p1 = 0.5;
};

/// Byzantine population fraction and flip probabilities.
struct AttackConfig {
  double alpha = 0.0;  ///< fraction/probability a node is Byzantine
  double p10 = 0.0;    ///< P(report 1 | local decision 0) for a Byzantine
  double p01 = 0.0;    ///< P(report 0 | local decision 1) for a Byzantine
};

struct NetworkConfig {
  int n = 1;
  SensorModel sensor;
  Priors priors;
  AttackConfig attack;
};

/// Report marginals P(u=1 | H0), P(u=1 | H1) after mixing honest and
/// Byzantine behavior.
struct Marginals {
  double pi10 = 0.0;
  double pi11 = 0.0;
};

enum class Polarity { Normal, Inverted };

/// Count-threshold fusion rule. Normal decides H1 iff (#ones >= k); Inverted
/// decides H1 iff (#ones < k). k ranges over [0, N+1], so k=0 Normal is
/// always-H1 and k=N+1 Normal is always-H0.
struct FusionRule {
  int k = 1;
  Polarity polarity = Polarity::Normal;
};

/// Closed-form error quantities for one scenario.
struct ErrorReport {
  Marginals marginals;
  double qf = 0.0;         ///< global false alarm P(decide H1 | H0)
  double qd = 0.0;         ///< global detection P(decide H1 | H1)
  double pe_local = 0.0;   ///< per-report error p0*pi10 + p1*(1-pi11)
  double pe_system = 0.0;  ///< fused error p0*qf + p1*(1-qd)
};

/// Clamps a probability within kProbabilityTolerance of [0,1]; throws
/// validation_error for anything further out.
double checked_probability(double value, const char* name);

SensorModel checked(const SensorModel& s);
Priors checked(const Priors& p);
AttackConfig checked(const AttackConfig& a);
NetworkConfig checked(const NetworkConfig& c);
FusionRule checked(const FusionRule& rule, int n);

const char* polarity_name(Polarity p);
Polarity polarity_from_name(const std::string& name);

}  // namespace byzdet

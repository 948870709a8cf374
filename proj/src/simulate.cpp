#include "byzdet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "byzdet/detection.hpp"

namespace byzdet {

namespace {

constexpr std::uint64_t kTrialBlock = 8192;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One engine per (seed, block); mt19937_64 seeded from a single word is
// fully specified by the standard, so streams are portable.
std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (block + 1));
  return std::mt19937_64(splitmix64(state));
}

// Uniform in [0,1) from the top 53 bits; avoids the implementation-defined
// std::uniform_real_distribution.
double unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct Counts {
  std::uint64_t h0 = 0;
  std::uint64_t h1 = 0;
  std::uint64_t d1_h0 = 0;
  std::uint64_t d1_h1 = 0;
};

Counts run_block(const SimConfig& cfg, std::uint64_t block, std::uint64_t block_trials) {
  const NetworkConfig& net = cfg.network;
  const int n = net.n;
  const int byz_count =
      static_cast<int>(std::llround(net.attack.alpha * static_cast<double>(n)));

  std::mt19937_64 eng = block_engine(cfg.seed, block);
  std::vector<int> reports(n);
  std::vector<int> order(n);

  Counts counts;
  for (std::uint64_t t = 0; t < block_trials; ++t) {
    const bool h1 = unit(eng) < net.priors.p1;
    const double p_one = h1 ? net.sensor.pd : net.sensor.pf;

    int ones = 0;
    if (cfg.placement == ByzantinePlacement::BernoulliPerNode) {
      for (int i = 0; i < n; ++i) {
        int v = unit(eng) < p_one ? 1 : 0;
        if (unit(eng) < net.attack.alpha) {
          v = v ? (unit(eng) < net.attack.p01 ? 0 : 1)
                : (unit(eng) < net.attack.p10 ? 1 : 0);
        }
        ones += v;
      }
    } else {
      for (int i = 0; i < n; ++i) reports[i] = unit(eng) < p_one ? 1 : 0;
      for (int i = 0; i < n; ++i) order[i] = i;
      for (int j = 0; j < byz_count; ++j) {
        const int pick = j + static_cast<int>(unit(eng) * (n - j));
        std::swap(order[j], order[pick]);
        int& v = reports[order[j]];
        v = v ? (unit(eng) < net.attack.p01 ? 0 : 1)
              : (unit(eng) < net.attack.p10 ? 1 : 0);
      }
      for (int i = 0; i < n; ++i) ones += reports[i];
    }

    const bool decide_h1 = cfg.rule.polarity == Polarity::Normal
                               ? ones >= cfg.rule.k
                               : ones < cfg.rule.k;
    if (h1) {
      ++counts.h1;
      counts.d1_h1 += decide_h1;
    } else {
      ++counts.h0;
      counts.d1_h0 += decide_h1;
    }
  }
  return counts;
}

SimResult finalize(const SimConfig& cfg, const std::vector<Counts>& blocks) {
  Counts total;
  for (const Counts& c : blocks) {
    total.h0 += c.h0;
    total.h1 += c.h1;
    total.d1_h0 += c.d1_h0;
    total.d1_h1 += c.d1_h1;
  }
  SimResult r;
  r.trials_h0 = total.h0;
  r.trials_h1 = total.h1;
  r.decide_h1_under_h0 = total.d1_h0;
  r.decide_h1_under_h1 = total.d1_h1;
  const std::uint64_t errors = total.d1_h0 + (total.h1 - total.d1_h1);
  const double trials = static_cast<double>(cfg.trials);
  r.empirical_pe = static_cast<double>(errors) / trials;
  r.empirical_qf = total.h0 ? static_cast<double>(total.d1_h0) / static_cast<double>(total.h0) : 0.0;
  r.empirical_qd = total.h1 ? static_cast<double>(total.d1_h1) / static_cast<double>(total.h1) : 0.0;
  r.std_error = std::sqrt(r.empirical_pe * (1.0 - r.empirical_pe) / trials);
  return r;
}

SimConfig checked_sim(const SimConfig& cfg) {
  SimConfig out = cfg;
  out.network = checked(cfg.network);
  out.rule = checked(cfg.rule, out.network.n);
  if (out.trials < 1) throw validation_error("trials must be >= 1");
  return out;
}

}  // namespace

bool operator==(const SimResult& a, const SimResult& b) {
  return a.trials_h0 == b.trials_h0 && a.trials_h1 == b.trials_h1 &&
         a.decide_h1_under_h0 == b.decide_h1_under_h0 &&
         a.decide_h1_under_h1 == b.decide_h1_under_h1 &&
         a.empirical_pe == b.empirical_pe && a.empirical_qf == b.empirical_qf &&
         a.empirical_qd == b.empirical_qd && a.std_error == b.std_error;
}

SimResult simulate(const SimConfig& cfg) {
  const SimConfig c = checked_sim(cfg);
  const std::uint64_t blocks = (c.trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<Counts> per_block(blocks);

#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kTrialBlock;
    const std::uint64_t len = std::min(kTrialBlock, c.trials - lo);
    per_block[b] = run_block(c, static_cast<std::uint64_t>(b), len);
  }
  return finalize(c, per_block);
}

SimResult simulate_reference(const SimConfig& cfg) {
  const SimConfig c = checked_sim(cfg);
  const std::uint64_t blocks = (c.trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<Counts> per_block(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = b * kTrialBlock;
    const std::uint64_t len = std::min(kTrialBlock, c.trials - lo);
    per_block[b] = run_block(c, b, len);
  }
  return finalize(c, per_block);
}

ValidationReport validate_against_closed_form(const SimConfig& cfg) {
  if (cfg.placement != ByzantinePlacement::BernoulliPerNode) {
    throw validation_error("closed-form validation requires BernoulliPerNode placement");
  }
  const SimConfig c = checked_sim(cfg);

  ValidationReport report;
  report.analytic = system_error(c.network, c.rule);
  report.sim = simulate(c);

  // Score-style z: the analytic probability sets the null standard error.
  const auto z_score = [](double empirical, double analytic, double trials) {
    if (trials <= 0.0) return 0.0;
    const double se = std::sqrt(analytic * (1.0 - analytic) / trials);
    if (se == 0.0) {
      return empirical == analytic ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return (empirical - analytic) / se;
  };
  report.z_pe = z_score(report.sim.empirical_pe, report.analytic.pe_system,
                        static_cast<double>(c.trials));
  report.z_qf = z_score(report.sim.empirical_qf, report.analytic.qf,
                        static_cast<double>(report.sim.trials_h0));
  report.z_qd = z_score(report.sim.empirical_qd, report.analytic.qd,
                        static_cast<double>(report.sim.trials_h1));
  report.flagged = std::abs(report.z_pe) > 3.0 || std::abs(report.z_qf) > 3.0 ||
                   std::abs(report.z_qd) > 3.0;
  return report;
}

}  // namespace byzdet

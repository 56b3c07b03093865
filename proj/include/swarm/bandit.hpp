#pragma once

#include <array>
#include <cstdint>

#include "swarm/sensing.hpp"

namespace swarm {

// One 8-arm bandit table. Values are exponential moving averages so the
// estimate tracks continuous, drifting rewards; the first pull seeds the
// average with the raw reward.
struct ArmStats {
  std::array<double, kSectors> value{};
  std::array<int64_t, kSectors> pulls{};
  int64_t total = 0;
};

// Lowest-index unpulled arm first; afterwards argmax of
// value[i] + c*sqrt(ln T / pulls[i]), ties to the lowest index.
int ucb1_select(const ArmStats& stats, double exploration);

// EMA update: value <- (1-rate)*value + rate*reward (first pull sets value =
// reward). Throws std::invalid_argument on a non-finite reward, leaving the
// table untouched.
void ucb1_update(ArmStats& stats, int arm, double reward, double rate);

}  // namespace swarm

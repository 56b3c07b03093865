#pragma once

#include <array>
#include <cstdint>

#include "swarm/world.hpp"

namespace swarm {

inline constexpr int kSectors = 8;

// 8 body-relative occupancy bits; sector 0 is the robot's forward direction,
// sector i covers bearings [45i - 22.5, 45i + 22.5) degrees.
struct SensorFrame {
  std::array<bool, kSectors> occupied{};

  bool any() const {
    for (bool b : occupied)
      if (b) return true;
    return false;
  }
};

enum class ModularState : uint8_t { Clear, Collision };

// Sector index for a body-relative bearing in degrees.
int sector_of_bearing(double bearing_deg);

// occupied[i] = some other robot with surface gap < collision radius whose
// relative bearing falls in sector i. Walls are not sensed.
SensorFrame sense(const RobotBody& robot, const WorldState& world);

// Bit i of the code = occupied[i]; 0..255.
uint8_t encode_full(const SensorFrame& frame);

std::array<ModularState, kSectors> decompose(const SensorFrame& frame);

bool collision_trigger(const SensorFrame& frame);

}  // namespace swarm

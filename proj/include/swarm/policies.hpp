#pragma once

#include <optional>

#include "swarm/rng.hpp"
#include "swarm/sensing.hpp"

namespace swarm {

// Direction actions: index i = heading 45*i degrees in the body frame, fixed
// speed. These are exactly the 8 sensor directions. An empty optional where
// one is returned means Stop (legal for one tick at a time).
using DirectionAction = int;

enum class MacroKind { Repel, DynamicWindow, Aggression };

// Uniform over the 8 direction actions.
DirectionAction random_policy(Rng& rng);

// Free sector minimizing angular distance to `current`; ties broken
// counterclockwise (the +45 degree neighbour). Stop when all occupied.
std::optional<DirectionAction> dynamic_window(const SensorFrame& frame,
                                              DirectionAction current);

// Direction action nearest the negated vector sum of occupied-sector unit
// vectors; nearest-ties to the lowest index. Opposed occupancies that cancel
// fall back to a uniformly random free sector, or Stop when none is free.
// Requires at least one occupied sector.
std::optional<DirectionAction> repel(const SensorFrame& frame, Rng& rng);

// Draw aggression level in [0,1): >= 0.5 pushes through (action 0), else
// backs directly away from the occupied sector angularly nearest the heading
// (nearest-ties to the lowest index). Requires at least one occupied sector.
DirectionAction aggression(const SensorFrame& frame, Rng& rng);

// Sector-count distance between two direction actions, in [0, 4].
int sector_distance(int a, int b);

}  // namespace swarm

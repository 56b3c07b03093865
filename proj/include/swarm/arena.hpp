#pragma once

#include <string>
#include <vector>

#include "swarm/vec2.hpp"

namespace swarm {

enum class ArenaId { Arena1, Arena2, Arena3 };

struct Base {
  Vec2 center;
  double diameter = 0.3;
  double radius() const { return diameter / 2.0; }
};

struct ArenaSpec {
  double side = 1.5;
  std::vector<Base> bases;
  ArenaId id = ArenaId::Arena1;
};

// Arena presets: one centered base, one corner base, two bases near opposite
// corners. Corner bases sit 0.25*side/1.5 m from the walls so the 0.3 m disc
// stays fully inside for any reasonable side length.
ArenaSpec make_arena(ArenaId id, double side = 1.5, double base_diameter = 0.3);

// Throws std::invalid_argument when side <= 0 or a base disc leaves the arena.
void validate_arena(const ArenaSpec& arena);

std::string arena_name(ArenaId id);
ArenaId parse_arena(const std::string& name);

}  // namespace swarm

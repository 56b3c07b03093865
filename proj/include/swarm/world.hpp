#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarm/arena.hpp"
#include "swarm/rng.hpp"
#include "swarm/vec2.hpp"

namespace swarm {

struct PlacementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RobotMode { Searching, Returning, Avoiding };

struct RobotBody {
  int id = 0;
  Vec2 position;
  double heading = 0.0;  // radians in [0, 2*pi)
  double diameter = 0.065;
  double speed = 0.1;  // m/s, constant; actions choose direction only
  RobotMode mode = RobotMode::Searching;
  bool carrying = false;
  // Center of the base nearest at pickup time; valid while carrying.
  Vec2 nav_target;

  double radius() const { return diameter / 2.0; }
};

struct Puck {
  int id = 0;
  Vec2 position;
  double diameter = 0.1;
  double radius() const { return diameter / 2.0; }
};

struct MotionCommand {
  bool stop = false;
  double heading = 0.0;
  static MotionCommand halt() { return {true, 0.0}; }
  static MotionCommand go(double heading) { return {false, heading}; }
};

// Geometry and economy constants for one run; carried inside WorldState so
// the stepping operations are self-contained.
struct WorldParams {
  ArenaId arena = ArenaId::Arena1;
  double side = 1.5;
  double base_diameter = 0.3;
  int robot_count = 4;
  double robot_diameter = 0.065;
  double robot_speed = 0.1;
  double puck_diameter = 0.1;
  int puck_count = 10;
  double collision_radius = 0.04;  // surface-gap threshold, robots and walls
};

struct WorldState {
  ArenaSpec arena;
  WorldParams params;
  std::vector<RobotBody> robots;
  std::vector<Puck> pucks;
  double clock = 0.0;
  Rng rng;
  long score = 0;
  int next_puck_id = 0;

  // Bitwise-equality on everything except the rng stream position is what the
  // determinism tests compare; rng state advances identically anyway.
};

// Places robots then pucks uniformly at random, rejecting overlaps. Robots
// may not overlap each other; pucks may not overlap bases or robot bodies.
// Throws PlacementError when bounded rejection (10,000 attempts) exhausts or
// when the packing precheck shows the bodies cannot fit.
WorldState init_world(const WorldParams& params, uint64_t seed);

// Advances every robot speed*dt along its commanded heading (or holds it on
// stop), clamps motion that would interpenetrate another body or leave the
// arena, then applies wall turns, pickups (with respawn), and deliveries.
void step_world(WorldState& world, std::span<const MotionCommand> commands, double dt);

// Inward random heading for a robot near one or two walls. Contract violation
// (std::invalid_argument) when the robot is not within the collision radius
// of any wall.
double wall_rule(const RobotBody& robot, const ArenaSpec& arena, Rng& rng,
                 double collision_radius);

// True when the robot's surface is within `collision_radius` of a wall.
bool near_wall(const RobotBody& robot, const ArenaSpec& arena, double collision_radius);

// Searching robot picks up an overlapping free puck: removes the puck, sets
// carrying/Returning and the nav target. Returns false when preconditions or
// geometry do not hold. Does not respawn; step_world pairs each success with
// spawn_puck.
bool try_pickup(RobotBody& robot, WorldState& world);

// Carrying robot whose center is inside any base disc delivers: clears
// carrying, back to Searching, score += 1.
bool try_deliver(RobotBody& robot, WorldState& world);

// Uniform respawn rejecting base discs and robot bodies; bounded rejection.
Puck spawn_puck(WorldState& world);

Vec2 nearest_base(const Vec2& position, const ArenaSpec& arena);
int nearest_base_index(const Vec2& position, const ArenaSpec& arena);

// Ids of other robots whose surface gap to `robot` is below the collision
// radius. Same geometric criterion the sensors use.
std::vector<int> neighbors_within_radius(const RobotBody& robot, const WorldState& world);

}  // namespace swarm

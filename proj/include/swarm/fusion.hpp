#pragma once

#include <array>
#include <span>

#include "swarm/rng.hpp"
#include "swarm/sensing.hpp"

namespace swarm {

enum class SigmaUnits { Degrees, Sectors };

using DirectionDistribution = std::array<double, kSectors>;

// Gaussian-weighted accumulation of direction recommendations into a
// normalized distribution over the 8 actions. For each recommended angle d
// and action angle A_i, the weight exp(-0.5*((d - A_i)/sigma)^2) is added at
// i, with the difference wrapped to <= 180 degrees. In Sectors units the
// difference is divided by 45 before the Gaussian.
//
// sigma defaults to 2 degrees, which makes cross-direction smoothing
// negligible: a neighbouring action sits 45 degrees away and receives
// exp(-0.5*(45/2)^2) ~ 1e-110 of the recommended action's weight.
DirectionDistribution fuse_directions(std::span<const double> angles_deg,
                                      double sigma = 2.0,
                                      SigmaUnits units = SigmaUnits::Degrees);

// Index drawn with probability p[i].
int sample_direction(const DirectionDistribution& p, Rng& rng);

}  // namespace swarm

#pragma once

#include <cmath>

namespace swarm {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Wrap an angle in radians into [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

inline Vec2 unit_from_angle(double rad) { return {std::cos(rad), std::sin(rad)}; }

inline double angle_of(const Vec2& v) { return wrap_angle(std::atan2(v.y, v.x)); }

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

// Absolute angular difference in degrees, wrapped to [0, 180].
inline double angular_diff_deg(double a, double b) {
  double diff = std::fabs(a - b);
  diff = std::fmod(diff, 360.0);
  if (diff > 180.0) diff = 360.0 - diff;
  return diff;
}

}  // namespace swarm

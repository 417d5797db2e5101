#pragma once

#include <algorithm>

namespace favard {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

// Axis-aligned box [x0,x1] x [y0,y1].
struct Box {
  double x0 = 0.0;
  double x1 = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool empty() const { return x1 < x0 || y1 < y0; }

  static Box hull(const Box& a, const Box& b) {
    return {std::min(a.x0, b.x0), std::max(a.x1, b.x1),
            std::min(a.y0, b.y0), std::max(a.y1, b.y1)};
  }

  static Box intersect(const Box& a, const Box& b) {
    return {std::max(a.x0, b.x0), std::min(a.x1, b.x1),
            std::max(a.y0, b.y0), std::min(a.y1, b.y1)};
  }
};

}  // namespace favard

#pragma once

#include <cstddef>
#include <vector>

namespace numerolab::geometry {

struct Vec2 {
  double x = 0, y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(Vec3 a, Vec3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

double dot(Vec2 a, Vec2 b);
double dot(Vec3 a, Vec3 b);
double cross(Vec2 a, Vec2 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec2 a);
double norm(Vec3 a);

// Vertices counterclockwise, strictly convex.
struct ConvexPolygon {
  std::vector<Vec2> vertices;
};

// Faces index into vertices, wound so normals point outward.
struct ConvexPolyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;
};

// Throw std::invalid_argument when the invariants fail.
void validate(const ConvexPolygon& shape);
void validate(const ConvexPolyhedron& shape);

ConvexPolygon regular_polygon(std::size_t sides, double circumradius);
ConvexPolyhedron regular_tetrahedron(double edge);

// Distance sums from an interior point: vertices versus side/face
// supporting lines or planes (or the clamped sides/faces themselves).
struct GeomSample {
  std::vector<double> point;
  double vertex_sum = 0;
  double projection_sum = 0;
  double ratio = 0;
};

GeomSample em_ratio(const ConvexPolygon& shape, Vec2 m, bool clamped = false);
GeomSample em_ratio(const ConvexPolyhedron& shape, Vec3 m,
                    bool clamped = false);

// Grid-seeded descent toward the interior infimum of the ratio.
struct InfEstimate {
  double estimate = 0;
  std::vector<double> argmin;
};

InfEstimate em_inf(const ConvexPolygon& shape, unsigned grid_density,
                   unsigned refine_steps, bool clamped = false);
InfEstimate em_inf(const ConvexPolyhedron& shape, unsigned grid_density,
                   unsigned refine_steps, bool clamped = false);

}  // namespace numerolab::geometry

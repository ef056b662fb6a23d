#include "numerolab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace numerolab::geometry {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

namespace {

// Relative tolerance for planarity/convexity of user-supplied shapes.
constexpr double kShapeTol = 1e-7;
// Interior margin for the infimum search, relative to the diameter.
constexpr double kInteriorMargin = 1e-9;
constexpr unsigned kGridCap = 100;
constexpr std::size_t kDescentSeeds = 8;
constexpr std::size_t kMoveCap = 1000;

template <typename V>
double diameter_of(const std::vector<V>& vertices) {
  double best = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      best = std::max(best, norm(vertices[j] - vertices[i]));
  return best;
}

// Signed inward distances to each side's supporting line.
std::vector<double> side_distances(const ConvexPolygon& shape, Vec2 m) {
  const auto& v = shape.vertices;
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 a = v[i], b = v[(i + 1) % v.size()];
    out.push_back(cross(b - a, m - a) / norm(b - a));
  }
  return out;
}

double segment_distance(Vec2 a, Vec2 b, Vec2 m) {
  Vec2 e = b - a;
  double t = std::clamp(dot(m - a, e) / dot(e, e), 0.0, 1.0);
  return norm(m - (a + t * e));
}

double segment_distance(Vec3 a, Vec3 b, Vec3 m) {
  Vec3 e = b - a;
  double t = std::clamp(dot(m - a, e) / dot(e, e), 0.0, 1.0);
  return norm(m - (a + t * e));
}

struct FacePlane {
  Vec3 unit_normal;  // outward
  double offset;     // dot(unit_normal, point on face)
};

std::vector<FacePlane> face_planes(const ConvexPolyhedron& shape) {
  std::vector<FacePlane> planes;
  for (const auto& face : shape.faces) {
    Vec3 normal{0, 0, 0};
    // Newell's rule is robust for any planar winding.
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vec3 a = shape.vertices[face[i]];
      Vec3 b = shape.vertices[face[(i + 1) % face.size()]];
      normal = normal + cross(a, b);
    }
    double len = norm(normal);
    if (len == 0) throw std::invalid_argument("degenerate face");
    Vec3 unit = (1.0 / len) * normal;
    planes.push_back({unit, dot(unit, shape.vertices[face[0]])});
  }
  return planes;
}

// Inward distances to every face's supporting plane.
std::vector<double> face_distances(const ConvexPolyhedron& shape,
                                   const std::vector<FacePlane>& planes,
                                   Vec3 m) {
  std::vector<double> out;
  out.reserve(planes.size());
  for (const auto& p : planes) out.push_back(p.offset - dot(p.unit_normal, m));
  return out;
}

double clamped_face_distance(const ConvexPolyhedron& shape,
                             const std::vector<std::size_t>& face,
                             const FacePlane& plane, Vec3 m) {
  double signed_dist = dot(plane.unit_normal, m) - plane.offset;
  Vec3 foot = m - signed_dist * plane.unit_normal;
  bool inside = true;
  for (std::size_t i = 0; i < face.size() && inside; ++i) {
    Vec3 a = shape.vertices[face[i]];
    Vec3 b = shape.vertices[face[(i + 1) % face.size()]];
    if (dot(cross(b - a, foot - a), plane.unit_normal) < 0) inside = false;
  }
  if (inside) return std::abs(signed_dist);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < face.size(); ++i) {
    Vec3 a = shape.vertices[face[i]];
    Vec3 b = shape.vertices[face[(i + 1) % face.size()]];
    best = std::min(best, segment_distance(a, b, m));
  }
  return best;
}

[[noreturn]] void reject_point(const std::vector<double>& signed_dists) {
  std::ostringstream msg;
  msg << "point is not strictly interior; signed distances:";
  for (double d : signed_dists) msg << ' ' << d;
  throw std::invalid_argument(msg.str());
}

// Shared descent driver over 2-D/3-D candidate spaces.
template <typename Point>
struct Descent {
  double (*evaluate)(const void*, Point);
  bool (*admissible)(const void*, Point);
  const void* ctx;

  std::pair<double, Point> run(Point start, double step, unsigned rounds,
                               const std::vector<Point>& directions) const {
    Point at = start;
    double value = evaluate(ctx, at);
    for (unsigned round = 0; round < rounds; ++round) {
      for (std::size_t moves = 0; moves < kMoveCap; ++moves) {
        Point best_pt = at;
        double best_val = value;
        for (const Point& dir : directions) {
          Point cand = at + step * dir;
          if (!admissible(ctx, cand)) continue;
          double v = evaluate(ctx, cand);
          if (v < best_val) {
            best_val = v;
            best_pt = cand;
          }
        }
        if (best_val >= value) break;
        value = best_val;
        at = best_pt;
      }
      step *= 0.5;
    }
    return {value, at};
  }
};

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return a < b;
}

}  // namespace

void validate(const ConvexPolygon& shape) {
  const auto& v = shape.vertices;
  if (v.size() < 3)
    throw std::invalid_argument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 a = v[i];
    Vec2 b = v[(i + 1) % v.size()];
    Vec2 c = v[(i + 2) % v.size()];
    if (cross(b - a, c - b) <= 0)
      throw std::invalid_argument(
          "polygon must be strictly convex and counterclockwise");
  }
}

void validate(const ConvexPolyhedron& shape) {
  if (shape.vertices.size() < 4 || shape.faces.size() < 4)
    throw std::invalid_argument("polyhedron needs 4+ vertices and faces");
  double tol = kShapeTol * diameter_of(shape.vertices);
  Vec3 centroid{0, 0, 0};
  for (const Vec3& v : shape.vertices) centroid = centroid + v;
  centroid = (1.0 / static_cast<double>(shape.vertices.size())) * centroid;

  std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
  for (const auto& face : shape.faces) {
    if (face.size() < 3) throw std::invalid_argument("face needs 3+ vertices");
    std::set<std::size_t> distinct(face.begin(), face.end());
    if (distinct.size() != face.size())
      throw std::invalid_argument("face repeats a vertex");
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (face[i] >= shape.vertices.size())
        throw std::invalid_argument("face index out of range");
      ++edge_count[{face[i], face[(i + 1) % face.size()]}];
    }
  }
  for (const auto& [edge, count] : edge_count) {
    auto reverse = edge_count.find({edge.second, edge.first});
    if (count != 1 || reverse == edge_count.end() || reverse->second != 1)
      throw std::invalid_argument("faces do not close up");
  }

  auto planes = face_planes(shape);
  for (std::size_t f = 0; f < shape.faces.size(); ++f) {
    const auto& face = shape.faces[f];
    const FacePlane& plane = planes[f];
    Vec3 face_centroid{0, 0, 0};
    for (std::size_t idx : face)
      face_centroid = face_centroid + shape.vertices[idx];
    face_centroid = (1.0 / static_cast<double>(face.size())) * face_centroid;
    if (dot(plane.unit_normal, face_centroid - centroid) <= 0)
      throw std::invalid_argument("face normals must point outward");
    for (std::size_t idx : face)
      if (std::abs(dot(plane.unit_normal, shape.vertices[idx]) -
                   plane.offset) > tol)
        throw std::invalid_argument("face is not planar");
    for (const Vec3& v : shape.vertices)
      if (dot(plane.unit_normal, v) - plane.offset > tol)
        throw std::invalid_argument("shape is not convex");
  }
}

ConvexPolygon regular_polygon(std::size_t sides, double circumradius) {
  if (sides < 3) throw std::invalid_argument("need at least 3 sides");
  if (!(circumradius > 0))
    throw std::invalid_argument("circumradius must be positive");
  ConvexPolygon out;
  for (std::size_t k = 0; k < sides; ++k) {
    double angle = 2 * M_PI * static_cast<double>(k) /
                   static_cast<double>(sides);
    out.vertices.push_back(
        {circumradius * std::cos(angle), circumradius * std::sin(angle)});
  }
  return out;
}

ConvexPolyhedron regular_tetrahedron(double edge) {
  if (!(edge > 0)) throw std::invalid_argument("edge must be positive");
  double s = edge / (2 * std::sqrt(2.0));
  ConvexPolyhedron out;
  out.vertices = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  out.faces = {{0, 1, 2}, {1, 3, 2}, {0, 2, 3}, {0, 3, 1}};
  return out;
}

GeomSample em_ratio(const ConvexPolygon& shape, Vec2 m, bool clamped) {
  validate(shape);
  auto dists = side_distances(shape, m);
  if (*std::min_element(dists.begin(), dists.end()) <= 0) reject_point(dists);
  GeomSample sample;
  sample.point = {m.x, m.y};
  for (const Vec2& v : shape.vertices) sample.vertex_sum += norm(m - v);
  if (clamped) {
    const auto& v = shape.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      sample.projection_sum +=
          segment_distance(v[i], v[(i + 1) % v.size()], m);
  } else {
    for (double d : dists) sample.projection_sum += d;
  }
  sample.ratio = sample.vertex_sum / sample.projection_sum;
  return sample;
}

GeomSample em_ratio(const ConvexPolyhedron& shape, Vec3 m, bool clamped) {
  validate(shape);
  auto planes = face_planes(shape);
  auto dists = face_distances(shape, planes, m);
  if (*std::min_element(dists.begin(), dists.end()) <= 0) reject_point(dists);
  GeomSample sample;
  sample.point = {m.x, m.y, m.z};
  for (const Vec3& v : shape.vertices) sample.vertex_sum += norm(m - v);
  if (clamped) {
    for (std::size_t f = 0; f < shape.faces.size(); ++f)
      sample.projection_sum +=
          clamped_face_distance(shape, shape.faces[f], planes[f], m);
  } else {
    for (double d : dists) sample.projection_sum += d;
  }
  sample.ratio = sample.vertex_sum / sample.projection_sum;
  return sample;
}

namespace {

struct PolyCtx {
  const ConvexPolygon* shape;
  bool clamped;
  double margin;
};

// Validation already ran once, so evaluate from raw sums.
double poly_eval(const void* raw, Vec2 p) {
  const auto* ctx = static_cast<const PolyCtx*>(raw);
  const auto& v = ctx->shape->vertices;
  double vertex_sum = 0, proj_sum = 0;
  for (const Vec2& q : v) vertex_sum += norm(p - q);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 a = v[i], b = v[(i + 1) % v.size()];
    proj_sum += ctx->clamped ? segment_distance(a, b, p)
                             : cross(b - a, p - a) / norm(b - a);
  }
  return vertex_sum / proj_sum;
}

bool poly_ok(const void* raw, Vec2 p) {
  const auto* ctx = static_cast<const PolyCtx*>(raw);
  auto dists = side_distances(*ctx->shape, p);
  return *std::min_element(dists.begin(), dists.end()) >= ctx->margin;
}

struct SolidCtx {
  const ConvexPolyhedron* shape;
  const std::vector<FacePlane>* planes;
  bool clamped;
  double margin;
};

double solid_eval(const void* raw, Vec3 p) {
  const auto* ctx = static_cast<const SolidCtx*>(raw);
  const auto& shape = *ctx->shape;
  double vertex_sum = 0, proj_sum = 0;
  for (const Vec3& q : shape.vertices) vertex_sum += norm(p - q);
  for (std::size_t f = 0; f < shape.faces.size(); ++f) {
    const FacePlane& plane = (*ctx->planes)[f];
    proj_sum += ctx->clamped
                    ? clamped_face_distance(shape, shape.faces[f], plane, p)
                    : plane.offset - dot(plane.unit_normal, p);
  }
  return vertex_sum / proj_sum;
}

bool solid_ok(const void* raw, Vec3 p) {
  const auto* ctx = static_cast<const SolidCtx*>(raw);
  auto dists = face_distances(*ctx->shape, *ctx->planes, p);
  return *std::min_element(dists.begin(), dists.end()) >= ctx->margin;
}

void check_inf_params(unsigned grid_density, unsigned) {
  if (grid_density < 1 || grid_density > kGridCap)
    throw std::invalid_argument("grid density out of range");
}

template <typename Point, typename Ctx>
InfEstimate run_search(const std::vector<Point>& seeds, const Ctx& ctx,
                       double (*eval)(const void*, Point),
                       bool (*ok)(const void*, Point), double step,
                       unsigned refine_steps,
                       const std::vector<Point>& directions,
                       std::vector<double> (*coords)(Point)) {
  // Rank admissible seeds, then descend from the best few.
  std::vector<std::pair<double, Point>> ranked;
  std::set<std::vector<double>> seen;
  for (const Point& s : seeds) {
    if (!ok(&ctx, s)) continue;
    if (!seen.insert(coords(s)).second) continue;
    ranked.push_back({eval(&ctx, s), s});
  }
  if (ranked.empty())
    throw std::invalid_argument("no interior seed points; raise the density");
  std::sort(ranked.begin(), ranked.end(),
            [&](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return lex_less(coords(a.second), coords(b.second));
            });
  if (ranked.size() > kDescentSeeds) ranked.resize(kDescentSeeds);

  Descent<Point> descent{eval, ok, &ctx};
  InfEstimate best;
  best.estimate = std::numeric_limits<double>::infinity();
  for (const auto& [seed_val, seed] : ranked) {
    auto [value, at] = descent.run(seed, step, refine_steps, directions);
    std::vector<double> c = coords(at);
    if (value < best.estimate ||
        (value == best.estimate && lex_less(c, best.argmin))) {
      best.estimate = value;
      best.argmin = c;
    }
  }
  return best;
}

}  // namespace

InfEstimate em_inf(const ConvexPolygon& shape, unsigned grid_density,
                   unsigned refine_steps, bool clamped) {
  validate(shape);
  check_inf_params(grid_density, refine_steps);
  const auto& v = shape.vertices;
  Vec2 centroid{0, 0};
  for (const Vec2& p : v) centroid = centroid + p;
  centroid = (1.0 / static_cast<double>(v.size())) * centroid;

  std::vector<Vec2> seeds;
  unsigned d = grid_density;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 a = v[i], b = v[(i + 1) % v.size()];
    for (unsigned wa = 0; wa <= d; ++wa)
      for (unsigned wb = 0; wa + wb <= d; ++wb) {
        unsigned wc = d - wa - wb;
        double inv = 1.0 / static_cast<double>(d);
        seeds.push_back(inv * (static_cast<double>(wa) * a +
                               static_cast<double>(wb) * b +
                               static_cast<double>(wc) * centroid));
      }
  }

  double diam = diameter_of(v);
  PolyCtx ctx{&shape, clamped, kInteriorMargin * diam};
  std::vector<Vec2> directions{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  return run_search<Vec2, PolyCtx>(
      seeds, ctx, poly_eval, poly_ok,
      diam / (static_cast<double>(d) + 1), refine_steps, directions,
      +[](Vec2 p) { return std::vector<double>{p.x, p.y}; });
}

InfEstimate em_inf(const ConvexPolyhedron& shape, unsigned grid_density,
                   unsigned refine_steps, bool clamped) {
  validate(shape);
  check_inf_params(grid_density, refine_steps);
  auto planes = face_planes(shape);
  Vec3 centroid{0, 0, 0};
  for (const Vec3& p : shape.vertices) centroid = centroid + p;
  centroid = (1.0 / static_cast<double>(shape.vertices.size())) * centroid;

  // Lattice points of the fan tetrahedra (body centroid, face fan).
  std::vector<Vec3> seeds;
  unsigned d = grid_density;
  double inv = 1.0 / static_cast<double>(d);
  for (const auto& face : shape.faces) {
    Vec3 f0 = shape.vertices[face[0]];
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      Vec3 a = shape.vertices[face[i]];
      Vec3 b = shape.vertices[face[i + 1]];
      for (unsigned wa = 0; wa <= d; ++wa)
        for (unsigned wb = 0; wa + wb <= d; ++wb)
          for (unsigned wc = 0; wa + wb + wc <= d; ++wc) {
            unsigned wd = d - wa - wb - wc;
            seeds.push_back(inv * (static_cast<double>(wa) * f0 +
                                   static_cast<double>(wb) * a +
                                   static_cast<double>(wc) * b +
                                   static_cast<double>(wd) * centroid));
          }
    }
  }

  double diam = diameter_of(shape.vertices);
  SolidCtx ctx{&shape, &planes, clamped, kInteriorMargin * diam};
  std::vector<Vec3> directions{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                               {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  return run_search<Vec3, SolidCtx>(
      seeds, ctx, solid_eval, solid_ok,
      diam / (static_cast<double>(d) + 1), refine_steps, directions,
      +[](Vec3 p) { return std::vector<double>{p.x, p.y, p.z}; });
}

}  // namespace numerolab::geometry

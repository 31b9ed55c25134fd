#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toricode {

using Coord = std::int64_t;

// Input coordinates are restricted to |x|, |y| <= 2^20 so that shoelace
// sums, Minkowski sums and the containment predicates stay far away from
// the int64 range. Derived polygons (sums, images) may exceed the limit;
// every arithmetic step is overflow-checked regardless.
inline constexpr Coord kCoordLimit = Coord{1} << 20;

namespace checked {
Coord add(Coord a, Coord b);
Coord sub(Coord a, Coord b);
Coord mul(Coord a, Coord b);
}  // namespace checked

struct LatticePoint {
    Coord x = 0;
    Coord y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeVector {
    Coord dx = 0;
    Coord dy = 0;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator+(const LatticePoint& p, const LatticeVector& v);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& v);
LatticeVector operator*(Coord k, const LatticeVector& v);

// 2x2 determinant of the pair (a, b).
Coord cross(const LatticeVector& a, const LatticeVector& b);

bool is_primitive(const LatticeVector& v);

// Divides out the gcd and fixes the sign so that dy > 0, or dy == 0 and
// dx > 0. Throws on the zero vector.
LatticeVector canonical_direction(LatticeVector v);

// Convex lattice polygon. Vertices are in strictly convex counterclockwise
// order starting from the smallest vertex in (x, y) order. Points and
// segments are stored with 1 and 2 vertices.
class LatticePolygon {
  public:
    LatticePolygon() = default;

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    // 0 for a point, 1 for a segment, 2 otherwise.
    int dimension() const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

  private:
    explicit LatticePolygon(std::vector<LatticePoint> verts) : verts_(std::move(verts)) {}
    friend LatticePolygon normalize(std::vector<LatticePoint> points);
    friend LatticePolygon hull_polygon(std::vector<LatticePoint> points);

    std::vector<LatticePoint> verts_;
};

// Convex hull in canonical CCW order with collinear vertices dropped.
// Idempotent. Rejects empty input and coordinates beyond kCoordLimit.
LatticePolygon normalize(std::vector<LatticePoint> points);

// Same hull computation without the coordinate limit; for polygons derived
// internally (Minkowski sums, unimodular images).
LatticePolygon hull_polygon(std::vector<LatticePoint> points);

Coord twice_area(const LatticePolygon& p);

struct PointCounts {
    std::int64_t total = 0;
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
};

// Exact counts by scanline; total = interior + boundary. For points and
// segments every lattice point counts as boundary.
PointCounts lattice_point_counts(const LatticePolygon& p);

// All lattice points of p, ordered lexicographically by (y, x).
std::vector<LatticePoint> lattice_points(const LatticePolygon& p);

bool contains(const LatticePolygon& p, const LatticePoint& pt);

LatticePolygon translate(const LatticePolygon& p, const LatticeVector& t);

// Minkowski sum by merging the two CCW edge sequences.
LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);

// Twice the normalized mixed volume: 2V(P,Q) = 2A(P+Q) - 2A(P) - 2A(Q).
Coord mixed_volume2(const LatticePolygon& p, const LatticePolygon& q);

// Containment scan for one fixed target polygon; precomputes the lattice
// points used as translation anchors so repeated fit queries stay cheap.
class TranslateFitter {
  public:
    explicit TranslateFitter(LatticePolygon target);

    // Smallest translation t in (dx, dy) order with t + piece inside the
    // target, if any.
    std::optional<LatticeVector> fit(const LatticePolygon& piece) const;

    const LatticePolygon& target() const { return target_; }

  private:
    LatticePolygon target_;
    std::vector<LatticePoint> anchors_;
};

std::optional<LatticeVector> fits_translate(const LatticePolygon& piece,
                                            const LatticePolygon& target);

// Affine map x -> (a x + b y + tx, c x + d y + ty) with |ad - bc| = 1.
struct UnimodularMap {
    Coord a = 1, b = 0, c = 0, d = 1;
    Coord tx = 0, ty = 0;

    bool unimodular() const;
    LatticePoint apply(const LatticePoint& p) const;
};

// Throws std::invalid_argument when the linear part is not unimodular.
LatticePolygon apply_map(const UnimodularMap& m, const LatticePolygon& p);

}  // namespace toricode

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toricode/lattice.hpp"

namespace toricode {

// Multiset of primitive lattice directions with multiplicities; the carrier
// of a zonotope sum(m_i * E_i). Keys are canonical (primitive, dy > 0 or
// dy == 0 and dx > 0).
class SegmentMultiset {
  public:
    void add(const LatticeVector& dir, std::int64_t count = 1);

    std::int64_t total_count() const;
    const std::map<LatticeVector, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const SegmentMultiset&, const SegmentMultiset&) = default;
    friend auto operator<=>(const SegmentMultiset&, const SegmentMultiset&) = default;

  private:
    std::map<LatticeVector, std::int64_t> entries_;
};

// Minkowski sum of the segments [0, m_i * v_i]; the point {(0,0)} for the
// empty multiset.
LatticePolygon zonotope_of(const SegmentMultiset& segments);

// A maximal decomposition found inside some polygon P: an optional
// exceptional triangle plus a zonotope, anchored by a translation that puts
// the whole sum inside P.
struct MinkowskiWitness {
    std::optional<LatticePolygon> exceptional;
    SegmentMultiset segments;
    LatticeVector anchor;

    std::int64_t length() const {
        return segments.total_count() + (exceptional ? 1 : 0);
    }

    // The witnessed subpolygon of P (sum of all parts, translated).
    LatticePolygon reconstruct() const;
};

enum class IndecomposableClass {
    Point,
    PrimitiveSegment,
    UnitTriangle,
    ExceptionalTriangle,
    Decomposable,
};

struct FullLengthResult {
    std::int64_t length = 0;
    MinkowskiWitness witness;
};

// Full Minkowski length L(P) with a deterministic witness. Runs the
// unimodular-triple zonotope search: for every direction pair (v1, v2) with
// |det| = 1 realized by lattice points of P, scans multiplicities of
// v1, v2, v1+v2 bounded by the longest lattice section of P in each
// direction. Ties between maximal witnesses break toward the smallest
// (sorted direction list, anchor).
FullLengthResult full_minkowski_length(const LatticePolygon& p);

// Independent exponential oracle: largest k such that a Minkowski sum of k
// primitive segments (any directions) fits in P by translation. Requires
// the bounding box of P to be at most 8x8.
std::int64_t oracle_full_length(const LatticePolygon& p);

// Structural classification by counts; Decomposable covers every polygon
// with L >= 2.
IndecomposableClass classify(const LatticePolygon& p);

struct ExceptionalSearchResult {
    bool found = false;
    std::optional<MinkowskiWitness> witness;
};

// Decides whether some maximal decomposition in P (of the given full
// length) contains an exceptional triangle: scans lattice triangles with
// exactly 4 lattice points and builds T + m1 E1 + m2 E2 + m3 E3 with
// m1 + m2 + m3 = L - 1, directions joining the interior point of T to its
// vertices. Returns false immediately for L = 0 or dim(P) < 2.
ExceptionalSearchResult has_exceptional_maximal(const LatticePolygon& p, std::int64_t full_length);

// All convex lattice polygons with vertices in [0, box]^2 (dimensions 0, 1
// and 2), deduplicated by translation, in a deterministic order. box <= 5.
std::vector<LatticePolygon> enumerate_polygons(int box);

}  // namespace toricode

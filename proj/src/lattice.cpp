#include "toricode/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace toricode {

namespace checked {

Coord add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

Coord sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

Coord mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

}  // namespace checked

LatticeVector operator-(const LatticePoint& a, const LatticePoint& b) {
    return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)};
}

LatticePoint operator+(const LatticePoint& p, const LatticeVector& v) {
    return {checked::add(p.x, v.dx), checked::add(p.y, v.dy)};
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {checked::add(a.dx, b.dx), checked::add(a.dy, b.dy)};
}

LatticeVector operator-(const LatticeVector& v) { return {-v.dx, -v.dy}; }

LatticeVector operator*(Coord k, const LatticeVector& v) {
    return {checked::mul(k, v.dx), checked::mul(k, v.dy)};
}

Coord cross(const LatticeVector& a, const LatticeVector& b) {
    return checked::sub(checked::mul(a.dx, b.dy), checked::mul(a.dy, b.dx));
}

bool is_primitive(const LatticeVector& v) {
    if (v.dx == 0 && v.dy == 0) return false;
    return std::gcd(std::abs(v.dx), std::abs(v.dy)) == 1;
}

LatticeVector canonical_direction(LatticeVector v) {
    if (v.dx == 0 && v.dy == 0) throw std::invalid_argument("zero vector has no direction");
    Coord g = std::gcd(std::abs(v.dx), std::abs(v.dy));
    v.dx /= g;
    v.dy /= g;
    if (v.dy < 0 || (v.dy == 0 && v.dx < 0)) v = -v;
    return v;
}

int LatticePolygon::dimension() const {
    if (verts_.size() <= 1) return 0;
    return verts_.size() == 2 ? 1 : 2;
}

namespace {

Coord orient(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return cross(a - o, b - o);
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && orient(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] > h[1]) std::swap(h[0], h[1]);
    return h;
}

// Rotate a CCW vertex cycle so it starts at the smallest vertex.
void canonical_start(std::vector<LatticePoint>& v) {
    if (v.size() < 3) return;
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
}

}  // namespace

LatticePolygon hull_polygon(std::vector<LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("polygon needs at least one point");
    auto h = convex_hull(std::move(points));
    canonical_start(h);
    return LatticePolygon(std::move(h));
}

LatticePolygon normalize(std::vector<LatticePoint> points) {
    for (const auto& p : points) {
        if (std::abs(p.x) > kCoordLimit || std::abs(p.y) > kCoordLimit)
            throw std::overflow_error("input coordinate exceeds 2^20 limit");
    }
    return hull_polygon(std::move(points));
}

Coord twice_area(const LatticePolygon& p) {
    const auto& v = p.vertices();
    if (v.size() < 3) return 0;
    Coord s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s = checked::add(s, checked::sub(checked::mul(a.x, b.y), checked::mul(b.x, a.y)));
    }
    return s;  // nonnegative: vertices are CCW
}

namespace {

Coord floor_div(Coord a, Coord b) {
    Coord q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

// x-interval of a 2-dimensional polygon at height y, empty if none.
std::optional<std::pair<Coord, Coord>> row_range(const LatticePolygon& p, Coord y) {
    const auto& v = p.vertices();
    Coord lo = std::numeric_limits<Coord>::min();
    Coord hi = std::numeric_limits<Coord>::max();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const Coord dx = checked::sub(b.x, a.x);
        const Coord dy = checked::sub(b.y, a.y);
        // inside means dx*(y - a.y) - dy*(x - a.x) >= 0
        const Coord rhs = checked::add(checked::mul(dx, checked::sub(y, a.y)),
                                       checked::mul(dy, a.x));
        if (dy > 0) {
            hi = std::min(hi, floor_div(rhs, dy));
        } else if (dy < 0) {
            lo = std::max(lo, ceil_div(rhs, dy));
        } else if (checked::mul(dx, checked::sub(y, a.y)) < 0) {
            return std::nullopt;
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::int64_t segment_lattice_count(const LatticePoint& a, const LatticePoint& b) {
    const LatticeVector d = b - a;
    return std::gcd(std::abs(d.dx), std::abs(d.dy));
}

}  // namespace

PointCounts lattice_point_counts(const LatticePolygon& p) {
    const auto& v = p.vertices();
    if (p.dimension() == 0) return {1, 0, 1};
    if (p.dimension() == 1) {
        const std::int64_t n = segment_lattice_count(v[0], v[1]) + 1;
        return {n, 0, n};
    }
    Coord ymin = v[0].y, ymax = v[0].y;
    for (const auto& q : v) {
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    std::int64_t total = 0;
    for (Coord y = ymin; y <= ymax; ++y) {
        if (auto r = row_range(p, y)) total += r->second - r->first + 1;
    }
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        boundary += segment_lattice_count(v[i], v[(i + 1) % v.size()]);
    return {total, total - boundary, boundary};
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& p) {
    std::vector<LatticePoint> out;
    const auto& v = p.vertices();
    if (p.dimension() == 0) {
        out.push_back(v[0]);
        return out;
    }
    if (p.dimension() == 1) {
        const std::int64_t n = segment_lattice_count(v[0], v[1]);
        const LatticeVector step{(v[1].x - v[0].x) / n, (v[1].y - v[0].y) / n};
        LatticePoint cur = v[0];
        for (std::int64_t i = 0; i <= n; ++i, cur = cur + step) out.push_back(cur);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::pair(a.y, a.x) < std::pair(b.y, b.x);
        });
        return out;
    }
    Coord ymin = v[0].y, ymax = v[0].y;
    for (const auto& q : v) {
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    for (Coord y = ymin; y <= ymax; ++y) {
        if (auto r = row_range(p, y))
            for (Coord x = r->first; x <= r->second; ++x) out.push_back({x, y});
    }
    return out;
}

bool contains(const LatticePolygon& p, const LatticePoint& pt) {
    const auto& v = p.vertices();
    switch (p.dimension()) {
        case 0:
            return pt == v[0];
        case 1: {
            if (orient(v[0], v[1], pt) != 0) return false;
            return std::min(v[0].x, v[1].x) <= pt.x && pt.x <= std::max(v[0].x, v[1].x) &&
                   std::min(v[0].y, v[1].y) <= pt.y && pt.y <= std::max(v[0].y, v[1].y);
        }
        default:
            for (std::size_t i = 0; i < v.size(); ++i)
                if (orient(v[i], v[(i + 1) % v.size()], pt) < 0) return false;
            return true;
    }
}

LatticePolygon translate(const LatticePolygon& p, const LatticeVector& t) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertex_count());
    for (const auto& q : p.vertices()) pts.push_back(q + t);
    return hull_polygon(std::move(pts));
}

namespace {

// CCW edge vectors; a segment contributes its direction and its reverse.
std::vector<LatticeVector> edge_vectors(const LatticePolygon& p) {
    const auto& v = p.vertices();
    std::vector<LatticeVector> e;
    if (p.dimension() == 1) {
        e.push_back(v[1] - v[0]);
        e.push_back(v[0] - v[1]);
    } else if (p.dimension() == 2) {
        for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
    }
    return e;
}

// Angular order over [0, 2pi) starting at direction (1, 0).
bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    const int ha = (a.dy > 0 || (a.dy == 0 && a.dx > 0)) ? 0 : 1;
    const int hb = (b.dy > 0 || (b.dy == 0 && b.dx > 0)) ? 0 : 1;
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

LatticePoint min_by_yx(const std::vector<LatticePoint>& v) {
    return *std::min_element(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return std::pair(a.y, a.x) < std::pair(b.y, b.x);
    });
}

}  // namespace

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
    if (p.dimension() == 0) return translate(q, p.vertices()[0] - LatticePoint{0, 0});
    if (q.dimension() == 0) return translate(p, q.vertices()[0] - LatticePoint{0, 0});

    auto edges = edge_vectors(p);
    auto eq = edge_vectors(q);
    edges.insert(edges.end(), eq.begin(), eq.end());
    std::stable_sort(edges.begin(), edges.end(), angle_less);

    LatticePoint cur = min_by_yx(p.vertices()) + (min_by_yx(q.vertices()) - LatticePoint{0, 0});
    std::vector<LatticePoint> trace;
    trace.reserve(edges.size());
    for (const auto& e : edges) {
        trace.push_back(cur);
        cur = cur + e;
    }
    return hull_polygon(std::move(trace));
}

Coord mixed_volume2(const LatticePolygon& p, const LatticePolygon& q) {
    const Coord sum = twice_area(minkowski_sum(p, q));
    return checked::sub(checked::sub(sum, twice_area(p)), twice_area(q));
}

TranslateFitter::TranslateFitter(LatticePolygon target)
    : target_(std::move(target)), anchors_(lattice_points(target_)) {}

std::optional<LatticeVector> TranslateFitter::fit(const LatticePolygon& piece) const {
    const LatticePoint base = *std::min_element(piece.vertices().begin(), piece.vertices().end());
    std::optional<LatticeVector> best;
    for (const auto& d : anchors_) {
        const LatticeVector t = d - base;
        bool ok = true;
        for (const auto& v : piece.vertices()) {
            if (!contains(target_, v + t)) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || t < *best)) best = t;
    }
    return best;
}

std::optional<LatticeVector> fits_translate(const LatticePolygon& piece,
                                            const LatticePolygon& target) {
    return TranslateFitter(target).fit(piece);
}

bool UnimodularMap::unimodular() const {
    const Coord det = checked::sub(checked::mul(a, d), checked::mul(b, c));
    return det == 1 || det == -1;
}

LatticePoint UnimodularMap::apply(const LatticePoint& p) const {
    return {checked::add(checked::add(checked::mul(a, p.x), checked::mul(b, p.y)), tx),
            checked::add(checked::add(checked::mul(c, p.x), checked::mul(d, p.y)), ty)};
}

LatticePolygon apply_map(const UnimodularMap& m, const LatticePolygon& p) {
    if (!m.unimodular()) throw std::invalid_argument("linear part is not unimodular");
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertex_count());
    for (const auto& v : p.vertices()) pts.push_back(m.apply(v));
    return hull_polygon(std::move(pts));
}

}  // namespace toricode

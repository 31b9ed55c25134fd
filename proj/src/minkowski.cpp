#include "toricode/minkowski.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace toricode {

void SegmentMultiset::add(const LatticeVector& dir, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("negative multiplicity");
    if (count == 0) return;
    entries_[canonical_direction(dir)] += count;
}

std::int64_t SegmentMultiset::total_count() const {
    std::int64_t n = 0;
    for (const auto& [dir, m] : entries_) n += m;
    return n;
}

LatticePolygon zonotope_of(const SegmentMultiset& segments) {
    LatticePolygon z = hull_polygon({LatticePoint{0, 0}});
    for (const auto& [dir, m] : segments.entries()) {
        const LatticeVector span = m * dir;
        z = minkowski_sum(z, hull_polygon({{0, 0}, {span.dx, span.dy}}));
    }
    return z;
}

LatticePolygon MinkowskiWitness::reconstruct() const {
    LatticePolygon z = zonotope_of(segments);
    if (exceptional) z = minkowski_sum(z, *exceptional);
    return translate(z, anchor);
}

namespace {

std::int64_t segment_lattice_length(const LatticePolygon& p) {
    const LatticeVector d = p.vertices()[1] - p.vertices()[0];
    return std::gcd(std::abs(d.dx), std::abs(d.dy));
}

// Largest k such that a translate of k*[0,d] lies in P: one less than the
// maximum number of lattice points of P on a line in direction d.
std::int64_t max_multiple_in_direction(const std::vector<LatticePoint>& pts,
                                       const LatticeVector& d) {
    std::vector<Coord> keys;
    keys.reserve(pts.size());
    for (const auto& p : pts)
        keys.push_back(checked::sub(checked::mul(d.dx, p.y), checked::mul(d.dy, p.x)));
    std::sort(keys.begin(), keys.end());
    std::int64_t best = 0, run = 0;
    Coord prev = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        run = (i > 0 && keys[i] == prev) ? run + 1 : 1;
        prev = keys[i];
        best = std::max(best, run);
    }
    return best - 1;
}

using WitnessKey = std::tuple<bool, std::vector<std::tuple<Coord, Coord, std::int64_t>>,
                              Coord, Coord>;

WitnessKey witness_key(const MinkowskiWitness& w) {
    std::vector<std::tuple<Coord, Coord, std::int64_t>> dirs;
    for (const auto& [d, m] : w.segments.entries()) dirs.emplace_back(d.dx, d.dy, m);
    return {w.exceptional.has_value(), std::move(dirs), w.anchor.dx, w.anchor.dy};
}

LatticePolygon segment_polygon(const LatticeVector& v, std::int64_t m) {
    return hull_polygon({{0, 0}, {checked::mul(m, v.dx), checked::mul(m, v.dy)}});
}

}  // namespace

FullLengthResult full_minkowski_length(const LatticePolygon& p) {
    FullLengthResult res;
    if (p.dimension() == 0) {
        res.length = 0;
        res.witness.anchor = p.vertices()[0] - LatticePoint{0, 0};
        return res;
    }
    if (p.dimension() == 1) {
        const std::int64_t len = segment_lattice_length(p);
        res.length = len;
        res.witness.segments.add(p.vertices()[1] - p.vertices()[0], len);
        res.witness.anchor = *fits_translate(zonotope_of(res.witness.segments), p);
        return res;
    }

    const std::vector<LatticePoint> pts = lattice_points(p);
    const TranslateFitter fitter(p);

    std::map<LatticeVector, std::int64_t> max_mult;
    const auto mult_of = [&](const LatticeVector& d) {
        auto it = max_mult.find(d);
        if (it == max_mult.end()) it = max_mult.emplace(d, max_multiple_in_direction(pts, d)).first;
        return it->second;
    };

    std::int64_t best = -1;
    MinkowskiWitness best_witness;
    WitnessKey best_key;

    const auto consider = [&](const std::array<LatticeVector, 3>& dirs,
                              const std::array<std::int64_t, 3>& mult,
                              const LatticeVector& anchor) {
        std::int64_t total = mult[0] + mult[1] + mult[2];
        if (total < best) return;
        MinkowskiWitness w;
        for (int i = 0; i < 3; ++i) w.segments.add(dirs[i], mult[i]);
        w.anchor = anchor;
        WitnessKey key = witness_key(w);
        if (total > best || key < best_key) {
            best = total;
            best_witness = std::move(w);
            best_key = std::move(key);
        }
    };

    // Every unordered family of lines {v1, v2, v1+v2} realized by a triple
    // of lattice points {A, B, C} in P with |det(B-A, C-A)| = 1.
    std::set<std::array<LatticeVector, 3>> seen;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = 0; b < pts.size(); ++b) {
            if (b == a) continue;
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                if (c == a) continue;
                const LatticeVector v1 = pts[b] - pts[a];
                const LatticeVector v2 = pts[c] - pts[a];
                const Coord det = cross(v1, v2);
                if (det != 1 && det != -1) continue;

                std::array<LatticeVector, 3> dirs = {canonical_direction(v1),
                                                     canonical_direction(v2),
                                                     canonical_direction(v1 + v2)};
                std::sort(dirs.begin(), dirs.end());
                if (!seen.insert(dirs).second) continue;

                const std::array<std::int64_t, 3> cap = {mult_of(dirs[0]), mult_of(dirs[1]),
                                                         mult_of(dirs[2])};

                const auto zon_fit = [&](std::int64_t m1, std::int64_t m2,
                                         std::int64_t m3) -> std::optional<LatticeVector> {
                    LatticePolygon z = hull_polygon({LatticePoint{0, 0}});
                    const std::array<std::int64_t, 3> m = {m1, m2, m3};
                    for (int i = 0; i < 3; ++i)
                        if (m[i] > 0) z = minkowski_sum(z, segment_polygon(dirs[i], m[i]));
                    return fitter.fit(z);
                };

                for (std::int64_t m1 = 0; m1 <= cap[0]; ++m1) {
                    std::int64_t row_max = cap[2];
                    bool any_row = false;
                    for (std::int64_t m2 = 0; m2 <= cap[1]; ++m2) {
                        // The largest fitting m3 never grows as m2 grows.
                        std::optional<LatticeVector> t;
                        while (row_max >= 0 && !(t = zon_fit(m1, m2, row_max))) --row_max;
                        if (row_max < 0) break;
                        any_row = true;
                        consider(dirs, {m1, m2, row_max}, *t);
                    }
                    if (!any_row) break;  // even m1*[0,d1] alone no longer fits
                }
            }
        }
    }

    res.length = best;
    res.witness = std::move(best_witness);
    return res;
}

std::int64_t oracle_full_length(const LatticePolygon& p) {
    if (p.dimension() == 0) return 0;
    if (p.dimension() == 1) return segment_lattice_length(p);

    Coord xmin = p.vertices()[0].x, xmax = xmin, ymin = p.vertices()[0].y, ymax = ymin;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const Coord w = xmax - xmin, h = ymax - ymin;
    if (w > 8 || h > 8) throw std::invalid_argument("oracle_full_length: bounding box exceeds 8x8");

    std::vector<LatticeVector> dirs;
    for (Coord dy = 0; dy <= h; ++dy) {
        for (Coord dx = -w; dx <= w; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (dy == 0 && dx < 0) continue;
            const LatticeVector v{dx, dy};
            if (is_primitive(v)) dirs.push_back(v);
        }
    }
    std::sort(dirs.begin(), dirs.end());

    const std::vector<LatticePoint> pts = lattice_points(p);
    const TranslateFitter fitter(p);

    // Per-direction multiplicity caps (lattice width of P in each direction)
    // and suffix capacity for pruning.
    std::vector<std::int64_t> cap(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i)
        cap[i] = max_multiple_in_direction(pts, dirs[i]);
    std::vector<std::int64_t> suffix(dirs.size() + 1, 0);
    for (std::size_t i = dirs.size(); i-- > 0;) suffix[i] = suffix[i + 1] + cap[i];

    std::int64_t best = 0;
    const std::function<void(std::size_t, const LatticePolygon&, std::int64_t)> dfs =
        [&](std::size_t i, const LatticePolygon& z, std::int64_t count) {
            best = std::max(best, count);
            for (std::size_t j = i; j < dirs.size(); ++j) {
                if (count + suffix[j] <= best) return;
                if (cap[j] == 0) continue;
                LatticePolygon z2 = minkowski_sum(z, segment_polygon(dirs[j], 1));
                if (fitter.fit(z2)) dfs(j, z2, count + 1);
            }
        };
    dfs(0, hull_polygon({LatticePoint{0, 0}}), 0);
    return best;
}

IndecomposableClass classify(const LatticePolygon& p) {
    switch (p.dimension()) {
        case 0:
            return IndecomposableClass::Point;
        case 1:
            return segment_lattice_length(p) == 1 ? IndecomposableClass::PrimitiveSegment
                                                  : IndecomposableClass::Decomposable;
        default: {
            if (p.vertex_count() == 3) {
                if (twice_area(p) == 1) return IndecomposableClass::UnitTriangle;
                const PointCounts c = lattice_point_counts(p);
                if (c.total == 4 && c.interior == 1) return IndecomposableClass::ExceptionalTriangle;
            }
            return IndecomposableClass::Decomposable;
        }
    }
}

ExceptionalSearchResult has_exceptional_maximal(const LatticePolygon& p,
                                                std::int64_t full_length) {
    if (full_length < 1 || p.dimension() < 2) return {};

    const std::vector<LatticePoint> pts = lattice_points(p);
    const TranslateFitter fitter(p);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const LatticePolygon tri = hull_polygon({pts[i], pts[j], pts[k]});
                if (tri.vertex_count() != 3 || twice_area(tri) != 3) continue;
                const auto tri_pts = lattice_points(tri);
                if (tri_pts.size() != 4) continue;
                LatticePoint inner;
                for (const auto& q : tri_pts) {
                    if (q != tri.vertices()[0] && q != tri.vertices()[1] && q != tri.vertices()[2])
                        inner = q;
                }
                const std::array<LatticeVector, 3> dirs = {tri.vertices()[0] - inner,
                                                           tri.vertices()[1] - inner,
                                                           tri.vertices()[2] - inner};
                for (std::int64_t m1 = 0; m1 < full_length; ++m1) {
                    for (std::int64_t m2 = 0; m1 + m2 < full_length; ++m2) {
                        const std::int64_t m3 = full_length - 1 - m1 - m2;
                        LatticePolygon z = tri;
                        const std::array<std::int64_t, 3> m = {m1, m2, m3};
                        for (int t = 0; t < 3; ++t)
                            if (m[t] > 0) z = minkowski_sum(z, segment_polygon(dirs[t], m[t]));
                        if (auto shift = fitter.fit(z)) {
                            MinkowskiWitness w;
                            w.exceptional = tri;
                            for (int t = 0; t < 3; ++t) w.segments.add(dirs[t], m[t]);
                            w.anchor = *shift;
                            return {true, std::move(w)};
                        }
                    }
                }
            }
        }
    }
    return {};
}

namespace {

bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    const int ha = (a.dy > 0 || (a.dy == 0 && a.dx > 0)) ? 0 : 1;
    const int hb = (b.dy > 0 || (b.dy == 0 && b.dx > 0)) ? 0 : 1;
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

LatticePolygon to_origin(const LatticePolygon& p) {
    Coord xmin = p.vertices()[0].x, ymin = p.vertices()[0].y;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        ymin = std::min(ymin, v.y);
    }
    return translate(p, {-xmin, -ymin});
}

}  // namespace

std::vector<LatticePolygon> enumerate_polygons(int box) {
    if (box < 0) throw std::invalid_argument("box must be nonnegative");
    if (box > 5) throw std::invalid_argument("enumerate_polygons: box limit is 5");

    std::vector<LatticePolygon> out;
    out.push_back(hull_polygon({LatticePoint{0, 0}}));

    // Segments up to translation: one canonical vector per point set.
    for (Coord dy = 0; dy <= box; ++dy) {
        for (Coord dx = -box; dx <= box; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (dy == 0 && dx < 0) continue;
            out.push_back(to_origin(hull_polygon({{0, 0}, {dx, dy}})));
        }
    }

    // Dimension 2: a convex polygon is a multiset of edge vectors summing to
    // zero with strictly increasing angles; enumerate primitive directions in
    // angle order with a multiplicity per direction and prune on the four
    // bounding-box extents.
    std::vector<LatticeVector> dirs;
    for (Coord dx = -box; dx <= box; ++dx)
        for (Coord dy = -box; dy <= box; ++dy)
            if ((dx != 0 || dy != 0) && is_primitive({dx, dy})) dirs.push_back({dx, dy});
    std::sort(dirs.begin(), dirs.end(), angle_less);

    const Coord B = box;
    const std::size_t nd = dirs.size();
    std::vector<Coord> suf_px(nd + 1, 0), suf_nx(nd + 1, 0), suf_py(nd + 1, 0), suf_ny(nd + 1, 0);
    for (std::size_t i = nd; i-- > 0;) {
        Coord kx = dirs[i].dx != 0 ? B / std::abs(dirs[i].dx) : B;
        Coord ky = dirs[i].dy != 0 ? B / std::abs(dirs[i].dy) : B;
        const Coord kmax = std::min(kx, ky);
        suf_px[i] = suf_px[i + 1] + kmax * std::max<Coord>(dirs[i].dx, 0);
        suf_nx[i] = suf_nx[i + 1] + kmax * std::max<Coord>(-dirs[i].dx, 0);
        suf_py[i] = suf_py[i + 1] + kmax * std::max<Coord>(dirs[i].dy, 0);
        suf_ny[i] = suf_ny[i + 1] + kmax * std::max<Coord>(-dirs[i].dy, 0);
    }

    std::vector<std::pair<LatticeVector, Coord>> chosen;
    const std::function<void(std::size_t, Coord, Coord, Coord, Coord)> dfs =
        [&](std::size_t i, Coord px, Coord nx, Coord py, Coord ny) {
            if (px + suf_px[i] < nx || nx + suf_nx[i] < px) return;
            if (py + suf_py[i] < ny || ny + suf_ny[i] < py) return;
            if (i == nd) {
                if (px == nx && py == ny && chosen.size() >= 3) {
                    std::vector<LatticePoint> trace;
                    LatticePoint cur{0, 0};
                    for (const auto& [v, k] : chosen) {
                        trace.push_back(cur);
                        cur = cur + k * v;
                    }
                    out.push_back(to_origin(hull_polygon(std::move(trace))));
                }
                return;
            }
            dfs(i + 1, px, nx, py, ny);
            const LatticeVector v = dirs[i];
            Coord cpx = px, cnx = nx, cpy = py, cny = ny;
            for (Coord k = 1;; ++k) {
                cpx += std::max<Coord>(v.dx, 0);
                cnx += std::max<Coord>(-v.dx, 0);
                cpy += std::max<Coord>(v.dy, 0);
                cny += std::max<Coord>(-v.dy, 0);
                if (cpx > B || cnx > B || cpy > B || cny > B) break;
                chosen.emplace_back(v, k);
                dfs(i + 1, cpx, cnx, cpy, cny);
                chosen.pop_back();
            }
        };
    dfs(0, 0, 0, 0, 0);

    std::sort(out.begin(), out.end(), [](const LatticePolygon& a, const LatticePolygon& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.vertices() < b.vertices();
    });
    return out;
}

}  // namespace toricode

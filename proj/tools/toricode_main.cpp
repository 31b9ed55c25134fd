#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricode/bounds.hpp"
#include "toricode/code.hpp"
#include "toricode/errors.hpp"
#include "toricode/io.hpp"
#include "toricode/minkowski.hpp"

namespace {

using nlohmann::json;
using namespace toricode;

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitBadQ = 3;
constexpr int kExitOutsideSquare = 4;
constexpr int kExitBudget = 5;

std::string area_decimal(Coord twice_area) {
    std::string s = std::to_string(twice_area / 2);
    if (twice_area % 2 != 0) s += ".5";
    return s;
}

const char* class_name(IndecomposableClass c) {
    switch (c) {
        case IndecomposableClass::Point: return "Point";
        case IndecomposableClass::PrimitiveSegment: return "PrimitiveSegment";
        case IndecomposableClass::UnitTriangle: return "UnitTriangle";
        case IndecomposableClass::ExceptionalTriangle: return "ExceptionalTriangle";
        case IndecomposableClass::Decomposable: return "Decomposable";
    }
    return "?";
}

json witness_json(const MinkowskiWitness& w) {
    json segs = json::array();
    for (const auto& [dir, m] : w.segments.entries())
        segs.push_back({{"dir", {dir.dx, dir.dy}}, {"count", m}});
    json exc;
    if (w.exceptional) {
        exc = json::array();
        for (const auto& v : w.exceptional->vertices()) exc.push_back({v.x, v.y});
    }
    return {{"length", w.length()},
            {"anchor", {w.anchor.dx, w.anchor.dy}},
            {"segments", std::move(segs)},
            {"exceptional", std::move(exc)}};
}

std::string witness_text(const MinkowskiWitness& w) {
    std::string s;
    if (w.exceptional) {
        s += "triangle";
        for (const auto& v : w.exceptional->vertices())
            s += " (" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
    }
    for (const auto& [dir, m] : w.segments.entries()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(m) + "*[0,(" + std::to_string(dir.dx) + "," + std::to_string(dir.dy) +
             ")]";
    }
    if (s.empty()) s = "(empty)";
    s += " @ anchor (" + std::to_string(w.anchor.dx) + "," + std::to_string(w.anchor.dy) + ")";
    return s;
}

int cmd_info(const std::string& path, bool as_json) {
    const LatticePolygon p = load_polygon_file(path);
    if (p.dimension() < 2)
        std::cerr << "note: polygon is degenerate (" << (p.dimension() == 0 ? "point" : "segment")
                  << ")\n";
    const Coord a2 = twice_area(p);
    const PointCounts counts = lattice_point_counts(p);
    const FullLengthResult full = full_minkowski_length(p);
    const ExceptionalSearchResult exc = has_exceptional_maximal(p, full.length);

    if (as_json) {
        json j{{"schema", 1},
               {"twice_area", a2},
               {"total_points", counts.total},
               {"interior", counts.interior},
               {"boundary", counts.boundary},
               {"L", full.length},
               {"classification", class_name(classify(p))},
               {"exceptional_maximal", exc.found},
               {"witness", witness_json(full.witness)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "vertices:           ";
    for (const auto& v : p.vertices()) std::cout << " (" << v.x << "," << v.y << ")";
    std::cout << "\n";
    std::cout << "twice_area:          " << a2 << "\n";
    std::cout << "area:                " << area_decimal(a2) << "\n";
    std::cout << "lattice points:      " << counts.total << " (interior " << counts.interior
              << ", boundary " << counts.boundary << ")\n";
    std::cout << "L:                   " << full.length << "\n";
    std::cout << "classification:      " << class_name(classify(p)) << "\n";
    std::cout << "exceptional_maximal: " << (exc.found ? "true" : "false") << "\n";
    std::cout << "witness:             " << witness_text(full.witness) << "\n";
    return 0;
}

int cmd_bounds(const std::string& path, std::int64_t q, bool as_json) {
    const LatticePolygon p = load_polygon_file(path);
    const BoundReport r = bound_report(p, q);
    const char* branch = r.exceptional_case ? "exceptional" : "plain";
    if (as_json) {
        json j{{"schema", 1},
               {"q", r.q},
               {"block_length", r.block_length},
               {"dimension", r.dimension},
               {"L", r.L},
               {"twice_area", r.twice_area},
               {"branch", branch},
               {"threshold_q", r.threshold_q},
               {"bound_valid_at_q", r.bound_valid_at_q},
               {"d_lower", r.d_lower}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "q:            " << r.q << "\n";
    std::cout << "block_length: " << r.block_length << "\n";
    std::cout << "dimension:    " << r.dimension << "\n";
    std::cout << "twice_area:   " << r.twice_area << " (area " << area_decimal(r.twice_area)
              << ")\n";
    std::cout << "L:            " << r.L << "\n";
    std::cout << "branch:       " << branch << "\n";
    std::cout << "threshold_q:  " << r.threshold_q << "\n";
    std::cout << "valid_at_q:   " << (r.bound_valid_at_q ? "true" : "false") << "\n";
    std::cout << "d_lower:      " << r.d_lower << "\n";
    return 0;
}

int cmd_thresholds(const std::string& path, bool as_json) {
    const LatticePolygon p = load_polygon_file(path);
    const Coord a2 = twice_area(p);
    const FullLengthResult full = full_minkowski_length(p);
    if (full.length < 1) throw std::invalid_argument("thresholds need a polygon with L >= 1");
    const bool exc = has_exceptional_maximal(p, full.length).found;
    const std::int64_t texc = threshold_exceptional(a2, full.length);
    const std::int64_t tpl = threshold_plain(a2, full.length);
    const std::int64_t applicable = exc ? texc : tpl;
    if (as_json) {
        json j{{"schema", 1},
               {"twice_area", a2},
               {"L", full.length},
               {"exceptional_maximal", exc},
               {"threshold_exceptional", texc},
               {"threshold_plain", tpl},
               {"applicable_branch", exc ? "exceptional" : "plain"},
               {"applicable_threshold", applicable}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "twice_area:            " << a2 << "\n";
    std::cout << "L:                     " << full.length << "\n";
    std::cout << "exceptional_maximal:   " << (exc ? "true" : "false") << "\n";
    std::cout << "threshold_exceptional: " << texc << "\n";
    std::cout << "threshold_plain:       " << tpl << "\n";
    std::cout << "applicable:            " << (exc ? "exceptional" : "plain") << " branch, q >= "
              << applicable << "\n";
    return 0;
}

int cmd_mindist(const std::string& path, std::int64_t q, int workers, bool force, bool as_json) {
    const LatticePolygon p = load_polygon_file(path);
    const FieldSpec f = make_field(q);
    const EvaluationTable table = build_table(p, f);
    SearchLimits limits;
    limits.workers = workers;
    limits.force = force;
    const DistanceResult r = min_distance(table, limits);
    if (as_json) {
        json j{{"schema", 1},
               {"q", r.q},
               {"n", r.n},
               {"block_length", r.block_length},
               {"min_distance", r.min_distance},
               {"max_zeros", r.max_zeros},
               {"witness", r.witness},
               {"elapsed_ms", r.elapsed_ms},
               {"worker_count", r.worker_count}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "q:            " << r.q << "\n";
    std::cout << "n:            " << r.n << "\n";
    std::cout << "block_length: " << r.block_length << "\n";
    std::cout << "min_distance: " << r.min_distance << "\n";
    std::cout << "max_zeros:    " << r.max_zeros << "\n";
    std::cout << "witness:     ";
    for (int c : r.witness) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "elapsed_ms:   " << r.elapsed_ms << "\n";
    std::cout << "workers:      " << r.worker_count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice polygon analysis and toric surface code tools"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string info_path;
    auto* info = app.add_subcommand("info", "polygon invariants and Minkowski length");
    info->add_option("polygon", info_path, "polygon file (text or JSON)")->required();

    std::string bounds_path;
    std::int64_t bounds_q = 0;
    auto* bounds = app.add_subcommand("bounds", "minimum-distance lower bound at q");
    bounds->add_option("polygon", bounds_path, "polygon file")->required();
    bounds->add_option("--q", bounds_q, "prime power field size")->required();

    std::string thr_path;
    auto* thresholds = app.add_subcommand("thresholds", "bound validity thresholds");
    thresholds->add_option("polygon", thr_path, "polygon file")->required();

    std::string md_path;
    std::int64_t md_q = 0;
    int md_workers = 1;
    bool md_force = false;
    auto* mindist = app.add_subcommand("mindist", "exact minimum distance by exhaustive search");
    mindist->add_option("polygon", md_path, "polygon file")->required();
    mindist->add_option("--q", md_q, "prime power field size")->required();
    mindist->add_option("--workers", md_workers, "worker threads");
    mindist->add_flag("--force", md_force, "override the search budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_info(info_path, as_json);
        if (*bounds) return cmd_bounds(bounds_path, bounds_q, as_json);
        if (*thresholds) return cmd_thresholds(thr_path, as_json);
        if (*mindist) return cmd_mindist(md_path, md_q, md_workers, md_force, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotPrimePowerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadQ;
    } catch (const UnsupportedFieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadQ;
    } catch (const OutsideSquareError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutsideSquare;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

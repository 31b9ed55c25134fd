#include "toricode/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricode/errors.hpp"

namespace toricode {

LatticePolygon parse_polygon_text(std::istream& in) {
    std::vector<LatticePoint> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Coord x, y;
        if (!(ls >> x)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'");
            continue;  // blank or comment-only line
        }
        if (!(ls >> y)) throw ParseError("line " + std::to_string(lineno) + ": missing y coordinate");
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        pts.push_back({x, y});
    }
    if (pts.empty()) throw ParseError("no vertices in polygon file");
    return normalize(std::move(pts));
}

LatticePolygon parse_polygon_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty JSON array of [x, y] pairs");
    std::vector<LatticePoint> pts;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw ParseError("expected a JSON array of [x, y] integer pairs");
        pts.push_back({entry[0].get<Coord>(), entry[1].get<Coord>()});
    }
    return normalize(std::move(pts));
}

LatticePolygon load_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return parse_polygon_json(text);
    std::istringstream stream(text);
    return parse_polygon_text(stream);
}

}  // namespace toricode

#include "minkasym/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace minkasym {

ConvexPolygon parse_polygon_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("expected an object with a \"vertices\" array");
    std::vector<Vec2> pts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ParseError("each vertex must be [x, y]");
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    try {
        return make_polygon(std::move(pts));
    } catch (const DegenerateInput& e) {
        throw ParseError(std::string("degenerate polygon: ") + e.what());
    }
}

ConvexPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polygon_json(ss.str());
}

std::string polygon_to_json(const ConvexPolygon& p) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices()) doc["vertices"].push_back({v.x, v.y});
    return doc.dump();
}

void write_polygon_file(const ConvexPolygon& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path);
    out << polygon_to_json(p) << "\n";
}

}  // namespace minkasym

#pragma once

#include <string>

#include "minkasym/geom.hpp"

namespace minkasym {

// {"vertices": [[x, y], ...]}, re-canonicalised through make_polygon
ConvexPolygon parse_polygon_json(const std::string& text);
ConvexPolygon read_polygon_file(const std::string& path);
std::string polygon_to_json(const ConvexPolygon& p);
void write_polygon_file(const ConvexPolygon& p, const std::string& path);

}  // namespace minkasym

#include "harmtile/json_io.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace harmtile {

using nlohmann::json;

std::string color_name(Color c) { return c == Color::Black ? "black" : "white"; }

Color color_from_name(const std::string& name) {
    if (name == "black") return Color::Black;
    if (name == "white") return Color::White;
    throw std::invalid_argument("unknown color: " + name);
}

std::string tiling_to_json(const Tiling& t) {
    json tiles = json::array();
    for (const Tile& tile : t.tiles) {
        json vertices = json::array();
        for (Point p : tile.chunk.vertices) vertices.push_back({p.x, p.y});
        tiles.push_back({{"vertices", vertices},
                         {"class", tile_class_name(tile.cls)},
                         {"params", {{"a", tile.a}, {"b", tile.b}}},
                         {"dashed", tile.dashed_sides}});
    }
    json j = {{"width", t.rect.width},
              {"height", t.rect.height},
              {"color", color_name(t.color)},
              {"tiles", tiles}};
    return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
    json j = json::parse(text);
    Tiling t;
    t.rect.width = j.at("width").get<int>();
    t.rect.height = j.at("height").get<int>();
    t.color = color_from_name(j.at("color").get<std::string>());
    for (const json& jt : j.at("tiles")) {
        Tile tile;
        for (const json& jv : jt.at("vertices"))
            tile.chunk.vertices.push_back({jv.at(0).get<int>(), jv.at(1).get<int>()});
        tile.cls = tile_class_from_name(jt.at("class").get<std::string>());
        tile.a = jt.at("params").at("a").get<int>();
        tile.b = jt.at("params").at("b").get<int>();
        tile.dashed_sides = jt.at("dashed").get<std::vector<int>>();
        t.tiles.push_back(std::move(tile));
    }
    return t;
}

namespace {

// Rows listed top to bottom: row 0 of the grid is y = n-1.
json vector_to_rows(const PolarizedVector& v) {
    json rows = json::array();
    for (int y = v.n() - 1; y >= 0; --y) {
        std::string row(v.m(), '0');
        for (int x = 0; x < v.m(); ++x)
            if (v.get(x, y)) row[x] = '1';
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string kernel_to_json(int width, int height, Color polarity, const std::string& method,
                           const std::vector<PolarizedVector>& basis) {
    json vectors = json::array();
    for (const PolarizedVector& v : basis) vectors.push_back(vector_to_rows(v));
    json j = {{"width", width},
              {"height", height},
              {"polarity", color_name(polarity)},
              {"method", method},
              {"dimension", basis.size()},
              {"vectors", vectors}};
    return j.dump();
}

std::vector<PolarizedVector> kernel_from_json(const std::string& text) {
    json j = json::parse(text);
    const int m = j.at("width").get<int>() + 1;
    const int n = j.at("height").get<int>() + 1;
    Color polarity = color_from_name(j.at("polarity").get<std::string>());

    std::vector<PolarizedVector> basis;
    for (const json& rows : j.at("vectors")) {
        PolarizedVector v(m, n, polarity);
        if (static_cast<int>(rows.size()) != n)
            throw std::invalid_argument("kernel vector has wrong row count");
        for (int r = 0; r < n; ++r) {
            const std::string row = rows.at(r).get<std::string>();
            if (static_cast<int>(row.size()) != m)
                throw std::invalid_argument("kernel vector has wrong row width");
            int y = n - 1 - r;
            for (int x = 0; x < m; ++x)
                if (row[x] == '1') v.set(x, y, true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string manifest_to_json(const Manifest& m) {
    json entries = json::array();
    for (const ManifestEntry& e : m.entries)
        entries.push_back({{"file", e.file},
                           {"color", e.color},
                           {"index", e.index},
                           {"tiles", e.tile_count}});
    json j = {{"width", m.width}, {"height", m.height}, {"count", m.total}, {"tilings", entries}};
    return j.dump(2) + "\n";
}

Manifest manifest_from_json(const std::string& text) {
    json j = json::parse(text);
    Manifest m;
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    m.total = j.at("count").get<long long>();
    for (const json& je : j.at("tilings")) {
        ManifestEntry e;
        e.file = je.at("file").get<std::string>();
        e.color = je.at("color").get<std::string>();
        e.index = je.at("index").get<int>();
        e.tile_count = je.at("tiles").get<int>();
        m.entries.push_back(std::move(e));
    }
    return m;
}

std::string count_to_json(const CountBreakdown& b) {
    json j = {{"width", b.width},
              {"height", b.height},
              {"c", b.c},
              {"beta", b.beta},
              {"omega", b.omega}};
    if (b.count <= BigCount(std::numeric_limits<std::uint64_t>::max()))
        j["count"] = b.count.convert_to<std::uint64_t>();
    else
        j["count"] = b.count.str();
    return j.dump();
}

std::string report_to_json(const VerifyReport& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back(
            {{"name", c.name}, {"cases", c.cases}, {"ok", c.ok}, {"detail", c.detail}});
    json j = {{"ok", report.ok}, {"checks", checks}};
    return j.dump(2) + "\n";
}

}  // namespace harmtile

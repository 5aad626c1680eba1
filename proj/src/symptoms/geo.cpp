#include "epifuse/symptoms/geo.hpp"

#include "epifuse/core/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <fstream>

namespace epifuse::symptoms {

namespace {

std::vector<GeoPoint> parse_ring(const nlohmann::json& ring, const std::string& path)
{
    std::vector<GeoPoint> out;
    for (const auto& coord : ring) {
        if (!coord.is_array() || coord.size() < 2) {
            throw DataError(path + ": ring coordinate must be [lon, lat]");
        }
        out.push_back({coord[0].get<double>(), coord[1].get<double>()});
    }
    if (out.size() < 4 || out.front().lon != out.back().lon ||
        out.front().lat != out.back().lat) {
        throw DataError(path + ": ring must be closed (first vertex = last vertex)");
    }
    return out;
}

std::string normalize_place(std::string_view name)
{
    std::string out;
    bool pending_space = false;
    for (const char ch : name) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isspace(c) != 0) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    }
    return out;
}

} // namespace

std::vector<RegionPolygon> load_region_polygons(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open GeoJSON file: " + path);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
    if (doc.value("type", "") != "FeatureCollection" || !doc.contains("features")) {
        throw DataError(path + ": expected a GeoJSON FeatureCollection");
    }

    std::vector<RegionPolygon> polygons;
    for (const auto& feature : doc["features"]) {
        RegionPolygon poly;
        const auto& props = feature.value("properties", nlohmann::json::object());
        if (!props.contains("region")) {
            throw DataError(path + ": feature is missing the 'region' property");
        }
        poly.region = props["region"].get<std::string>();

        const auto& geom = feature.at("geometry");
        const std::string type = geom.value("type", "");
        if (type == "Polygon") {
            for (const auto& ring : geom.at("coordinates")) {
                poly.rings.push_back(parse_ring(ring, path));
            }
        } else if (type == "MultiPolygon") {
            for (const auto& part : geom.at("coordinates")) {
                for (const auto& ring : part) {
                    poly.rings.push_back(parse_ring(ring, path));
                }
            }
        } else {
            throw DataError(path + ": unsupported geometry type '" + type + "'");
        }
        polygons.push_back(std::move(poly));
    }
    return polygons;
}

bool point_in_polygon(const GeoPoint& p, const RegionPolygon& poly)
{
    // Even-odd ray casting toward +infinity in lon.
    bool inside = false;
    for (const auto& ring : poly.rings) {
        for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
            const GeoPoint& a = ring[i];
            const GeoPoint& b = ring[j];
            const bool crosses = (a.lat > p.lat) != (b.lat > p.lat);
            if (crosses) {
                const double x_at =
                    (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon;
                if (p.lon < x_at) inside = !inside;
            }
        }
    }
    return inside;
}

Gazetteer Gazetteer::load_tsv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open gazetteer: " + path);

    Gazetteer gaz;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw DataError(path + ": gazetteer rows must be name<TAB>region");
        }
        gaz.entries[normalize_place(line.substr(0, tab))] = line.substr(tab + 1);
    }
    return gaz;
}

std::optional<std::string> Gazetteer::lookup(std::string_view name) const
{
    const auto it = entries.find(normalize_place(name));
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> geolocate(const Tweet& tweet, std::span<const RegionPolygon> polygons,
                                     const Gazetteer& gazetteer)
{
    if (tweet.geo.has_value()) {
        const GeoPoint& p = *tweet.geo;
        if (std::fabs(p.lat) > 90.0 || std::fabs(p.lon) > 180.0) {
            throw DataError("malformed coordinates (" + std::to_string(p.lon) + ", " +
                            std::to_string(p.lat) + ")");
        }
        for (const RegionPolygon& poly : polygons) {
            if (point_in_polygon(p, poly)) return poly.region;
        }
    }
    if (!tweet.profile_location.empty()) {
        return gazetteer.lookup(tweet.profile_location);
    }
    return std::nullopt;
}

} // namespace epifuse::symptoms

#pragma once

#include "epifuse/symptoms/tweet.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace epifuse::symptoms {

/// Region boundary as one or more closed lon/lat rings (holes included via
/// the even-odd rule). Only ring closure is validated.
struct RegionPolygon {
    std::string region;
    std::vector<std::vector<GeoPoint>> rings;
};

/// Loads a GeoJSON FeatureCollection of Polygon / MultiPolygon features with
/// a "region" property.
std::vector<RegionPolygon> load_region_polygons(const std::string& path);

/// Even-odd rule over all rings of the polygon.
bool point_in_polygon(const GeoPoint& p, const RegionPolygon& poly);

/// Free-text location name -> region id, matched exactly after case folding
/// and whitespace normalization.
struct Gazetteer {
    std::unordered_map<std::string, std::string> entries;

    static Gazetteer load_tsv(const std::string& path);
    std::optional<std::string> lookup(std::string_view name) const;
};

/// Geo point first (point-in-polygon over the regions), then the profile
/// location through the gazetteer, else nothing. Coordinates outside
/// [-180, 180] x [-90, 90] are a DataError.
std::optional<std::string> geolocate(const Tweet& tweet, std::span<const RegionPolygon> polygons,
                                     const Gazetteer& gazetteer);

} // namespace epifuse::symptoms

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "relaxproj/geometry.hpp"
#include "relaxproj/schedule.hpp"
#include "relaxproj/solver.hpp"

namespace relaxproj {

/// Malformed configuration; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"type":"halfspace","a":[...],"b":0.0}, {"type":"hyperplane",...},
/// {"type":"ball","center":[...],"radius":r}, {"type":"box","lo":[...],"hi":[...]},
/// {"type":"simplex"}.
SetSpec set_from_json(const nlohmann::json& j, const std::string& path = "set");
nlohmann::json to_json(const SetSpec& set);

/// {"kind":"paper_n2"} | {"kind":"constant","beta":[...],"j":[...]} |
/// {"kind":"cyclic","weight":w,"n":N} | {"kind":"tabulated","rows":[{"beta":[...],"j":[...]}, ...]} |
/// {"kind":"paper_perturb3"} | {"kind":"paper_intermittent3"}.
/// Control indices are 1-based. For "cyclic", N comes from "n" or from `set_count`.
Schedule schedule_from_json(const nlohmann::json& j, const std::string& path = "schedule",
                            std::optional<std::size_t> set_count = std::nullopt);

Point point_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json to_json(const Point& p);

nlohmann::json to_json(const SeriesReport& report);
nlohmann::json to_json(const AnalyticFacts& facts);

}  // namespace relaxproj

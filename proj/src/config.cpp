#include "relaxproj/config.hpp"

#include <fstream>

#include "relaxproj/error.hpp"

namespace relaxproj {

using nlohmann::json;

namespace {

std::int64_t integer_or(const json& j, const char* key, std::int64_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ConfigError(std::string(key) + ": expected an integer");
  return j[key].get<std::int64_t>();
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string(key) + ": expected a number");
  return j[key].get<double>();
}

std::optional<std::filesystem::path> path_or_empty(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_string()) throw ConfigError(std::string(key) + ": expected a string");
  return std::filesystem::path(j[key].get<std::string>());
}

}  // namespace

CliConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>: expected an object");
  for (const char* key : {"sets", "schedule", "x0"}) {
    if (!j.contains(key)) throw ConfigError(std::string(key) + ": missing required field");
  }
  if (!j["sets"].is_array() || j["sets"].empty()) throw ConfigError("sets: expected a nonempty array");

  std::vector<SetSpec> sets;
  for (std::size_t i = 0; i < j["sets"].size(); ++i) {
    sets.push_back(set_from_json(j["sets"][i], "sets[" + std::to_string(i) + "]"));
  }
  Schedule schedule = schedule_from_json(j["schedule"], "schedule", sets.size());
  if (schedule.set_count() != sets.size()) {
    throw ConfigError("schedule: schedule has N = " + std::to_string(schedule.set_count()) + " weights but " +
                      std::to_string(sets.size()) + " sets are configured");
  }
  Point x0 = point_from_json(j["x0"], "x0");

  const std::size_t dimension = static_cast<std::size_t>(integer_or(j, "dimension", static_cast<std::int64_t>(x0.dim())));
  if (dimension != x0.dim()) {
    throw ConfigError("x0: has dimension " + std::to_string(x0.dim()) + ", expected " + std::to_string(dimension));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto d = sets[i].dimension();
    if (d && *d != dimension) {
      throw ConfigError("sets[" + std::to_string(i) + "]: has dimension " + std::to_string(*d) + ", expected " +
                        std::to_string(dimension));
    }
  }

  std::optional<Point> reference;
  if (j.contains("reference_point")) reference = point_from_json(j["reference_point"], "reference_point");

  CliConfig out{dimension,
                RunConfig{std::move(sets), std::move(schedule), std::move(x0), integer_or(j, "max_iter", 10000),
                          number_or(j, "tol_feas", 1e-6), number_or(j, "tol_step", 0.0), std::move(reference),
                          integer_or(j, "trace_stride", 1)},
                path_or_empty(j, "trace_path"), path_or_empty(j, "summary_path")};
  try {
    validate(out.run);
  } catch (const InputError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return out;
}

CliConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": invalid JSON (" + e.what() + ")");
  }
  return config_from_json(j);
}

}  // namespace relaxproj

#include "relaxproj/json_io.hpp"

#include <cmath>
#include <vector>

#include "relaxproj/error.hpp"

namespace relaxproj {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

IndexSet indices(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of 1-based indices");
  IndexSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_number_integer() || j[i].get<long long>() < 1) fail(p, "expected a 1-based index");
    out.push_back(static_cast<std::size_t>(j[i].get<long long>() - 1));
  }
  return out;
}

template <class F>
auto wrap(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

BetaVector beta_from_json(const json& j, const std::string& path) {
  auto values = numbers(j, path);
  return wrap(path, [&] { return BetaVector(std::move(values)); });
}

}  // namespace

Point point_from_json(const json& j, const std::string& path) {
  auto values = numbers(j, path);
  return wrap(path, [&] { return Point(std::move(values)); });
}

json to_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

SetSpec set_from_json(const json& j, const std::string& path) {
  const json& type = field(j, "type", path);
  if (!type.is_string()) fail(path + ".type", "expected a string");
  const std::string name = type.get<std::string>();
  if (name == "halfspace" || name == "hyperplane") {
    Point a = point_from_json(field(j, "a", path), path + ".a");
    const double b = number(field(j, "b", path), path + ".b");
    return wrap(path, [&] { return name == "halfspace" ? SetSpec::half_space(a, b) : SetSpec::hyperplane(a, b); });
  }
  if (name == "ball") {
    Point center = point_from_json(field(j, "center", path), path + ".center");
    const double radius = number(field(j, "radius", path), path + ".radius");
    return wrap(path + ".radius", [&] { return SetSpec::ball(center, radius); });
  }
  if (name == "box") {
    Point lo = point_from_json(field(j, "lo", path), path + ".lo");
    Point hi = point_from_json(field(j, "hi", path), path + ".hi");
    return wrap(path, [&] { return SetSpec::box(lo, hi); });
  }
  if (name == "simplex") return SetSpec::simplex();
  fail(path + ".type", "unknown set type '" + name + "'");
}

json to_json(const SetSpec& set) {
  json out;
  out["type"] = std::string(set.type_name());
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace> || std::is_same_v<T, Hyperplane>) {
          out["a"] = to_json(s.normal);
          out["b"] = s.offset;
        } else if constexpr (std::is_same_v<T, Ball>) {
          out["center"] = to_json(s.center);
          out["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, Box>) {
          out["lo"] = to_json(s.lower);
          out["hi"] = to_json(s.upper);
        }
      },
      set.shape());
  return out;
}

Schedule schedule_from_json(const json& j, const std::string& path, std::optional<std::size_t> set_count) {
  const json& kind_field = field(j, "kind", path);
  if (!kind_field.is_string()) fail(path + ".kind", "expected a string");
  const auto kind = schedule_kind_from_string(kind_field.get<std::string>());
  if (!kind) fail(path + ".kind", "unknown schedule kind '" + kind_field.get<std::string>() + "'");

  switch (*kind) {
    case ScheduleKind::paper_n2:
      return Schedule::paper_n2();
    case ScheduleKind::paper_perturb3:
      return Schedule::paper_perturb3();
    case ScheduleKind::paper_intermittent3:
      return Schedule::paper_intermittent3();
    case ScheduleKind::constant: {
      BetaVector beta = beta_from_json(field(j, "beta", path), path + ".beta");
      std::optional<IndexSet> control;
      if (j.contains("j")) control = indices(j["j"], path + ".j");
      return wrap(path, [&] { return Schedule::constant(beta, control); });
    }
    case ScheduleKind::cyclic: {
      const double weight = number(field(j, "weight", path), path + ".weight");
      std::optional<std::size_t> count = set_count;
      if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) fail(path + ".n", "expected a positive integer");
        count = static_cast<std::size_t>(j["n"].get<long long>());
      }
      if (!count) fail(path + ".n", "cyclic schedule needs the number of sets");
      return wrap(path, [&] { return Schedule::cyclic(*count, weight); });
    }
    case ScheduleKind::tabulated: {
      const json& rows_json = field(j, "rows", path);
      if (!rows_json.is_array()) fail(path + ".rows", "expected an array");
      std::vector<ScheduleRow> rows;
      for (std::size_t r = 0; r < rows_json.size(); ++r) {
        const std::string p = path + ".rows[" + std::to_string(r) + "]";
        BetaVector beta = beta_from_json(field(rows_json[r], "beta", p), p + ".beta");
        std::optional<IndexSet> control;
        if (rows_json[r].contains("j")) control = indices(rows_json[r]["j"], p + ".j");
        rows.push_back({std::move(beta), std::move(control)});
      }
      return wrap(path, [&] { return Schedule::tabulated(std::move(rows)); });
    }
  }
  fail(path + ".kind", "unsupported schedule kind");
}

json to_json(const AnalyticFacts& facts) {
  const auto opt = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
  return {{"nu_series_diverges", opt(facts.nu_series_diverges)},
          {"mu_series_diverges", opt(facts.mu_series_diverges)},
          {"control_series_diverges", opt(facts.control_series_diverges)},
          {"off_control_tail_converges", opt(facts.off_control_tail_converges)}};
}

json to_json(const SeriesReport& report) {
  return {{"horizon", report.horizon},
          {"block_boundaries", report.blocks.boundaries},
          {"nu_blocks", report.nu_blocks},
          {"nu_j_blocks", report.nu_j_blocks},
          {"beta_j_blocks", report.beta_j_blocks},
          {"sum_nu_blocks", report.sum_nu_blocks},
          {"sum_nu_j_blocks", report.sum_nu_j_blocks},
          {"sum_beta_j_blocks", report.sum_beta_j_blocks},
          {"cum_nu", report.cum_nu},
          {"cum_mu_min", report.cum_mu_min},
          {"off_control_tail", report.off_control_tail},
          {"max_s", report.max_s}};
}

}  // namespace relaxproj

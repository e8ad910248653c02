#include "relaxproj/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

constexpr std::string_view kKindNames[] = {"tabulated",      "constant",      "cyclic",
                                           "paper_n2",       "paper_perturb3", "paper_intermittent3"};

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet normalized(IndexSet indices, std::size_t set_count, const char* what) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= set_count) {
    throw InputError(std::string(what) + ": control index " + std::to_string(indices.back() + 1) +
                     " out of range 1.." + std::to_string(set_count));
  }
  return indices;
}

void require_subset_of_active(const IndexSet& control, const BetaVector& beta, const char* what) {
  for (std::size_t i : control) {
    if (beta[i] == 0.0) {
      throw InputError(std::string(what) + ": control index " + std::to_string(i + 1) + " is not active (beta = 0)");
    }
  }
}

double inv(Iteration m) { return 1.0 / static_cast<double>(m); }
double inv_sq(Iteration m) { return 1.0 / (static_cast<double>(m) * static_cast<double>(m)); }

}  // namespace

std::string_view to_string(ScheduleKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<ScheduleKind> schedule_kind_from_string(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (kKindNames[i] == name) return static_cast<ScheduleKind>(i);
  }
  return std::nullopt;
}

Schedule Schedule::tabulated(std::vector<ScheduleRow> rows) {
  if (rows.empty()) throw InputError("tabulated schedule needs at least one row");
  const std::size_t count = rows.front().beta.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    if (row.beta.size() != count) {
      throw InputError("tabulated schedule: row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.beta.size()) + " weights, expected " + std::to_string(count));
    }
    if (row.control) {
      row.control = normalized(std::move(*row.control), count, "tabulated schedule");
      require_subset_of_active(*row.control, row.beta, "tabulated schedule");
    }
  }
  Schedule out(ScheduleKind::tabulated, count);
  out.rows_ = std::move(rows);
  return out;
}

Schedule Schedule::constant(BetaVector beta, std::optional<IndexSet> control) {
  Schedule out(ScheduleKind::constant, beta.size());
  if (control) {
    control = normalized(std::move(*control), beta.size(), "constant schedule");
    require_subset_of_active(*control, beta, "constant schedule");
  }
  out.constant_beta_ = std::move(beta);
  out.constant_control_ = std::move(control);
  return out;
}

Schedule Schedule::cyclic(std::size_t set_count, double weight) {
  if (set_count == 0) throw InputError("cyclic schedule needs at least one set");
  if (!(weight > 0.0 && weight <= 2.0)) throw InputError("cyclic schedule: weight must lie in (0, 2]");
  Schedule out(ScheduleKind::cyclic, set_count);
  out.cyclic_weight_ = weight;
  return out;
}

Schedule Schedule::paper_n2() { return Schedule(ScheduleKind::paper_n2, 2); }
Schedule Schedule::paper_perturb3() { return Schedule(ScheduleKind::paper_perturb3, 3); }
Schedule Schedule::paper_intermittent3() { return Schedule(ScheduleKind::paper_intermittent3, 3); }

bool Schedule::has_control_rule() const {
  switch (kind_) {
    case ScheduleKind::tabulated:
      return std::any_of(rows_.begin(), rows_.end(), [](const ScheduleRow& r) { return r.control.has_value(); });
    case ScheduleKind::constant:
      return constant_control_.has_value();
    case ScheduleKind::paper_perturb3:
    case ScheduleKind::paper_intermittent3:
      return true;
    default:
      return false;
  }
}

std::optional<Iteration> Schedule::horizon() const {
  if (kind_ == ScheduleKind::tabulated) return static_cast<Iteration>(rows_.size());
  return std::nullopt;
}

AnalyticFacts Schedule::analytic() const {
  if (restricted_) return {};
  switch (kind_) {
    case ScheduleKind::paper_n2:
      return {true, false, true, true};
    case ScheduleKind::paper_perturb3:
      return {false, false, true, true};
    case ScheduleKind::paper_intermittent3:
      return {false, false, true, false};
    case ScheduleKind::cyclic: {
      const bool interior = cyclic_weight_ < 2.0;
      return {interior, interior, interior, true};
    }
    case ScheduleKind::constant: {
      const BetaVector& beta = *constant_beta_;
      const IndexSet active = active_indices(beta);
      const IndexSet control = constant_control_ ? *constant_control_ : active;
      const bool interior = beta.sum() < 2.0;
      const bool covers = control.size() == set_count_;
      return {interior && active.size() == set_count_, interior && !active.empty(), interior && covers,
              control.size() == active.size()};
    }
    case ScheduleKind::tabulated:
      break;
  }
  return {};
}

void Schedule::check_index(Iteration n) const {
  if (n < 1) throw InputError("schedule index must be >= 1 (got " + std::to_string(n) + ")");
  if (kind_ == ScheduleKind::tabulated && n > static_cast<Iteration>(rows_.size())) {
    throw InputError("tabulated schedule queried at n = " + std::to_string(n) + " past its horizon " +
                     std::to_string(rows_.size()));
  }
}

BetaVector Schedule::raw_beta(Iteration n) const {
  switch (kind_) {
    case ScheduleKind::tabulated:
      return rows_[static_cast<std::size_t>(n - 1)].beta;
    case ScheduleKind::constant:
      return *constant_beta_;
    case ScheduleKind::cyclic: {
      std::vector<double> w(set_count_, 0.0);
      w[static_cast<std::size_t>((n - 1) % static_cast<Iteration>(set_count_))] = cyclic_weight_;
      return BetaVector(std::move(w));
    }
    case ScheduleKind::paper_n2:
      return BetaVector({inv(n), 2.0 - 2.0 * inv(n)});
    case ScheduleKind::paper_perturb3: {
      if (n == 1) return BetaVector::zeros(3);
      const Iteration m = n / 2;
      if (n % 2 == 0) return BetaVector({inv_sq(m), inv(m), 2.0 - 2.0 * inv(m)});
      return BetaVector({inv(m), inv_sq(m), 2.0 - 2.0 * inv(m)});
    }
    case ScheduleKind::paper_intermittent3: {
      const Iteration t = n + 5;
      const Iteration m = t / 3;
      switch (t % 3) {
        case 0:
          return BetaVector({1.0, inv(m), inv_sq(m)});
        case 1:
          return BetaVector({inv(m), 1.0, inv_sq(m)});
        default:
          return BetaVector({inv_sq(m), inv(m), 1.0});
      }
    }
  }
  throw InputError("unknown schedule kind");
}

std::optional<IndexSet> Schedule::raw_control(Iteration n) const {
  switch (kind_) {
    case ScheduleKind::tabulated:
      return rows_[static_cast<std::size_t>(n - 1)].control;
    case ScheduleKind::constant:
      return constant_control_;
    case ScheduleKind::paper_perturb3:
      if (n == 1) return IndexSet{};
      return n % 2 == 0 ? IndexSet{1, 2} : IndexSet{0, 2};
    case ScheduleKind::paper_intermittent3:
      return IndexSet{static_cast<std::size_t>((n + 5) % 3)};
    default:
      return std::nullopt;
  }
}

BetaVector Schedule::beta_at(Iteration n) const {
  check_index(n);
  BetaVector beta = raw_beta(n);
  if (!restricted_) return beta;
  const IndexSet control = j_at(n);
  std::vector<double> masked(beta.size(), 0.0);
  for (std::size_t i : control) masked[i] = beta[i];
  return BetaVector(std::move(masked));
}

IndexSet Schedule::j_at(Iteration n) const {
  check_index(n);
  const IndexSet active = active_indices(raw_beta(n));
  const auto control = raw_control(n);
  return control ? intersect(*control, active) : active;
}

Schedule restrict_to_j(const Schedule& schedule) {
  Schedule out = schedule;
  out.restricted_ = true;
  return out;
}

BlockPartition greedy_blocks(const Schedule& schedule, Iteration horizon) {
  if (horizon < 1) throw InputError("greedy_blocks: horizon must be >= 1");
  const std::size_t count = schedule.set_count();
  BlockPartition out;
  std::vector<bool> seen(count, false);
  std::size_t covered = 0;
  for (Iteration n = 1; n <= horizon; ++n) {
    for (std::size_t i : schedule.j_at(n)) {
      if (!seen[i]) {
        seen[i] = true;
        ++covered;
      }
    }
    if (covered == count) {
      out.boundaries.push_back(n);
      std::fill(seen.begin(), seen.end(), false);
      covered = 0;
    }
  }
  return out;
}

BlockPartition periodic_blocks(Iteration period, Iteration horizon) {
  if (period < 1) throw InputError("block period must be >= 1");
  BlockPartition out;
  for (Iteration n = period; n <= horizon; n += period) out.boundaries.push_back(n);
  return out;
}

SeriesReport series_report(const Schedule& schedule, const BlockPartition& blocks, Iteration horizon) {
  if (horizon < 1) throw InputError("series_report: horizon must be >= 1");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks.boundaries[k] < 1 || blocks.boundaries[k] > horizon ||
        (k > 0 && blocks.boundaries[k] <= blocks.boundaries[k - 1])) {
      throw InputError("series_report: block boundaries must increase within [1, horizon]");
    }
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();

  SeriesReport report;
  report.horizon = horizon;
  report.blocks = blocks;
  report.nu_blocks.assign(blocks.size(), kInf);
  report.nu_j_blocks.assign(blocks.size(), kInf);
  report.beta_j_blocks.assign(blocks.size(), kInf);

  std::size_t k = 0;
  for (Iteration n = 1; n <= horizon; ++n) {
    const BetaVector beta = schedule.beta_at(n);
    const CoefficientRow row = coefficients(beta);
    const IndexSet active = active_indices(beta);
    const IndexSet control = schedule.j_at(n);

    report.cum_nu += min_over(row.nu, active);
    report.cum_mu_min += min_over(row.mu, active);
    report.max_s = std::max(report.max_s, row.s);
    for (std::size_t i : active) {
      if (!std::binary_search(control.begin(), control.end(), i)) report.off_control_tail += beta[i];
    }

    while (k < blocks.size() && n > blocks.end_of(k)) ++k;
    if (k < blocks.size()) {
      for (std::size_t i : active) report.nu_blocks[k] = std::min(report.nu_blocks[k], row.nu[i]);
      for (std::size_t i : control) {
        report.nu_j_blocks[k] = std::min(report.nu_j_blocks[k], row.nu[i]);
        report.beta_j_blocks[k] = std::min(report.beta_j_blocks[k], beta[i]);
      }
    }
  }
  // A block with no active index contributes nothing.
  for (auto* series : {&report.nu_blocks, &report.nu_j_blocks, &report.beta_j_blocks}) {
    for (double& v : *series) {
      if (v == kInf) v = 0.0;
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    report.sum_nu_blocks += report.nu_blocks[b];
    report.sum_nu_j_blocks += report.nu_j_blocks[b];
    report.sum_beta_j_blocks += report.beta_j_blocks[b];
  }
  return report;
}

std::optional<bool> looks_divergent(std::span<const double> terms) {
  std::vector<std::pair<double, double>> samples;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k] > 0.0) samples.emplace_back(std::log(static_cast<double>(k + 1)), std::log(terms[k]));
  }
  if (samples.size() < 4) return std::nullopt;
  const std::size_t first = samples.size() / 2;
  const double count = static_cast<double>(samples.size() - first);
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t j = first; j < samples.size(); ++j) {
    mean_x += samples[j].first;
    mean_y += samples[j].second;
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t j = first; j < samples.size(); ++j) {
    const double dx = samples[j].first - mean_x;
    sxx += dx * dx;
    sxy += dx * (samples[j].second - mean_y);
  }
  const double slope = sxy / sxx;
  // q = 1 is the harmonic boundary, which diverges.
  return slope >= -1.0 - 1e-9;
}

NullificationResult nullify_offcontrol(const Schedule& schedule, Iteration period, Iteration horizon,
                                       std::optional<double> epsilon) {
  if (period < 1) throw InputError("nullify_offcontrol: period must be >= 1");
  if (horizon < 1) throw InputError("nullify_offcontrol: horizon must be >= 1");
  if (epsilon && !(*epsilon > 0.0)) throw InputError("nullify_offcontrol: epsilon must be positive");

  const std::size_t count = schedule.set_count();
  std::vector<std::vector<double>> weights;
  std::vector<IndexSet> controls;
  weights.reserve(static_cast<std::size_t>(horizon));
  double max_s = 0.0;
  for (Iteration n = 1; n <= horizon; ++n) {
    const BetaVector beta = schedule.beta_at(n);
    max_s = std::max(max_s, beta.sum());
    weights.emplace_back(beta.weights().begin(), beta.weights().end());
    controls.push_back(schedule.j_at(n));
  }
  const double margin = 2.0 - max_s;
  if (epsilon ? max_s > 2.0 - *epsilon + BetaVector::kSumTolerance : !(margin > 0.0)) {
    throw InputError("nullify_offcontrol: sums of weights must stay below 2 - epsilon (max s = " +
                     std::to_string(max_s) + ")");
  }

  const BlockPartition blocks = periodic_blocks(period, horizon);
  const auto in_control = [&](Iteration n, std::size_t i) {
    const IndexSet& c = controls[static_cast<std::size_t>(n - 1)];
    return std::binary_search(c.begin(), c.end(), i);
  };
  const auto block_minimum = [&](std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    for (Iteration n = blocks.begin_of(k); n <= blocks.end_of(k); ++n) {
      for (double w : weights[static_cast<std::size_t>(n - 1)]) {
        if (w > 0.0) best = std::min(best, w);
      }
    }
    return best;
  };

  double mass = 0.0;
  int passes = 0;
  const int max_passes = static_cast<int>(period) * static_cast<int>(count);
  for (int pass = 0; pass < max_passes; ++pass) {
    std::vector<double> minima(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const double m = block_minimum(k);
      minima[k] = std::isfinite(m) ? m : 0.0;
    }
    if (looks_divergent(minima).value_or(false)) break;

    bool changed = false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (minima[k] == 0.0) continue;
      bool done = false;
      for (Iteration n = blocks.begin_of(k); n <= blocks.end_of(k) && !done; ++n) {
        auto& w = weights[static_cast<std::size_t>(n - 1)];
        for (std::size_t i = 0; i < count; ++i) {
          if (w[i] == minima[k] && !in_control(n, i)) {
            mass += w[i];
            w[i] = 0.0;
            changed = done = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
    ++passes;
  }

  std::vector<ScheduleRow> rows;
  rows.reserve(weights.size());
  for (std::size_t r = 0; r < weights.size(); ++r) rows.push_back({BetaVector(std::move(weights[r])), controls[r]});
  return {Schedule::tabulated(std::move(rows)), mass, passes, margin};
}

}  // namespace relaxproj

// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "relaxproj/diagnostics.hpp"
#include "relaxproj/schedule.hpp"
#include "relaxproj/solver.hpp"

using namespace relaxproj;

namespace {

constexpr double kSlackTol = 1e-10;
constexpr double kFeasTol = 1e-3;
constexpr Iteration kMaxIter = 100000;
constexpr double kFejerTol = 1e-10;
constexpr double kOracleTol = 1e-5;
constexpr double kReflectionTol = 1e-12;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Point random_point(std::mt19937_64& rng, std::size_t dim, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<double> v(dim);
  for (double& c : v) c = u(rng);
  return Point(std::move(v));
}

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport r = run_inequality_sweep({.trials = 1000, .seed = 42});
  const double elapsed = seconds_since(start);
  std::string detail;
  for (const auto& f : r.families) detail += f.name + "=" + fmt(f.min_slack) + " ";
  detail += "time=" + fmt(elapsed) + "s";
  report(1, r.all_passed() && elapsed < 10.0, detail);
}

void criterion2() {
  RunConfig config{{SetSpec::half_space({1.0, 0.0}, 0.0), SetSpec::half_space({0.0, 1.0}, 0.0)},
                   Schedule::paper_n2(),
                   {1.0, 1.0}};
  config.max_iter = kMaxIter;
  config.tol_feas = kFeasTol;
  config.reference_point = Point{0.0, 0.0};
  const RunResult result = run(config);

  bool fejer = true;
  for (std::size_t k = 1; k < result.trace.size(); ++k)
    fejer = fejer && *result.trace[k].dist_to_ref <= *result.trace[k - 1].dist_to_ref + kFejerTol;

  const Schedule& sched = config.schedule;
  const SeriesReport series = series_report(sched, greedy_blocks(sched, 1000), 1000);
  const bool nu_ok = series.cum_nu >= 7.4 && series.cum_nu <= 7.6;
  const bool mu_ok = series.cum_mu_min >= 3.25 && series.cum_mu_min <= 3.33;
  const bool ok = result.status == RunStatus::feasible && fejer && nu_ok && mu_ok;
  report(2, ok,
         "status=" + std::string(to_string(result.status)) + " iterations=" + std::to_string(result.iterations) +
             " fejer=" + (fejer ? "yes" : "no") + " sum_nu=" + fmt(series.cum_nu) +
             " sum_min_mu=" + fmt(series.cum_mu_min));
}

std::vector<SetSpec> three_sets_through_origin(std::uint64_t seed) {
  return random_feasible_instance(seed, 2, 3, Point::zeros(2));
}

void criterion3() {
  const Schedule sched = Schedule::paper_perturb3();
  const Schedule restricted = restrict_to_j(sched);

  // Perturbation sum of the restriction against the off-control tail.
  double perturbation = 0.0, at_1e4 = 0.0;
  for (Iteration n = 1; n <= kMaxIter; ++n) {
    const BetaVector b = sched.beta_at(n), bt = restricted.beta_at(n);
    for (std::size_t i = 0; i < b.size(); ++i) perturbation += std::abs(b[i] - bt[i]);
    if (n == 10000) at_1e4 = perturbation;
  }
  const SeriesReport tail = series_report(sched, {}, kMaxIter);
  const bool equal = std::abs(perturbation - tail.off_control_tail) <= 1e-12 * tail.off_control_tail;
  const double growth = tail.off_control_tail - at_1e4;
  const bool flat = growth <= 1e-4;

  std::mt19937_64 rng(2024);
  RunConfig config{three_sets_through_origin(2024), sched, random_point(rng, 2, 5.0)};
  config.max_iter = kMaxIter;
  config.tol_feas = kFeasTol;
  config.trace_stride = kMaxIter;
  const RunResult original = run(config);
  config.schedule = restricted;
  const RunResult restricted_run = run(config);
  const double gap = norm(original.final_point - restricted_run.final_point);

  const bool ok = equal && flat && original.status == RunStatus::feasible &&
                  restricted_run.status == RunStatus::feasible && gap <= 10.0 * kFeasTol;
  report(3, ok,
         "perturbation=" + fmt(perturbation) + " off_control_tail=" + fmt(tail.off_control_tail) +
             " growth_1e4_to_1e5=" + fmt(growth) + (flat ? "" : " (exceeds 1e-4)") +
             " original=" + std::string(to_string(original.status)) + "@" + std::to_string(original.iterations) +
             " restricted=" + std::string(to_string(restricted_run.status)) + "@" +
             std::to_string(restricted_run.iterations) + " terminal_gap=" + fmt(gap));
}

void criterion4() {
  const Schedule sched = Schedule::paper_intermittent3();
  const Iteration p = 3;

  const SeriesReport series = series_report(sched, periodic_blocks(p, kMaxIter), kMaxIter);
  bool control_ok = !series.beta_j_blocks.empty();
  for (double v : series.beta_j_blocks) control_ok = control_ok && v == 1.0;
  const bool s_ok = series.max_s <= 1.75;

  // Three lines through the origin: C = {0}, so the run has to use every control step.
  const double r3 = std::sqrt(3.0);
  RunConfig config{{SetSpec::hyperplane({0.0, 1.0}, 0.0), SetSpec::hyperplane({r3, -1.0}, 0.0),
                    SetSpec::hyperplane({r3, 1.0}, 0.0)},
                   sched,
                   {3.0, -4.0}};
  config.max_iter = kMaxIter;
  config.tol_feas = kFeasTol;
  config.trace_stride = kMaxIter;
  const RunResult result = run(config);

  bool null_ok = true;
  double prev_mass = 0.0;
  std::string masses;
  for (Iteration horizon : {30, 90, 300, 900, 3000}) {
    const NullificationResult r = nullify_offcontrol(sched, p, horizon);
    // Blocks are k = 1..horizon/3 with m = k + 1.
    double bound = 0.0;
    for (Iteration m = 2; m <= horizon / p + 1; ++m) bound += 1.0 / m + 1.0 / double(m * m);
    null_ok = null_ok && r.passes <= static_cast<int>(p * 3) && std::isfinite(r.nullified_mass) &&
              r.nullified_mass <= bound && r.nullified_mass >= prev_mass;
    prev_mass = r.nullified_mass;
    masses += (masses.empty() ? "" : ",") + fmt(r.nullified_mass) + "/" + std::to_string(r.passes);
  }

  const bool ok = s_ok && control_ok && result.status == RunStatus::feasible && null_ok;
  report(4, ok,
         "max_s=" + fmt(series.max_s) + " control_blocks_all_one=" + (control_ok ? "yes" : "no") +
             " run=" + std::string(to_string(result.status)) + "@" + std::to_string(result.iterations) +
             " nullified_mass/passes=" + masses);
}

SetSpec random_set_of_variant(std::mt19937_64& rng, int variant) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.2, 2.0);
  const Point a = random_point(rng, 2, 2.0);
  switch (variant) {
    case 0: return SetSpec::half_space(norm(a) > 1e-3 ? a : Point{1.0, 0.0}, u(rng));
    case 1: return SetSpec::hyperplane(norm(a) > 1e-3 ? a : Point{0.0, 1.0}, u(rng));
    case 2: return SetSpec::ball(a, pos(rng));
    case 3: return SetSpec::box(a, a + Point{pos(rng), pos(rng)});
    case 4: return SetSpec::box(a, a + Point{0.0, pos(rng)});
    default: return SetSpec::simplex();
  }
}

void criterion5() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SetSpec set = random_set_of_variant(rng, trial % 6);
    const Point x = random_point(rng, 2, 3.0);
    worst = std::max(worst, norm(project(set, x) - brute_force_project(set, x)));
  }
  const double elapsed = seconds_since(start);
  report(5, worst <= kOracleTol && elapsed < 30.0, "max_error=" + fmt(worst) + " time=" + fmt(elapsed) + "s");
}

void criterion6() {
  const Point c{-1.0, 2.0};
  RunConfig config{{SetSpec::hyperplane({3.0, 4.0}, 5.0), SetSpec::ball(c, 1.0)},
                   Schedule::constant(BetaVector({2.0, 0.0})),
                   {2.0, 3.0}};
  config.max_iter = 1000;
  config.tol_step = 1e-12;
  config.reference_point = c;
  const RunResult result = run(config);

  const double d0 = *result.trace.front().dist_to_ref;
  double drift = 0.0, max_nu = 0.0;
  for (const TraceRow& row : result.trace) {
    drift = std::max(drift, std::abs(*row.dist_to_ref - d0));
    max_nu = std::max(max_nu, row.nu_min_active);
  }
  const bool ok = result.status == RunStatus::max_iter && result.iterations == 1000 && drift <= kReflectionTol &&
                  max_nu == 0.0;
  report(6, ok,
         "status=" + std::string(to_string(result.status)) + " drift=" + fmt(drift) + " max_nu=" + fmt(max_nu));
}

void criterion7() {
  std::mt19937_64 rng(7);
  double worst = INFINITY;
  std::size_t checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = std::vector<std::size_t>{1, 2, 3, 5}[trial % 4];
    const std::size_t count = 1 + static_cast<std::size_t>(trial % 5);
    const Point c = random_point(rng, dim, 1.0);
    const auto sets = random_feasible_instance(rng(), dim, count, c);
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(count);
    double total = 0.0;
    for (double& v : w) total += (v = e(rng));
    const double s = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    for (double& v : w) v *= s / total;
    const BetaVector beta(w);
    const IndexSet active = active_indices(beta);
    const Point x = random_point(rng, dim, 5.0);
    for (std::size_t i : active) {
      worst = std::min(worst, substitution_margin(sets, beta, active, i, x, c));
      ++checks;
    }
  }
  report(7, worst >= -kSlackTol, "min_margin=" + fmt(worst) + " checks=" + std::to_string(checks));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  return failures == 0 ? 0 : 1;
}

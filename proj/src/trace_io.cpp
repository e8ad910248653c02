#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "relaxproj/commands.hpp"
#include "relaxproj/error.hpp"

namespace relaxproj {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows, std::size_t set_count,
                     bool with_reference) {
  out << "n";
  for (std::size_t i = 1; i <= set_count; ++i) out << ",d_" << i;
  out << ",max_dist,step_norm,s,nu_min_active,cum_nu,cum_mu";
  if (with_reference) out << ",dist_to_ref";
  out << '\n';
  for (const auto& row : rows) {
    out << row.n;
    for (double d : row.dists) out << ',' << fmt17(d);
    out << ',' << fmt17(row.max_dist) << ',' << fmt17(row.step_norm) << ',' << fmt17(row.s) << ','
        << fmt17(row.nu_min_active) << ',' << fmt17(row.cum_nu) << ',' << fmt17(row.cum_mu);
    if (with_reference) out << ',' << fmt17(row.dist_to_ref.value_or(0.0));
    out << '\n';
  }
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("trace csv: missing header");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  std::size_t set_count = 0;
  while (set_count + 1 < header.size() && header[set_count + 1] == "d_" + std::to_string(set_count + 1)) ++set_count;
  const bool with_reference = !header.empty() && header.back() == "dist_to_ref";
  const std::size_t expected = 1 + set_count + 6 + (with_reference ? 1 : 0);
  if (header.size() != expected || header.front() != "n") throw InputError("trace csv: unexpected header");

  std::vector<TraceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    if (cells.size() != expected) throw InputError("trace csv: row has " + std::to_string(cells.size()) + " cells");
    TraceRow row;
    row.n = static_cast<Iteration>(cells[0]);
    row.dists.assign(cells.begin() + 1, cells.begin() + 1 + static_cast<std::ptrdiff_t>(set_count));
    std::size_t k = 1 + set_count;
    row.max_dist = cells[k++];
    row.step_norm = cells[k++];
    row.s = cells[k++];
    row.nu_min_active = cells[k++];
    row.cum_nu = cells[k++];
    row.cum_mu = cells[k++];
    if (with_reference) row.dist_to_ref = cells[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace relaxproj

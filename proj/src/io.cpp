#include "hardyhilbert/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "hardyhilbert/errors.hpp"

namespace hh::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("csv line " + std::to_string(line) + ": bad index '" + s + "'");
  return v;
}

/// Reads rows under the expected header prefix; extra trailing columns are ignored.
std::map<std::size_t, std::vector<double>> read_rows(std::istream& in,
                                                     const std::vector<std::string>& header) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!split(line).empty()) break;
  }
  const std::vector<std::string> got = split(line);
  if (got.size() < header.size() || !std::equal(header.begin(), header.end(), got.begin()))
    throw DomainError("csv: expected header starting with '" + header.front() + "," + header[1] + "'");

  std::map<std::size_t, std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> cells = split(line);
    if (cells.empty()) continue;
    if (cells.size() < header.size()) throw DomainError("csv line " + std::to_string(lineno) + ": too few columns");
    const std::size_t idx = parse_index(cells[0], lineno);
    std::vector<double> vals;
    for (std::size_t k = 1; k < header.size(); ++k) vals.push_back(parse_double(cells[k], lineno));
    if (!rows.emplace(idx, std::move(vals)).second)
      throw DomainError("csv line " + std::to_string(lineno) + ": duplicate index");
  }
  if (rows.empty()) throw DomainError("csv: no data rows");
  return rows;
}

const char* choice_name(DecayChoice c) { return c == DecayChoice::Power ? "power" : "harmonic"; }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

XSequence read_sequence_csv(std::istream& in) {
  const auto rows = read_rows(in, {"index", "value"});
  const std::size_t n = rows.rbegin()->first + 1;
  if (rows.size() != n) throw DomainError("sequence csv: indices must run 0..N-1 without gaps");
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (const auto& [k, vals] : rows) v[static_cast<Eigen::Index>(k)] = vals[0];
  return XSequence(v);
}

void write_sequence_csv(std::ostream& out, const XSequence& c) {
  out << "index,value\n";
  for (std::size_t k = 0; k < c.size(); ++k) out << k << ',' << format_double(c[k]) << '\n';
}

void write_trace_csv(std::ostream& out, const SlowDecayTrace& t) {
  out << "index,value,choice\n";
  if (t.values.empty()) return;
  out << 0 << ',' << format_double(t.values.front()) << ',' << choice_name(t.choice.front()) << '\n';
  for (std::size_t i = 0; i < t.values.size(); ++i)
    out << i + 1 << ',' << format_double(t.values[i]) << ',' << choice_name(t.choice[i]) << '\n';
}

AnalyticPoly read_polynomial_csv(std::istream& in) {
  const auto rows = read_rows(in, {"index", "re", "im"});
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rows.rbegin()->first + 1));
  for (const auto& [k, vals] : rows) a[static_cast<Eigen::Index>(k)] = Complex(vals[0], vals[1]);
  return AnalyticPoly(a);
}

void write_polynomial_csv(std::ostream& out, const AnalyticPoly& f) {
  out << "index,re,im\n";
  for (std::size_t k = 0; k <= f.degree(); ++k)
    out << k << ',' << format_double(f[k].real()) << ',' << format_double(f[k].imag()) << '\n';
}

nlohmann::json coeffs_json(const AnalyticPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k <= f.degree(); ++k) arr.push_back({f[k].real(), f[k].imag()});
  return arr;
}

nlohmann::json to_json(const DecayCertificate& c) {
  return {{"holds", c.holds}, {"worst_margin", c.worst_margin}, {"worst_index", c.worst_index}};
}

nlohmann::json to_json(const InfinitudeReport& r) {
  nlohmann::json decades = nlohmann::json::array();
  for (const DecadeRecord& d : r.decades)
    decades.push_back({{"limit", d.limit},
                       {"power_count", d.power_count},
                       {"has_power", d.has_power},
                       {"running_max", d.running_max}});
  return {{"s", r.s},
          {"power_count", r.power_count},
          {"largest_power_index", r.largest_power_index},
          {"growing", r.growing},
          {"claim_applies", r.claim_applies},
          {"decades", decades}};
}

nlohmann::json to_json(const RieszFactors& f) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Complex& z : f.roots) roots.push_back({z.real(), z.imag()});
  return {{"residual_max", f.residual_max},
          {"norm_defect", f.norm_defect},
          {"blaschke_degree", f.blaschke_degree},
          {"grid_size", f.grid_size},
          {"g_degree", f.g.degree()},
          {"h_degree", f.h.degree()},
          {"g_norm2", f.g.coeffs().norm()},
          {"h_norm2", f.h.coeffs().norm()},
          {"roots", roots},
          {"g", coeffs_json(f.g)},
          {"h", coeffs_json(f.h)}};
}

nlohmann::json to_json(const CarlesonReport& r) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const ArcRecord& a : r.arcs)
    arcs.push_back({{"center", a.arc.center},
                    {"length", a.arc.length},
                    {"box_integral", a.box_integral},
                    {"ratio", a.ratio}});
  return {{"arcs", arcs},
          {"sup_ratio", r.sup_ratio},
          {"k_constant", r.k_constant},
          {"bound_2k", r.bound_2k},
          {"pass", r.pass},
          {"xnorm_sq", r.xnorm_sq},
          {"eta_estimate", r.eta_estimate},
          {"radial_points", r.radial_points},
          {"angular_points", r.angular_points}};
}

nlohmann::json to_json(const BoundednessVerdict& v) {
  return {{"depths", v.depths},
          {"depth_max", v.depth_max},
          {"bounded", v.bounded},
          {"first_violation", v.first_violation}};
}

nlohmann::json to_json(const KConstantEstimate& k) {
  return {{"grid_max", k.grid_max},
          {"argmax", k.argmax},
          {"analytic_limit", k.analytic_limit},
          {"evaluations", k.evaluations}};
}

nlohmann::json to_json(const EquivalenceReport& r) {
  return {{"N", r.n},
          {"matrix_norm", r.matrix_norm},
          {"hardy_ratio", r.hardy_ratio},
          {"gap", r.gap},
          {"witness_degree", r.witness_degree},
          {"xnorm", r.xnorm},
          {"classic", r.classic},
          {"grid_size", r.grid_size},
          {"iterations", r.iterations},
          {"residual", r.residual}};
}

nlohmann::json to_json(const BestConstantScan& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScanRow& r : s.rows)
    rows.push_back({{"N", r.n},
                    {"norm", r.norm},
                    {"residual", r.residual},
                    {"iterations", r.iterations},
                    {"converged", r.converged}});
  nlohmann::json out = {{"rows", rows},
                        {"nondecreasing", s.nondecreasing},
                        {"strictly_increasing", s.strictly_increasing},
                        {"classic", s.classic}};
  if (s.classic) out["below_pi_external_ceiling"] = s.below_pi;
  return out;
}

nlohmann::json to_json(const DegreeBoundCheck& d) {
  nlohmann::json out = {{"skipped", d.skipped}};
  if (d.skipped) {
    out["reason"] = d.reason;
    return out;
  }
  out["holds"] = d.holds;
  out["hardy_sum"] = d.hardy_sum;
  out["norm1"] = d.norm1;
  out["matrix_norm"] = d.matrix_norm;
  out["bound"] = d.bound;
  out["slack"] = d.slack;
  return out;
}

}  // namespace hh::io

#include "floq/csv.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace floq {

namespace {

const double nan_d = std::numeric_limits<double>::quiet_NaN();

/// Rows whose EE failed carry no Renyi entries; serialize those as NaN
/// so the column layout stays rectangular.
double renyi_field(const SweepRow& row, size_t idx, double RenyiEntry::*f) {
  if (idx >= row.renyi.size()) return nan_d;
  return row.renyi[idx].*f;
}

nlohmann::ordered_json row_json(const SweepRow& r,
                                const std::vector<double>& lambdas) {
  nlohmann::ordered_json j;
  j["param"] = r.param;
  j["value_G"] = r.value_G;
  j["critical_flag"] = r.critical_flag;
  j["S_A"] = r.s_a;
  j["S_A0"] = r.s_a0;
  j["S_QG"] = r.s_qg;
  j["status"] = r.status;
  if (!lambdas.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t i = 0; i < lambdas.size(); ++i) {
      nlohmann::ordered_json e;
      e["lambda"] = lambdas[i];
      e["S_A"] = renyi_field(r, i, &RenyiEntry::s_a);
      e["S_A0"] = renyi_field(r, i, &RenyiEntry::s_a0);
      e["S_QG"] = renyi_field(r, i, &RenyiEntry::s_qg);
      arr.push_back(std::move(e));
    }
    j["renyi"] = std::move(arr);
  }
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(const SweepResult& r, std::ostream& os) {
  os << "param,value_G,critical_flag,S_A,S_A0,S_QG,status";
  for (double lambda : r.cfg.renyi_lambdas) {
    const std::string tag = format_double(lambda);
    os << ",S_A_renyi_" << tag << ",S_A0_renyi_" << tag << ",S_QG_renyi_"
       << tag;
  }
  os << "\n";
  for (const SweepRow& row : r.rows) {
    os << format_double(row.param) << "," << format_double(row.value_G) << ","
       << (row.critical_flag ? "1" : "0") << "," << format_double(row.s_a)
       << "," << format_double(row.s_a0) << "," << format_double(row.s_qg)
       << "," << row.status;
    for (size_t i = 0; i < r.cfg.renyi_lambdas.size(); ++i) {
      os << "," << format_double(renyi_field(row, i, &RenyiEntry::s_a)) << ","
         << format_double(renyi_field(row, i, &RenyiEntry::s_a0)) << ","
         << format_double(renyi_field(row, i, &RenyiEntry::s_qg));
    }
    os << "\n";
  }
}

void write_scaling_csv(const ScalingResult& r, std::ostream& os) {
  os << "L_A,S_A,S_A0,S_QG\n";
  for (const ScalingRow& row : r.rows) {
    os << row.L_A << "," << format_double(row.s_a) << ","
       << format_double(row.s_a0) << "," << format_double(row.s_qg) << "\n";
  }
}

void write_sweep_json(const SweepResult& r, std::ostream& os) {
  nlohmann::ordered_json j;
  j["swept_param"] = r.cfg.swept_param;
  j["L"] = r.cfg.L;
  j["N"] = r.cfg.N;
  j["L_A"] = r.cfg.L_A;
  j["grid_size"] = r.cfg.grid_size;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : r.rows) {
    rows.push_back(row_json(row, r.cfg.renyi_lambdas));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

void write_scaling_json(const ScalingResult& r, std::ostream& os) {
  nlohmann::ordered_json j;
  j["L"] = r.cfg.L;
  j["N"] = r.cfg.N;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ScalingRow& row : r.rows) {
    nlohmann::ordered_json e;
    e["L_A"] = row.L_A;
    e["S_A"] = row.s_a;
    e["S_A0"] = row.s_a0;
    e["S_QG"] = row.s_qg;
    e["status"] = row.status;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

std::string sweep_csv_string(const SweepResult& r) {
  std::ostringstream os;
  write_sweep_csv(r, os);
  return os.str();
}

std::string scaling_csv_string(const ScalingResult& r) {
  std::ostringstream os;
  write_scaling_csv(r, os);
  return os.str();
}

}  // namespace floq

#include "floq/sweep.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "linefit.hpp"

namespace floq {

namespace {

constexpr double pi = std::numbers::pi;
const double nan_d = std::numeric_limits<double>::quiet_NaN();

std::string error_tag(const FloqError& e) {
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate_error";
  if (dynamic_cast<const ClassMismatchError*>(&e)) return "class_mismatch_error";
  if (dynamic_cast<const CriticalPointError*>(&e)) return "critical_point_error";
  if (dynamic_cast<const GridError*>(&e)) return "grid_error";
  if (dynamic_cast<const SizeError*>(&e)) return "size_error";
  if (dynamic_cast<const RangeError*>(&e)) return "range_error";
  if (dynamic_cast<const LambdaError*>(&e)) return "lambda_error";
  if (dynamic_cast<const WindowError*>(&e)) return "window_error";
  if (dynamic_cast<const SpacingError*>(&e)) return "spacing_error";
  if (dynamic_cast<const InsufficientDataError*>(&e)) return "insufficient_data_error";
  if (dynamic_cast<const UnknownModelError*>(&e)) return "unknown_model_error";
  if (dynamic_cast<const UsageError*>(&e)) return "usage_error";
  return "error";
}

bool row_ok(const std::string& status) {
  return status == "ok" || status == "ok_offset_grid";
}

FillingSpec build_filling(const ModelSpec& m, FillingOrder order, int L, int N,
                          double k_offset) {
  return order == FillingOrder::consecutive
             ? make_filling(L, N, Band::minus, k_offset)
             : make_filling_energy_ordered(m, L, N, Band::minus, k_offset);
}

/// EE at one parameter point; retries once with the pi/L grid offset if
/// the default grid hits a band touching.
EntanglementResult point_gee(const ModelSpec& m, FillingOrder order, int L,
                             int N, int L_A,
                             const std::vector<double>& lambdas,
                             bool offset_grid, bool& offset_used) {
  GeeOptions opts;
  opts.renyi_lambdas = lambdas;
  const double off0 = offset_grid ? pi / L : 0.0;
  try {
    return gee(m, build_filling(m, order, L, N, off0), L_A, opts);
  } catch (const GridError&) {
    if (offset_grid) throw;  // already offset, nothing left to try
    offset_used = true;
    return gee(m, build_filling(m, order, L, N, pi / L), L_A, opts);
  }
}

std::string join_tags(const std::vector<std::string>& tags) {
  std::string out = tags.front();
  for (size_t i = 1; i < tags.size(); ++i) out += "+" + tags[i];
  return out;
}

void sweep_point(const SweepConfig& cfg, double value, SweepRow& row) {
  row.param = value;
  FamilyParams p = cfg.base;
  p.set(cfg.swept_param, value);
  const ModelSpec m = p.build();

  std::vector<std::string> errs;
  try {
    const IntegratedMetric im = integrated_metric(m, cfg.grid_size);
    row.value_G = im.value;
    row.critical_flag = im.critical_flag;
  } catch (const FloqError& e) {
    row.value_G = nan_d;
    try {
      row.critical_flag = phase_boundary_distance(m) < 1e-9;
    } catch (const FloqError&) {
      row.critical_flag = false;
    }
    errs.push_back(error_tag(e));
  }

  bool offset_used = false;
  try {
    const EntanglementResult r =
        point_gee(m, cfg.order, cfg.L, cfg.N, cfg.L_A, cfg.renyi_lambdas,
                  cfg.offset_grid, offset_used);
    row.s_a = r.s_a;
    row.s_a0 = r.s_a0;
    row.s_qg = r.s_qg;
    row.renyi = r.renyi;
  } catch (const FloqError& e) {
    row.s_a = nan_d;
    row.s_a0 = nan_d;
    row.s_qg = nan_d;
    errs.push_back(error_tag(e));
  }

  row.status = errs.empty() ? (offset_used ? "ok_offset_grid" : "ok")
                            : join_tags(errs);
}

/// Runs jobs 0..n-1 with a strided worker pool; job i writes only slot i,
/// so the assembled output is identical for every worker count.
template <typename Job>
void run_jobs(size_t n, const Job& job) {
  const int workers =
      std::min<int>(sweep_worker_count(), static_cast<int>(n));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = static_cast<size_t>(w); i < n;
           i += static_cast<size_t>(workers)) {
        job(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

double median_of(std::vector<double> v) {
  const size_t n = v.size();
  const size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid), v.end());
  if (n % 2 == 1) return v[mid];
  const double hi = v[mid];
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid) - 1,
                   v.begin() + static_cast<long>(mid));
  return 0.5 * (v[mid - 1] + hi);
}

}  // namespace

ModelSpec FamilyParams::build() const {
  switch (family) {
    case ModelFamily::spin_chain:
      return spin_chain(sc);
    case ModelFamily::ordkr:
      return ordkr(ok);
    default:
      return pqkc(pq);
  }
}

void FamilyParams::set(const std::string& param, double value) {
  switch (family) {
    case ModelFamily::spin_chain:
      if (param == "mu") {
        sc.delta2 = value * sc.delta1 + sc.omega;
        return;
      }
      if (param == "omega") {
        sc.omega = value;
        return;
      }
      if (param == "delta2") {
        sc.delta2 = value;
        return;
      }
      break;
    case ModelFamily::ordkr:
      if (param == "k1") {
        ok.k1 = value;
        return;
      }
      if (param == "k2") {
        ok.k2 = value;
        return;
      }
      break;
    case ModelFamily::pqkc:
      if (param == "delta") {
        pq.delta = value;
        return;
      }
      if (param == "mu_chem") {
        pq.mu_chem = value;
        return;
      }
      if (param == "j") {
        pq.j = value;
        return;
      }
      break;
  }
  throw UnknownModelError("parameter '" + param +
                          "' does not belong to the selected model");
}

double FamilyParams::get(const std::string& param) const {
  switch (family) {
    case ModelFamily::spin_chain:
      if (param == "mu") return sc.mu();
      if (param == "omega") return sc.omega;
      if (param == "delta2") return sc.delta2;
      break;
    case ModelFamily::ordkr:
      if (param == "k1") return ok.k1;
      if (param == "k2") return ok.k2;
      break;
    case ModelFamily::pqkc:
      if (param == "delta") return pq.delta;
      if (param == "mu_chem") return pq.mu_chem;
      if (param == "j") return pq.j;
      break;
  }
  throw UnknownModelError("parameter '" + param +
                          "' does not belong to the selected model");
}

SweepResult run_sweep(const SweepConfig& cfg) {
  const size_t n = cfg.values.size();
  if (n == 0) throw RangeError("run_sweep: empty value list");
  if (n > 1) {
    const bool increasing = cfg.values[1] > cfg.values[0];
    for (size_t i = 1; i < n; ++i) {
      const bool step_up = cfg.values[i] > cfg.values[i - 1];
      if (cfg.values[i] == cfg.values[i - 1] || step_up != increasing) {
        throw RangeError("run_sweep: values must be strictly monotone");
      }
    }
  }
  {
    // Validate the swept-parameter name once, not per worker.
    FamilyParams probe = cfg.base;
    probe.set(cfg.swept_param, cfg.values.front());
  }

  SweepResult out;
  out.cfg = cfg;
  out.rows.resize(n);
  run_jobs(n, [&](size_t i) { sweep_point(cfg, cfg.values[i], out.rows[i]); });
  return out;
}

ScalingResult run_scaling(const ScalingConfig& cfg) {
  const size_t n = cfg.L_A_values.size();
  if (n == 0) throw SizeError("run_scaling: empty L_A list");
  for (size_t i = 0; i < n; ++i) {
    const int la = cfg.L_A_values[i];
    if (la < 1 || la > cfg.L) {
      throw SizeError("run_scaling: L_A values must lie in [1, L]");
    }
    if (i > 0 && la <= cfg.L_A_values[i - 1]) {
      throw SizeError("run_scaling: L_A values must be strictly increasing");
    }
  }
  const ModelSpec m = cfg.base.build();

  ScalingResult out;
  out.cfg = cfg;
  out.rows.resize(n);
  run_jobs(n, [&](size_t i) {
    ScalingRow& row = out.rows[i];
    row.L_A = cfg.L_A_values[i];
    bool offset_used = false;
    try {
      const EntanglementResult r =
          point_gee(m, cfg.order, cfg.L, cfg.N, row.L_A, {}, cfg.offset_grid,
                    offset_used);
      row.s_a = r.s_a;
      row.s_a0 = r.s_a0;
      row.s_qg = r.s_qg;
      row.status = offset_used ? "ok_offset_grid" : "ok";
    } catch (const FloqError& e) {
      row.s_a = nan_d;
      row.s_a0 = nan_d;
      row.s_qg = nan_d;
      row.status = error_tag(e);
    }
  });
  return out;
}

FitReport fit_area_law(const ScalingResult& scaling, double window_fraction) {
  if (!(window_fraction > 0.0) || !(window_fraction <= 0.5)) {
    throw WindowError("fit_area_law: window_fraction must lie in (0, 0.5]");
  }
  const double lo = window_fraction * scaling.cfg.L;
  const double hi = 2.0 * window_fraction * scaling.cfg.L;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const ScalingRow& r : scaling.rows) {
    if (!row_ok(r.status) || !std::isfinite(r.s_qg)) continue;
    if (r.L_A < lo || r.L_A > hi) continue;
    xs.push_back(static_cast<double>(r.L_A));
    ys.push_back(r.s_qg);
  }
  if (xs.size() < 5) {
    throw InsufficientDataError(
        "fit_area_law: need at least 5 rows inside the plateau window");
  }
  FitReport rep;
  rep.kind = FitKind::area_law;
  const detail::LineFit f = detail::least_squares(xs, ys);
  rep.slope = f.slope;
  rep.intercept = f.intercept;
  rep.r_squared = f.r_squared;
  const auto [mn, mx] = std::minmax_element(ys.begin(), ys.end());
  double sum = 0.0;
  for (double y : ys) sum += y;
  rep.plateau = sum / static_cast<double>(ys.size());
  rep.plateau_spread = *mx - *mn;
  return rep;
}

FitReport fit_log_law(const ScalingResult& scaling) {
  const int L = scaling.cfg.L;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const ScalingRow& r : scaling.rows) {
    if (!row_ok(r.status) || !std::isfinite(r.s_qg)) continue;
    if (10 * r.L_A < L || 10 * r.L_A > 9 * L) continue;
    xs.push_back(std::log(std::sin(pi * r.L_A / L)));
    ys.push_back(r.s_qg);
  }
  if (xs.size() < 8) {
    throw InsufficientDataError(
        "fit_log_law: need at least 8 rows with L_A in [L/10, 9L/10]");
  }
  FitReport rep;
  rep.kind = FitKind::log_law;
  const detail::LineFit f = detail::least_squares(xs, ys);
  rep.slope = f.slope;
  rep.intercept = f.intercept;
  rep.r_squared = f.r_squared;
  return rep;
}

namespace {

struct Peak {
  size_t idx;
  double strength;
};

std::vector<Peak> threshold_peaks(const std::vector<double>& xs,
                                  const std::vector<double>& ys,
                                  double factor) {
  const size_t n = xs.size();
  if (ys.size() != n) {
    throw SizeError("second_difference_peaks: xs and ys differ in length");
  }
  if (n < 7) {
    throw InsufficientDataError(
        "second_difference_peaks: need at least 7 points");
  }
  const double dx = xs[1] - xs[0];
  if (dx == 0.0) throw SpacingError("second_difference_peaks: zero spacing");
  for (size_t i = 1; i < n; ++i) {
    if (std::abs(xs[i] - xs[i - 1] - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
      throw SpacingError("second_difference_peaks: grid is not uniform");
    }
  }
  const double dx2 = dx * dx;
  std::vector<double> d(n, nan_d);
  std::vector<double> finite;
  for (size_t i = 1; i + 1 < n; ++i) {
    const double v = ys[i - 1] - 2.0 * ys[i] + ys[i + 1];
    if (std::isfinite(v)) {
      d[i] = std::abs(v) / dx2;
      finite.push_back(d[i]);
    }
  }
  if (finite.empty()) return {};
  const double threshold = factor * median_of(std::move(finite));

  const double neg_inf = -std::numeric_limits<double>::infinity();
  const auto neighbor = [&](size_t i, int step) {
    const size_t j = i + static_cast<size_t>(step);
    if (j < 1 || j + 1 >= n || !std::isfinite(d[j])) return neg_inf;
    return d[j];
  };
  std::vector<Peak> peaks;
  for (size_t i = 1; i + 1 < n; ++i) {
    if (!std::isfinite(d[i]) || !(d[i] > threshold)) continue;
    if (d[i] >= neighbor(i, -1) && d[i] > neighbor(i, +1)) {
      peaks.push_back(Peak{i, d[i]});
    }
  }
  return peaks;
}

}  // namespace

std::vector<double> second_difference_peaks(const std::vector<double>& xs,
                                            const std::vector<double>& ys,
                                            double factor) {
  std::vector<double> out;
  for (const Peak& p : threshold_peaks(xs, ys, factor)) {
    out.push_back(xs[p.idx]);
  }
  return out;
}

std::vector<double> detect_cusps(const SweepResult& sweep,
                                 int suppression_radius) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(sweep.rows.size());
  ys.reserve(sweep.rows.size());
  for (const SweepRow& r : sweep.rows) {
    xs.push_back(r.param);
    ys.push_back(r.s_qg);
  }
  const std::vector<Peak> peaks = threshold_peaks(xs, ys, 10.0);
  // A sharp cusp leaves weaker side lobes of |d2 s_qg| a few samples
  // out; keep only the strongest peak of each such cluster so one
  // transition reports one position.  Ties break toward the left peak.
  std::vector<double> out;
  for (size_t a = 0; a < peaks.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < peaks.size() && !dominated; ++b) {
      if (b == a) continue;
      const size_t lo = std::min(peaks[a].idx, peaks[b].idx);
      const size_t hi = std::max(peaks[a].idx, peaks[b].idx);
      if (hi - lo > static_cast<size_t>(suppression_radius)) continue;
      if (peaks[b].strength > peaks[a].strength ||
          (peaks[b].strength == peaks[a].strength && b < a)) {
        dominated = true;
      }
    }
    if (!dominated) out.push_back(xs[peaks[a].idx]);
  }
  return out;
}

int sweep_worker_count() {
  const char* env = std::getenv("FLOQUET_GEOM_THREADS");
  if (env != nullptr && *env != '\0') {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v < 1 || v > 1024) {
      throw UsageError("FLOQUET_GEOM_THREADS must be a positive integer");
    }
    return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace floq

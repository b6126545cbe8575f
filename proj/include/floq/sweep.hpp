#pragma once

/// Parameter sweeps (G and entanglement columns vs one control
/// parameter), subsystem-size scaling runs, and the fits/detectors that
/// summarize them: area-law plateau, ln[sin(pi*L_A/L)] log law, and
/// second-difference cusp localization.
///
/// Points are independent jobs; a worker pool (capped by the
/// FLOQUET_GEOM_THREADS environment variable) fills a preallocated row
/// vector by index, so output is byte-identical for any worker count.

#include <string>
#include <vector>

#include "floq/entanglement.hpp"
#include "floq/qmt.hpp"

namespace floq {

enum class ModelFamily { spin_chain, ordkr, pqkc };

/// Parameter record for one family plus name-based access, so a sweep
/// can overwrite its swept field generically.
struct FamilyParams {
  ModelFamily family = ModelFamily::spin_chain;
  SpinChainParams sc{};
  OrdkrParams ok{};
  PqkcParams pq{};

  ModelSpec build() const;
  /// Valid names: spin_chain mu|omega|delta2, ordkr k1|k2,
  /// pqkc delta|mu_chem|j. UnknownModelError on a mismatch.
  void set(const std::string& param, double value);
  double get(const std::string& param) const;
};

struct SweepConfig {
  FamilyParams base;
  std::string swept_param;
  std::vector<double> values;  // strictly monotone, non-empty
  int L = 200;
  int N = 200;
  int L_A = 100;
  int grid_size = 1 << 14;
  std::vector<double> renyi_lambdas;
  bool offset_grid = false;
  FillingOrder order = FillingOrder::consecutive;
};

struct SweepRow {
  double param = 0.0;
  double value_G = 0.0;
  bool critical_flag = false;
  double s_a = 0.0;
  double s_a0 = 0.0;
  double s_qg = 0.0;
  /// "ok", "ok_offset_grid" (EE succeeded after the automatic pi/L grid
  /// offset), or the name of the error that killed this point's
  /// entanglement columns (which are then NaN).
  std::string status = "ok";
  std::vector<RenyiEntry> renyi;
};

struct SweepResult {
  SweepConfig cfg;
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepConfig& cfg);

struct ScalingConfig {
  FamilyParams base;
  int L = 400;
  int N = 400;
  std::vector<int> L_A_values;  // strictly increasing, within [1, L]
  bool offset_grid = false;
  FillingOrder order = FillingOrder::consecutive;
};

struct ScalingRow {
  int L_A = 0;
  double s_a = 0.0;
  double s_a0 = 0.0;
  double s_qg = 0.0;
  std::string status = "ok";
};

struct ScalingResult {
  ScalingConfig cfg;
  std::vector<ScalingRow> rows;
};

ScalingResult run_scaling(const ScalingConfig& cfg);

enum class FitKind { area_law, log_law };

struct FitReport {
  FitKind kind = FitKind::area_law;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double plateau = 0.0;
  double plateau_spread = 0.0;
};

/// Plateau statistics of s_qg over the central window
/// [window_fraction*L, 2*window_fraction*L]; needs >= 5 rows inside
/// (InsufficientDataError otherwise).
FitReport fit_area_law(const ScalingResult& scaling,
                       double window_fraction = 0.25);

/// Least squares of s_qg against ln[sin(pi*L_A/L)] over rows with
/// L_A in [L/10, 9L/10]; needs >= 8 such rows.
FitReport fit_log_law(const ScalingResult& scaling);

/// Local maxima of |y[i-1] - 2 y[i] + y[i+1]| / dx^2 exceeding
/// 10x the sweep median of that quantity; returns the x positions.
/// NaN rows never participate. Throws SpacingError if xs is not
/// uniform, InsufficientDataError below 7 points.
std::vector<double> second_difference_peaks(const std::vector<double>& xs,
                                            const std::vector<double>& ys,
                                            double factor = 10.0);

/// second_difference_peaks applied to the sweep's s_qg column, with one
/// extra cleanup pass: a peak is dropped when a strictly stronger one
/// sits within suppression_radius samples, so the side lobes that a
/// sharp cusp leaves in the discrete second difference collapse into a
/// single reported position per transition.
std::vector<double> detect_cusps(const SweepResult& sweep,
                                 int suppression_radius = 5);

/// Worker cap: FLOQUET_GEOM_THREADS if set (must parse as a positive
/// integer), else hardware concurrency, at least 1.
int sweep_worker_count();

}  // namespace floq

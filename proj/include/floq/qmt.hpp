#pragma once

/// Quantum metric g_kk of the occupied band, its Brillouin-zone average
/// G, the winding angle/number of chiral models, and the critical-
/// exponent fit of G near the spin-chain transition.

#include "floq/models.hpp"

namespace floq {

struct MetricSample {
  double k = 0.0;
  double g = 0.0;
};

struct IntegratedMetric {
  double value = 0.0;
  int grid_size = 0;
  /// Set when the parameters sit on a phase boundary; the value is then
  /// a grid-regularized stand-in for a divergent integral.
  bool critical_flag = false;
};

struct WindingResult {
  int w = 0;
  double raw = 0.0;  // accumulated angle / 2*pi before rounding
};

struct CriticalFit {
  double exponent = 0.0;  // nu in G ~ prefactor * |mu -+ 1|^(-nu)
  double prefactor = 0.0;
  double r_squared = 0.0;
};

enum class CriticalSide { above, below };

/// Metric at one momentum. Chiral models use the reduced closed form
/// (h_a dh_b - h_b dh_a)^2 / (4 E^4); non-chiral inputs use the generic
/// two-band formula, falling back to |h x dh|^2 / (4 E^4) when E^2-hz^2
/// is too small for the generic denominator. Result >= 0 (tiny negative
/// roundoff is clamped). Throws DegenerateError at band touchings.
double metric_at(const ModelSpec& m, double k);

/// Finite-difference check of the metric through the fidelity distance
/// between the states at k -+ dk/2:
///   (1 - |<psi(k-dk/2)|psi(k+dk/2)>|^2) / dk^2 = g(k) + O(dk^2).
/// dk must lie in [1e-6, 1e-2].
double metric_fd_check(const ModelSpec& m, double k, double dk);

/// Midpoint-rule BZ average of g_kk on k_j = -pi + 2pi(j+1/2)/n,
/// j = 0..n-1: G = (1/n) sum_j g(k_j). grid_size >= 16. The half-offset
/// grid avoids k in {0, +-pi} where the built-in models' touchings sit.
IntegratedMetric integrated_metric(const ModelSpec& m, int grid_size);

/// d/dk of the winding angle: (h_a dh_b - h_b dh_a)/E^2 with the (a,b)
/// plane set by the chiral class: chiral_z -> (x,y), chiral_y -> (z,x),
/// chiral_x -> (y,z). Throws ClassMismatchError for non-chiral models.
double winding_angle_derivative(const ModelSpec& m, double k);

/// Winding number of (h_a, h_b) around the origin, accumulated by
/// principal-valued atan2 increments on the midpoint grid. Requires a
/// gapped model (CriticalPointError otherwise). |raw - w| <= 1e-6.
///
/// The sign convention follows atan2(h_b, h_a) with the class pairs
/// above; tests assert only |w| and differences across transitions.
WindingResult winding_number(const ModelSpec& m, int grid_size);

/// |metric_at - (winding_angle_derivative)^2 / 4| at one k; the two
/// sides come from separately coded expressions. Contract: <= 1e-10.
double metric_winding_identity_check(const ModelSpec& m, double k);

/// Least-squares fit of ln G vs ln|mu -+ 1| for the spin chain on a
/// log-spaced window of distances [win_lo, win_hi] from the mu = +1
/// transition (side above: mu = 1+x, below: mu = 1-x). The window must
/// lie inside [1e-4, 0.2] and carry at least 8 points, else WindowError.
CriticalFit critical_exponent_fit(CriticalSide side, double win_lo,
                                  double win_hi, int n_points = 8,
                                  int grid_size = 1 << 16);

}  // namespace floq

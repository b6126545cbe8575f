#pragma once

/// Algebra of 1D two-band Bloch Hamiltonians
///
///   H(k) = h0 * sigma_0 + hx * sigma_x + hy * sigma_y + hz * sigma_z
///
/// dispersions, normalized band eigenstates with a fixed gauge, and
/// intra-band overlaps <psi_s(k)|psi_s(k')>, including the reduced
/// closed forms available when one in-plane component vanishes
/// (chiral symmetry).

#include <complex>

#include "floq/errors.hpp"

namespace floq {

using complex = std::complex<double>;

/// Absolute band-gap threshold below which a point is treated as a
/// band touching.
inline constexpr double eps_deg = 1e-10;

/// Relative threshold for switching to the alternative eigenvector
/// branch when E + s*hz becomes small against E.
inline constexpr double eps_branch = 1e-8;

struct BlochVector {
  double h0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  double hz = 0.0;
};

/// Per-radian k-derivatives of a BlochVector.
struct BlochDerivative {
  double dh0 = 0.0;
  double dhx = 0.0;
  double dhy = 0.0;
  double dhz = 0.0;
};

enum class Band { plus, minus };

inline constexpr double band_sign(Band s) {
  return s == Band::plus ? 1.0 : -1.0;
}

/// Normalized two-spinor (|c_up|^2 + |c_down|^2 = 1).
struct Eigenstate {
  complex c_up;
  complex c_down;
};

/// Which component of (hx,hy,hz) is pinned to zero by the symmetry.
/// none: no constraint. chiral_z: hz=0. chiral_y: hy=0. chiral_x: hx=0.
enum class ChiralClass { none, chiral_z, chiral_y, chiral_x };

/// |h| = sqrt(hx^2+hy^2+hz^2), the half-gap.
double field_norm(const BlochVector& h);

/// Band energy h0 + s*|h|. Not reduced modulo 2*pi.
double dispersion(const BlochVector& h, Band s);

/// Normalized eigenvector of hx*sx+hy*sy+hz*sz with eigenvalue s*|h|.
/// Gauge: first component real and >= 0 wherever E + s*hz is not small
/// (the branch switch keeps the construction away from catastrophic
/// cancellation). Throws DegenerateError when |h| <= eps_deg.
Eigenstate eigenstate(const BlochVector& h, Band s);

/// <psi_s(h)|psi_s(h')> via the eigenstate() spinors.
complex overlap_generic(const BlochVector& h, const BlochVector& hp, Band s);

/// Same overlap through the reduced closed form of the given chiral
/// class. Throws ClassMismatchError if either input violates the class
/// constraint by more than 1e-12.
complex overlap_chiral(const BlochVector& h, const BlochVector& hp, Band s,
                       ChiralClass cls);

/// Largest violation |h_a| of the class constraint across the two
/// inputs (0 for ChiralClass::none).
double chiral_violation(const BlochVector& h, ChiralClass cls);

}  // namespace floq

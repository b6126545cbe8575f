#include "floq/bloch.hpp"

#include <cmath>

namespace floq {

double field_norm(const BlochVector& h) {
  return std::sqrt(h.hx * h.hx + h.hy * h.hy + h.hz * h.hz);
}

double dispersion(const BlochVector& h, Band s) {
  return h.h0 + band_sign(s) * field_norm(h);
}

namespace {

/// e + z without cancellation: for z < 0 the direct sum loses digits
/// once |z| approaches e, so route through (e^2 - z^2) = hx^2 + hy^2,
/// which is a fresh sum of squares.
double stable_norm_plus(double e, double z, double hx, double hy) {
  if (z >= 0.0) return e + z;
  return (hx * hx + hy * hy) / (e - z);
}

}  // namespace

Eigenstate eigenstate(const BlochVector& h, Band s) {
  const double e = field_norm(h);
  if (!(e > eps_deg)) {
    throw DegenerateError("eigenstate: band touching (|h| <= 1e-10)");
  }
  const double sg = band_sign(s);
  // Squared norms of the two projector columns are proportional to
  // d_plus and d_minus; build the spinor from whichever is healthy.
  const double d_plus = stable_norm_plus(e, sg * h.hz, h.hx, h.hy);
  if (d_plus >= eps_branch * e) {
    const double norm = std::sqrt(2.0 * e * d_plus);
    return Eigenstate{complex(d_plus / norm, 0.0),
                      complex(sg * h.hx / norm, sg * h.hy / norm)};
  }
  const double d_minus = stable_norm_plus(e, -sg * h.hz, h.hx, h.hy);
  const double norm = std::sqrt(2.0 * e * d_minus);
  return Eigenstate{complex(sg * h.hx / norm, -sg * h.hy / norm),
                    complex(d_minus / norm, 0.0)};
}

complex overlap_generic(const BlochVector& h, const BlochVector& hp, Band s) {
  const Eigenstate a = eigenstate(h, s);
  const Eigenstate b = eigenstate(hp, s);
  return std::conj(a.c_up) * b.c_up + std::conj(a.c_down) * b.c_down;
}

double chiral_violation(const BlochVector& h, ChiralClass cls) {
  switch (cls) {
    case ChiralClass::chiral_z:
      return std::abs(h.hz);
    case ChiralClass::chiral_y:
      return std::abs(h.hy);
    case ChiralClass::chiral_x:
      return std::abs(h.hx);
    case ChiralClass::none:
      return 0.0;
  }
  return 0.0;
}

complex overlap_chiral(const BlochVector& h, const BlochVector& hp, Band s,
                       ChiralClass cls) {
  if (cls == ChiralClass::none) {
    throw ClassMismatchError(
        "overlap_chiral: no reduced form without a chiral class");
  }
  const double viol =
      std::max(chiral_violation(h, cls), chiral_violation(hp, cls));
  if (viol > 1e-12) {
    throw ClassMismatchError(
        "overlap_chiral: inputs violate the class constraint");
  }
  const double e = field_norm(h);
  const double ep = field_norm(hp);
  if (!(e > eps_deg) || !(ep > eps_deg)) {
    throw DegenerateError("overlap_chiral: band touching");
  }
  const double sg = band_sign(s);
  if (cls == ChiralClass::chiral_z) {
    // In-plane field only; the overlap is s-independent.
    const complex m(h.hx, -h.hy);
    const complex p(hp.hx, hp.hy);
    return 0.5 + m * p / (2.0 * e * ep);
  }
  // chiral_y and chiral_x are the same expression with the surviving
  // in-plane component swapped; both give a real overlap.
  const double w = cls == ChiralClass::chiral_y ? h.hx : h.hy;
  const double wp = cls == ChiralClass::chiral_y ? hp.hx : hp.hy;
  const double dz = stable_norm_plus(e, sg * h.hz, h.hx, h.hy);
  const double dzp = stable_norm_plus(ep, sg * hp.hz, hp.hx, hp.hy);
  return complex(
      (w * wp + dz * dzp) / (2.0 * std::sqrt(e * ep * dz * dzp)), 0.0);
}

}  // namespace floq

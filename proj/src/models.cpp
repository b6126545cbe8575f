#include "floq/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace floq {

namespace {

constexpr double pi = std::numbers::pi;

using Mat2 = Eigen::Matrix2cd;

/// exp(-i theta n.sigma) for a unit axis n.
Mat2 spin_rotation(double theta, double nx, double ny, double nz) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 u;
  u(0, 0) = complex(c, -s * nz);
  u(0, 1) = complex(-s * ny, -s * nx);
  u(1, 0) = complex(s * ny, -s * nx);
  u(1, 1) = complex(c, s * nz);
  return u;
}

}  // namespace

double reduce_to_bz(double k) {
  return k - 2.0 * pi * std::floor((k + pi) / (2.0 * pi));
}

SpinChainParams spin_chain_params_from_mu(double mu, double omega) {
  SpinChainParams p;
  p.omega = omega;
  p.delta2 = mu + omega;  // mu = (delta2 - omega)/delta1 with delta1 = 1
  return p;
}

ModelSpec spin_chain(const SpinChainParams& p) {
  if (p.delta1 != 1.0) {
    throw RangeError("spin_chain: delta1 is the energy unit and must be 1");
  }
  const double mu = p.mu();
  const double h0 = 0.5 * p.omega;
  ModelSpec m;
  m.name = "spin_chain";
  m.chiral = ChiralClass::chiral_y;
  m.params = p;
  m.bloch = [mu, h0](double k) {
    k = reduce_to_bz(k);
    return BlochVector{h0, 0.5 * std::sin(k), 0.0, 0.5 * (std::cos(k) + mu)};
  };
  m.bloch_derivative = [](double k) {
    k = reduce_to_bz(k);
    return BlochDerivative{0.0, 0.5 * std::cos(k), 0.0, -0.5 * std::sin(k)};
  };
  return m;
}

ModelSpec ordkr(const OrdkrParams& p) {
  const double k1 = p.k1;
  const double k2 = p.k2;
  ModelSpec m;
  m.name = "ordkr";
  m.chiral = ChiralClass::chiral_z;
  m.params = p;
  // (hx,hy) are the sigma coefficients of the one-period unitary
  // U(k) = cosA cosB - i(hx sx + hy sy), A = K1 sin(k/2), B = K2 cos(k/2).
  m.bloch = [k1, k2](double k) {
    k = reduce_to_bz(k);
    const double ch = std::cos(0.5 * k);
    const double sh = std::sin(0.5 * k);
    const double a = k1 * sh;
    const double b = k2 * ch;
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const double sb = std::sin(b);
    return BlochVector{0.0, ch * ca * sb + sh * sa, sh * ca * sb - ch * sa,
                       0.0};
  };
  m.bloch_derivative = [k1, k2](double k) {
    k = reduce_to_bz(k);
    const double ch = std::cos(0.5 * k);
    const double sh = std::sin(0.5 * k);
    const double a = k1 * sh;
    const double b = k2 * ch;
    const double da = 0.5 * k1 * ch;
    const double db = -0.5 * k2 * sh;
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const double cb = std::cos(b);
    const double sb = std::sin(b);
    const double dhx = -0.5 * sh * ca * sb - ch * sa * da * sb +
                       ch * ca * cb * db + 0.5 * ch * sa + sh * ca * da;
    const double dhy = 0.5 * ch * ca * sb - sh * sa * da * sb +
                       sh * ca * cb * db + 0.5 * sh * sa - ch * ca * da;
    return BlochDerivative{0.0, dhx, dhy, 0.0};
  };
  return m;
}

ModelSpec pqkc(const PqkcParams& p) {
  const double delta = p.delta;
  const double mu = p.mu_chem;
  const double j = p.j;
  ModelSpec m;
  m.name = "pqkc";
  m.chiral = ChiralClass::chiral_x;
  m.params = p;
  // U(k) = cos dy cos dz - i(hy sy + hz sz), dy = Delta sin k,
  // dz = mu + J cos k.
  m.bloch = [delta, mu, j](double k) {
    k = reduce_to_bz(k);
    const double dy = delta * std::sin(k);
    const double dz = mu + j * std::cos(k);
    return BlochVector{0.0, 0.0, std::sin(dy) * std::cos(dz), std::sin(dz)};
  };
  m.bloch_derivative = [delta, mu, j](double k) {
    k = reduce_to_bz(k);
    const double dy = delta * std::sin(k);
    const double dz = mu + j * std::cos(k);
    const double ddy = delta * std::cos(k);
    const double ddz = -j * std::sin(k);
    const double dhy =
        std::cos(dy) * ddy * std::cos(dz) - std::sin(dy) * std::sin(dz) * ddz;
    const double dhz = std::cos(dz) * ddz;
    return BlochDerivative{0.0, 0.0, dhy, dhz};
  };
  return m;
}

double ordkr_unitary_check(const OrdkrParams& p, double k) {
  k = reduce_to_bz(k);
  const double ch = std::cos(0.5 * k);
  const double sh = std::sin(0.5 * k);
  const double a = p.k1 * sh;
  const double b = p.k2 * ch;
  // Literal product: half kick, full kick about the orthogonal in-plane
  // axis, half kick again.
  const Mat2 outer = spin_rotation(0.5 * b, ch, sh, 0.0);
  const Mat2 middle = spin_rotation(a, sh, -ch, 0.0);
  const Mat2 product = outer * middle * outer;

  const BlochVector h = ordkr(p).bloch(k);
  Mat2 closed;
  const double scal = std::cos(a) * std::cos(b);
  closed(0, 0) = complex(scal, 0.0);
  closed(0, 1) = complex(-h.hy, -h.hx);
  closed(1, 0) = complex(h.hy, -h.hx);
  closed(1, 1) = complex(scal, 0.0);
  return (product - closed).cwiseAbs().maxCoeff();
}

double pqkc_unitary_check(const PqkcParams& p, double k) {
  k = reduce_to_bz(k);
  const double dy = p.delta * std::sin(k);
  const double dz = p.mu_chem + p.j * std::cos(k);
  const Mat2 outer = spin_rotation(0.5 * dy, 0.0, 1.0, 0.0);
  const Mat2 middle = spin_rotation(dz, 0.0, 0.0, 1.0);
  const Mat2 product = outer * middle * outer;

  const BlochVector h = pqkc(p).bloch(k);
  Mat2 closed;
  const double scal = std::cos(dy) * std::cos(dz);
  closed(0, 0) = complex(scal, -h.hz);
  closed(0, 1) = complex(-h.hy, 0.0);
  closed(1, 0) = complex(h.hy, 0.0);
  closed(1, 1) = complex(scal, h.hz);
  return (product - closed).cwiseAbs().maxCoeff();
}

namespace {

/// One squared boundary term n^2 pi^2 / c^2 with the 0/0 -> 0 rule.
double boundary_term(int n, double c) {
  if (n == 0) return 0.0;
  if (c == 0.0) return std::numeric_limits<double>::infinity();
  const double t = static_cast<double>(n) * pi / c;
  return t * t;
}

int lattice_window(double scale) {
  return static_cast<int>(std::ceil(std::abs(scale) / pi)) + 2;
}

}  // namespace

double phase_boundary_distance(const ModelSpec& m) {
  // Boundary equations exist only for the built-ins; a hand-assembled
  // spec carries no transition data even if its params slot is filled.
  const auto* sc = std::get_if<SpinChainParams>(&m.params);
  if (sc && m.name == "spin_chain") {
    return std::abs(std::abs(sc->mu()) - 1.0);
  }
  const auto* ok = std::get_if<OrdkrParams>(&m.params);
  if (ok && m.name == "ordkr") {
    // (n pi / K1)^2 + (m pi / K2)^2 = 1
    const int win = lattice_window(std::max(std::abs(ok->k1), std::abs(ok->k2)));
    double best = std::numeric_limits<double>::infinity();
    for (int n = -win; n <= win; ++n) {
      const double tn = boundary_term(n, ok->k1);
      if (!std::isfinite(tn)) continue;
      for (int mm = -win; mm <= win; ++mm) {
        const double tm = boundary_term(mm, ok->k2);
        if (!std::isfinite(tm)) continue;
        best = std::min(best, std::abs(tn + tm - 1.0));
      }
    }
    return best;
  }
  const auto* pq = std::get_if<PqkcParams>(&m.params);
  if (pq && m.name == "pqkc") {
    // (n pi / Delta)^2 + ((m pi - mu)/J)^2 = 1
    const double scale = std::max({std::abs(pq->delta), std::abs(pq->j),
                                   std::abs(pq->mu_chem)});
    const int win = lattice_window(scale);
    double best = std::numeric_limits<double>::infinity();
    for (int n = -win; n <= win; ++n) {
      const double tn = boundary_term(n, pq->delta);
      if (!std::isfinite(tn)) continue;
      for (int mm = -win; mm <= win; ++mm) {
        const double num = static_cast<double>(mm) * pi - pq->mu_chem;
        double tm;
        if (pq->j == 0.0) {
          if (num != 0.0) continue;
          tm = 0.0;
        } else {
          tm = (num / pq->j) * (num / pq->j);
        }
        best = std::min(best, std::abs(tn + tm - 1.0));
      }
    }
    return best;
  }
  throw UnknownModelError(
      "phase_boundary_distance: not a built-in model spec");
}

double spin_chain_G_analytic(double mu) {
  const double a = std::abs(mu);
  if (a == 1.0) {
    throw CriticalPointError("spin_chain_G_analytic: divergent at |mu| = 1");
  }
  const double denom = 8.0 * (mu * mu - 1.0);
  if (a > 1.0) return 1.0 / denom;
  return (mu * mu - 2.0) / denom;
}

}  // namespace floq

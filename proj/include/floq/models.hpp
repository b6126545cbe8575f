#pragma once

/// Built-in driven two-band models, each reduced to an effective Bloch
/// vector h(k) with analytic k-derivatives:
///
///  * spin_chain: harmonically driven spin chain, h = (w/2, sin(k)/2, 0,
///    (cos k + mu)/2). Transitions at |mu| = 1.
///  * ordkr: on-resonance double kicked rotor at V = pi/2; the Floquet
///    operator is a product of three spin rotations with closed form
///    U(k) = cosA*cosB - i(hx*sx + hy*sy). Transitions on the ellipses
///    (n*pi/K1)^2 + (m*pi/K2)^2 = 1.
///  * pqkc: periodically quenched Kitaev chain, U(k) = cos dy*cos dz
///    - i(hy*sy + hz*sz) with dy = Delta*sin k, dz = mu + J*cos k.
///    Transitions at (n*pi/Delta)^2 + ((m*pi - mu)/J)^2 = 1.
///
/// For ordkr/pqkc the (hx,hy)/(hy,hz) pairs parametrize the unitary, not
/// an energy-linear Hamiltonian; all geometry downstream uses only the
/// shared eigenvectors, so no normalization is applied.

#include <functional>
#include <string>
#include <variant>

#include "floq/bloch.hpp"

namespace floq {

struct SpinChainParams {
  double delta1 = 1.0;  // driving amplitude, fixed energy unit
  double delta2 = 0.0;
  double omega = 0.0;
  double mu() const { return (delta2 - omega) / delta1; }
};

/// Convenience: mu is the only parameter that matters for geometry.
SpinChainParams spin_chain_params_from_mu(double mu, double omega = 0.0);

struct OrdkrParams {
  double k1 = 0.0;
  double k2 = 0.0;
  // kick strength V is pinned to pi/2; other values leave the two-band
  // reduction invalid.
};

struct PqkcParams {
  double delta = 0.0;
  double mu_chem = 0.0;
  double j = 0.0;
};

using ModelParams = std::variant<SpinChainParams, OrdkrParams, PqkcParams>;

struct ModelSpec {
  std::string name;
  ChiralClass chiral = ChiralClass::none;
  std::function<BlochVector(double)> bloch;
  std::function<BlochDerivative(double)> bloch_derivative;
  ModelParams params;
};

ModelSpec spin_chain(const SpinChainParams& p);
ModelSpec ordkr(const OrdkrParams& p);
ModelSpec pqkc(const PqkcParams& p);

/// Max-abs deviation between the literal three-factor rotation product
/// and the closed form used by ordkr(). Should be at rounding level
/// (<= 1e-12) for all inputs.
double ordkr_unitary_check(const OrdkrParams& p, double k);
double pqkc_unitary_check(const PqkcParams& p, double k);

/// Distance (absolute residual of the boundary equation, minimized over
/// the relevant integer lattice) from the model's parameters to the
/// nearest phase transition. 0 means exactly critical. Throws
/// UnknownModelError for specs not built by this module.
double phase_boundary_distance(const ModelSpec& m);

/// Closed-form BZ-integrated metric of the spin chain:
/// 1/(8(mu^2-1)) for |mu|>1, (mu^2-2)/(8(mu^2-1)) for |mu|<1.
/// Throws CriticalPointError at |mu| = 1.
double spin_chain_G_analytic(double mu);

/// Reduce k into [-pi, pi). The built-in models evaluate on the
/// principal interval only (the ordkr/pqkc closed forms use half-angle
/// terms whose periodicity holds for the pair, not per term).
double reduce_to_bz(double k);

}  // namespace floq

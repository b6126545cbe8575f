#pragma once

/// Bipartite entanglement of a Slater state built from N occupied Bloch
/// states on an L-cell ring, for a contiguous subsystem of L_A cells.
///
/// Main route: the N x N overlap matrix O^A with entries
///   O^A_{kk'} = O^A0_{kk'} * <psi_k|psi_k'>,
///   O^A0_{kk'} = (1/L) sum_{n=1..L_A} e^{-i(k-k')n}
/// whose spectrum {eta} gives S_A; the plane-wave kernel O^A0 alone
/// gives S_A0, and the geometric part is S_QG = S_A - S_A0.
///
/// Oracle route: the 2L_A x 2L_A restricted correlation matrix C^A,
/// sharing all nonzero spectrum with O^A (equal traces of all powers).

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "floq/models.hpp"

namespace floq {

enum class FillingOrder { consecutive, energy_ordered };

/// Occupied momenta k_l = 2*pi*l/L + k_offset for N chosen l in 1..L.
struct FillingSpec {
  int L = 0;
  int N = 0;
  Band band = Band::minus;
  double k_offset = 0.0;
  std::vector<int> ells;       // the chosen l values, ascending
  std::vector<double> momenta;  // matching k values, strictly increasing
};

/// Consecutive filling l = 1..N.
FillingSpec make_filling(int L, int N, Band band = Band::minus,
                         double k_offset = 0.0);

/// Alternative convention: the N momenta with the lowest occupied-band
/// dispersion h0 + s|h| (ties broken by l), then re-sorted ascending.
FillingSpec make_filling_energy_ordered(const ModelSpec& m, int L, int N,
                                        Band band = Band::minus,
                                        double k_offset = 0.0);

/// Plane-wave kernel O^A0 (N x N, Hermitian by construction).
Eigen::MatrixXcd kernel_a0(const FillingSpec& f, int L_A);

/// Full overlap matrix O^A (kernel entries times spinor overlaps).
/// Throws GridError when a filling momentum hits a band touching.
Eigen::MatrixXcd overlap_matrix(const ModelSpec& m, const FillingSpec& f,
                                int L_A);

/// -sum [eta ln eta + (1-eta) ln(1-eta)] in nats, with 0 ln 0 = 0.
/// Inputs are clamped into [0,1]; excursions beyond 1e-10 raise
/// RangeError (they indicate a broken spectrum, not roundoff).
double vn_entropy_from_spectrum(const std::vector<double>& eta);

/// Renyi entropy (1/(1-lambda)) sum ln[eta^lambda + (1-eta)^lambda].
/// lambda > 0, lambda != 1 (LambdaError at exactly 1).
double renyi_entropy_from_spectrum(const std::vector<double>& eta,
                                   double lambda);

/// Single-particle entanglement levels xi = ln(1/zeta - 1), ascending.
/// Input values outside (1e-12, 1-1e-12) are dropped; the counts of
/// such +inf / -inf levels are reported through the optional pointers.
std::vector<double> entanglement_spectrum(const std::vector<double>& zeta,
                                          int* n_pos_inf = nullptr,
                                          int* n_neg_inf = nullptr);

struct RenyiEntry {
  double lambda = 0.0;
  double s_a = 0.0;
  double s_a0 = 0.0;
  double s_qg = 0.0;
};

struct EntanglementResult {
  std::vector<double> eta;  // spectrum of O^A, ascending, clamped to [0,1]
  double s_a = 0.0;
  double s_a0 = 0.0;
  double s_qg = 0.0;
  std::vector<RenyiEntry> renyi;
  std::optional<std::vector<double>> ent_spectrum;
  int spectrum_pos_inf = 0;
  int spectrum_neg_inf = 0;
};

struct GeeOptions {
  std::vector<double> renyi_lambdas;
  bool want_spectrum = false;
};

/// Diagonalizes O^A and O^A0 and assembles entropies; s_qg is exactly
/// the difference of the two computed entropies.
EntanglementResult gee(const ModelSpec& m, const FillingSpec& f, int L_A,
                       const GeeOptions& opts = {});

/// Restricted correlation matrix C^A with entries
/// C_{(n,a),(m,b)} = (1/L) sum_l e^{i k_l (n-m)} psi_a(k_l) psi_b*(k_l).
Eigen::MatrixXcd correlation_matrix(const ModelSpec& m, const FillingSpec& f,
                                    int L_A);

/// S_A through the correlation-matrix spectrum; agrees with gee().s_a
/// to 1e-9. Intended as the independent cross-check (L <= 2000).
double correlation_matrix_entropy(const ModelSpec& m, const FillingSpec& f,
                                  int L_A);

/// max over q = 1..q_max of |Tr (O^A)^q - Tr (C^A)^q|. q_max in [1,6],
/// L <= 64 (SizeError otherwise). Contract: <= 1e-10.
double trace_identity_check(const ModelSpec& m, const FillingSpec& f, int L_A,
                            int q_max);

}  // namespace floq

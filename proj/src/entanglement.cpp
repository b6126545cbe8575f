#include "floq/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "floq/linalg.hpp"

namespace floq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps_es = 1e-12;

void validate_sizes(int L, int N) {
  if (L < 2) throw SizeError("filling: L must be >= 2");
  if (N < 1 || N > L) throw SizeError("filling: need 1 <= N <= L");
}

void validate_subsystem(const FillingSpec& f, int L_A) {
  if (L_A < 1 || L_A > f.L) {
    throw SizeError("subsystem size must satisfy 1 <= L_A <= L");
  }
}

/// Toeplitz kernel values f(d) = (1/L) sum_{n=1..L_A} e^{-i 2*pi*d*n/L}
/// for d = 0..d_max; the k_offset cancels in k - k' so only the integer
/// difference d = l - l' enters.  f(-d) = conj(f(d)).
///
/// Evaluated through the closed form of the geometric sum,
///   f(d) = e^{-i pi d (L_A+1)/L} sin(pi d L_A / L) / (L sin(pi d / L)),
/// which keeps every entry accurate to a few ulps.  Summing L_A phase
/// factors instead costs O(L_A eps) per entry, and at L = N = 400 that
/// is already enough matrix noise to drag the unit-filling entropy
/// above 1e-10.
std::vector<complex> kernel_row(int L, int L_A, int d_max) {
  // sin and the phase take arguments pi * (integer) / L, so reduce the
  // integer mod 2L up front instead of feeding sin a large argument.
  const auto sin_frac = [L](long long q) {
    return std::sin(pi * static_cast<double>(q % (2LL * L)) / L);
  };
  std::vector<complex> f(static_cast<size_t>(d_max) + 1);
  f[0] = complex(static_cast<double>(L_A) / L, 0.0);
  for (int d = 1; d <= d_max; ++d) {
    const double ratio = sin_frac(1LL * d * L_A) / sin_frac(d);
    const long long m = (1LL * d * (L_A + 1)) % (2LL * L);
    f[static_cast<size_t>(d)] = std::polar(ratio / L, -pi * m / L);
  }
  return f;
}

std::vector<Eigenstate> filling_eigenstates(const ModelSpec& m,
                                            const FillingSpec& f) {
  std::vector<Eigenstate> psi;
  psi.reserve(f.momenta.size());
  for (double k : f.momenta) {
    try {
      psi.push_back(eigenstate(m.bloch(k), f.band));
    } catch (const DegenerateError&) {
      throw GridError(
          "band touching at a filling momentum; retry with k_offset = pi/L");
    }
  }
  return psi;
}

complex spinor_dot(const Eigenstate& a, const Eigenstate& b) {
  return std::conj(a.c_up) * b.c_up + std::conj(a.c_down) * b.c_down;
}

std::vector<double> clamped_unit_interval(const std::vector<double>& vals,
                                          const char* what) {
  std::vector<double> out;
  out.reserve(vals.size());
  for (double v : vals) {
    if (v < -1e-10 || v > 1.0 + 1e-10) {
      throw RangeError(std::string(what) +
                       ": eigenvalue outside [-1e-10, 1+1e-10]");
    }
    out.push_back(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

}  // namespace

FillingSpec make_filling(int L, int N, Band band, double k_offset) {
  validate_sizes(L, N);
  FillingSpec f;
  f.L = L;
  f.N = N;
  f.band = band;
  f.k_offset = k_offset;
  f.ells.resize(static_cast<size_t>(N));
  f.momenta.resize(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) {
    f.ells[static_cast<size_t>(i)] = i + 1;
    f.momenta[static_cast<size_t>(i)] = 2.0 * pi * (i + 1) / L + k_offset;
  }
  return f;
}

FillingSpec make_filling_energy_ordered(const ModelSpec& m, int L, int N,
                                        Band band, double k_offset) {
  validate_sizes(L, N);
  std::vector<int> ells(static_cast<size_t>(L));
  std::iota(ells.begin(), ells.end(), 1);
  std::vector<double> energy(static_cast<size_t>(L));
  for (int l = 1; l <= L; ++l) {
    const double k = 2.0 * pi * l / L + k_offset;
    energy[static_cast<size_t>(l - 1)] = dispersion(m.bloch(k), band);
  }
  std::stable_sort(ells.begin(), ells.end(), [&](int a, int b) {
    return energy[static_cast<size_t>(a - 1)] <
           energy[static_cast<size_t>(b - 1)];
  });
  ells.resize(static_cast<size_t>(N));
  std::sort(ells.begin(), ells.end());

  FillingSpec f;
  f.L = L;
  f.N = N;
  f.band = band;
  f.k_offset = k_offset;
  f.ells = std::move(ells);
  f.momenta.reserve(static_cast<size_t>(N));
  for (int l : f.ells) f.momenta.push_back(2.0 * pi * l / L + k_offset);
  return f;
}

Eigen::MatrixXcd kernel_a0(const FillingSpec& f, int L_A) {
  validate_subsystem(f, L_A);
  const int n = f.N;
  const int d_max = n > 1 ? f.ells.back() - f.ells.front() : 0;
  const std::vector<complex> row = kernel_row(f.L, L_A, d_max);
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = row[0];
    for (int j = i + 1; j < n; ++j) {
      const int d = f.ells[static_cast<size_t>(i)] -
                    f.ells[static_cast<size_t>(j)];  // < 0 above the diagonal
      const complex v = std::conj(row[static_cast<size_t>(-d)]);
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

Eigen::MatrixXcd overlap_matrix(const ModelSpec& m, const FillingSpec& f,
                                int L_A) {
  Eigen::MatrixXcd out = kernel_a0(f, L_A);
  const std::vector<Eigenstate> psi = filling_eigenstates(m, f);
  const int n = f.N;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const complex v =
          out(i, j) * spinor_dot(psi[static_cast<size_t>(i)],
                                 psi[static_cast<size_t>(j)]);
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

double vn_entropy_from_spectrum(const std::vector<double>& eta) {
  const std::vector<double> vals =
      clamped_unit_interval(eta, "vn_entropy_from_spectrum");
  double s = 0.0;
  for (double v : vals) {
    if (v > 0.0) s -= v * std::log(v);
    const double w = 1.0 - v;
    if (w > 0.0) s -= w * std::log(w);
  }
  return s;
}

double renyi_entropy_from_spectrum(const std::vector<double>& eta,
                                   double lambda) {
  if (lambda == 1.0) {
    throw LambdaError("renyi_entropy_from_spectrum: take the vn path at 1");
  }
  if (!(lambda > 0.0)) {
    throw LambdaError("renyi_entropy_from_spectrum: order must be positive");
  }
  const std::vector<double> vals =
      clamped_unit_interval(eta, "renyi_entropy_from_spectrum");
  double sum = 0.0;
  for (double v : vals) {
    sum += std::log(std::pow(v, lambda) + std::pow(1.0 - v, lambda));
  }
  return sum / (1.0 - lambda);
}

std::vector<double> entanglement_spectrum(const std::vector<double>& zeta,
                                          int* n_pos_inf, int* n_neg_inf) {
  std::vector<double> xi;
  xi.reserve(zeta.size());
  int pos = 0;
  int neg = 0;
  for (double z : zeta) {
    if (z <= eps_es) {
      ++pos;  // empty level, xi -> +inf
    } else if (z >= 1.0 - eps_es) {
      ++neg;  // full level, xi -> -inf
    } else {
      xi.push_back(std::log(1.0 / z - 1.0));
    }
  }
  std::sort(xi.begin(), xi.end());
  if (n_pos_inf) *n_pos_inf = pos;
  if (n_neg_inf) *n_neg_inf = neg;
  return xi;
}

EntanglementResult gee(const ModelSpec& m, const FillingSpec& f, int L_A,
                       const GeeOptions& opts) {
  const Eigen::MatrixXcd o_a = overlap_matrix(m, f, L_A);
  const Eigen::MatrixXcd o_a0 = kernel_a0(f, L_A);
  const std::vector<double> eta_a = hermitian_eigenvalues(o_a);
  const std::vector<double> eta_a0 = hermitian_eigenvalues(o_a0);

  EntanglementResult r;
  r.s_a = vn_entropy_from_spectrum(eta_a);
  r.s_a0 = vn_entropy_from_spectrum(eta_a0);
  r.s_qg = r.s_a - r.s_a0;
  r.eta = clamped_unit_interval(eta_a, "gee");
  for (double lambda : opts.renyi_lambdas) {
    RenyiEntry e;
    e.lambda = lambda;
    e.s_a = renyi_entropy_from_spectrum(eta_a, lambda);
    e.s_a0 = renyi_entropy_from_spectrum(eta_a0, lambda);
    e.s_qg = e.s_a - e.s_a0;
    r.renyi.push_back(e);
  }
  if (opts.want_spectrum) {
    r.ent_spectrum =
        entanglement_spectrum(r.eta, &r.spectrum_pos_inf, &r.spectrum_neg_inf);
  }
  return r;
}

Eigen::MatrixXcd correlation_matrix(const ModelSpec& m, const FillingSpec& f,
                                    int L_A) {
  validate_subsystem(f, L_A);
  const std::vector<Eigenstate> psi = filling_eigenstates(m, f);

  // Block-Toeplitz: C(n,m) depends on t = n - m only; B(-t) = B(t)^dagger.
  std::vector<Eigen::Matrix2cd> block(static_cast<size_t>(L_A));
  for (int t = 0; t < L_A; ++t) {
    Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
    for (size_t i = 0; i < psi.size(); ++i) {
      const complex phase = std::polar(1.0, f.momenta[i] * t);
      const complex up = psi[i].c_up;
      const complex dn = psi[i].c_down;
      b(0, 0) += phase * up * std::conj(up);
      b(0, 1) += phase * up * std::conj(dn);
      b(1, 0) += phase * dn * std::conj(up);
      b(1, 1) += phase * dn * std::conj(dn);
    }
    block[static_cast<size_t>(t)] = b / static_cast<double>(f.L);
  }

  Eigen::MatrixXcd c(2 * L_A, 2 * L_A);
  for (int n = 0; n < L_A; ++n) {
    for (int mm = 0; mm < L_A; ++mm) {
      const int t = n - mm;
      const Eigen::Matrix2cd b =
          t >= 0 ? block[static_cast<size_t>(t)]
                 : Eigen::Matrix2cd(block[static_cast<size_t>(-t)].adjoint());
      c.block<2, 2>(2 * n, 2 * mm) = b;
    }
  }
  return c;
}

double correlation_matrix_entropy(const ModelSpec& m, const FillingSpec& f,
                                  int L_A) {
  if (f.L > 2000) {
    throw SizeError("correlation_matrix_entropy: oracle path capped at L = 2000");
  }
  const Eigen::MatrixXcd c = correlation_matrix(m, f, L_A);
  return vn_entropy_from_spectrum(hermitian_eigenvalues(c));
}

double trace_identity_check(const ModelSpec& m, const FillingSpec& f, int L_A,
                            int q_max) {
  if (q_max < 1 || q_max > 6) {
    throw SizeError("trace_identity_check: q_max must lie in [1, 6]");
  }
  if (f.L > 64) {
    throw SizeError("trace_identity_check: meant for small systems (L <= 64)");
  }
  const std::vector<double> eta = hermitian_eigenvalues(overlap_matrix(m, f, L_A));
  const std::vector<double> zeta =
      hermitian_eigenvalues(correlation_matrix(m, f, L_A));
  double worst = 0.0;
  std::vector<double> pow_eta(eta.size(), 1.0);
  std::vector<double> pow_zeta(zeta.size(), 1.0);
  for (int q = 1; q <= q_max; ++q) {
    double tr_o = 0.0;
    double tr_c = 0.0;
    for (size_t i = 0; i < eta.size(); ++i) {
      pow_eta[i] *= eta[i];
      tr_o += pow_eta[i];
    }
    for (size_t i = 0; i < zeta.size(); ++i) {
      pow_zeta[i] *= zeta[i];
      tr_c += pow_zeta[i];
    }
    worst = std::max(worst, std::abs(tr_o - tr_c));
  }
  return worst;
}

}  // namespace floq

/// Tests for the entanglement pipeline: restricted overlap matrices,
/// entropy formulas, the geometric entanglement entropy, and the
/// correlation-matrix and Fock-space cross-checks.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "floq/entanglement.hpp"
#include "oracles.hpp"

namespace test_entanglement {

using floq::Band;
using floq::complex;
using floq::FillingSpec;
using floq::ModelSpec;

constexpr double pi = std::numbers::pi;

namespace {

ModelSpec spin(double mu) {
  return floq::spin_chain(floq::spin_chain_params_from_mu(mu));
}

ModelSpec gapped_pqkc() { return floq::pqkc({0.5 * pi, 0.25 * pi, 5.0 * pi}); }

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(),
                        es.eigenvalues().data() + es.eigenvalues().size());
  return v;  // Eigen returns them sorted ascending already
}

}  // namespace

TEST_CASE("make_filling_enumerates_consecutive_momenta") {
  const FillingSpec f = floq::make_filling(8, 3);
  REQUIRE(f.momenta.size() == 3);
  CHECK(f.ells == std::vector<int>{1, 2, 3});
  for (int i = 0; i < 3; ++i) {
    CHECK(f.momenta[static_cast<size_t>(i)] ==
          Catch::Approx(2.0 * pi * (i + 1) / 8.0).margin(1e-15));
  }

  const FillingSpec off = floq::make_filling(8, 3, Band::minus, pi / 8.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(off.momenta[static_cast<size_t>(i)] - f.momenta[static_cast<size_t>(i)] ==
          Catch::Approx(pi / 8.0).margin(1e-15));
  }

  CHECK_THROWS_AS(floq::make_filling(1, 1), floq::SizeError);
  CHECK_THROWS_AS(floq::make_filling(8, 0), floq::SizeError);
  CHECK_THROWS_AS(floq::make_filling(8, 9), floq::SizeError);
}

TEST_CASE("make_filling_energy_ordered_picks_lowest_band_energies") {
  // mu = 0.9: the lower band h0 - E is deepest near k = 0 (mod 2pi), so
  // the first four filled momenta cluster at the zone ends.
  const FillingSpec f = floq::make_filling_energy_ordered(spin(0.9), 8, 4);
  CHECK(f.ells == std::vector<int>{1, 2, 7, 8});
  REQUIRE(f.momenta.size() == 4);
  CHECK(std::is_sorted(f.momenta.begin(), f.momenta.end()));

  // At unit filling the selection is the full zone either way.
  const FillingSpec full = floq::make_filling_energy_ordered(spin(0.9), 8, 8);
  CHECK(full.ells == floq::make_filling(8, 8).ells);
}

TEST_CASE("kernel_entries_follow_the_geometric_sum") {
  // Two-momentum example at L = 4: the (pi/2, pi) entry is a two-term
  // sum, (1/4)(i - 1); the diagonal is exactly L_A / L.
  const FillingSpec f = floq::make_filling(4, 2);
  const Eigen::MatrixXcd k = floq::kernel_a0(f, 2);
  CHECK(k(0, 0) == complex(0.5, 0.0));
  CHECK(std::abs(k(0, 1) - complex(-0.25, 0.25)) < 1e-15);
  CHECK(k(1, 0) == std::conj(k(0, 1)));

  // Literal sum cross-check on a bigger block.
  const FillingSpec g = floq::make_filling(24, 10);
  const Eigen::MatrixXcd kg = floq::kernel_a0(g, 7);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      complex sum = 0.0;
      for (int n = 1; n <= 7; ++n) {
        sum += std::polar(1.0 / 24.0,
                          -2.0 * pi * (g.ells[static_cast<size_t>(i)] -
                                       g.ells[static_cast<size_t>(j)]) *
                              n / 24.0);
      }
      worst = std::max(worst, std::abs(kg(i, j) - sum));
    }
  }
  CHECK(worst < 1e-14);

  // The grid offset cancels in momentum differences.
  const FillingSpec shifted = floq::make_filling(24, 10, Band::minus, 0.37);
  const Eigen::MatrixXcd ks = floq::kernel_a0(shifted, 7);
  CHECK((ks - kg).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(floq::kernel_a0(f, 0), floq::SizeError);
  CHECK_THROWS_AS(floq::kernel_a0(f, 5), floq::SizeError);
}

TEST_CASE("kernel_is_identity_at_full_subsystem_and_idempotent_at_unit_filling") {
  const FillingSpec f = floq::make_filling(12, 12);
  const Eigen::MatrixXcd full = floq::kernel_a0(f, 12);
  CHECK((full - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff() <
        1e-12);

  // At N = L the kernel is a projector: spectrum {0,1} with exactly L_A
  // ones.
  for (const int la : {3, 5, 8}) {
    const Eigen::MatrixXcd k = floq::kernel_a0(f, la);
    CHECK((k * k - k).cwiseAbs().maxCoeff() < 1e-12);
    int ones = 0;
    for (const double v : sorted_eigenvalues(k)) {
      CHECK(std::min(std::abs(v), std::abs(v - 1.0)) < 1e-12);
      if (v > 0.5) ++ones;
    }
    CHECK(ones == la);
  }
}

TEST_CASE("overlap_matrix_basics") {
  const ModelSpec m = spin(0.9);
  const FillingSpec f = floq::make_filling(8, 8);

  // Full subsystem: all restricted overlaps are full overlaps = 1.
  const Eigen::MatrixXcd full = floq::overlap_matrix(m, f, 8);
  CHECK((full - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-12);

  const Eigen::MatrixXcd o = floq::overlap_matrix(m, f, 4);
  CHECK((o - o.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(o.trace().real() - 4.0) < 1e-12);
  CHECK(std::abs(o.trace().imag()) < 1e-14);

  // Deep trivial limit: spinors become k-independent and the overlap
  // matrix collapses onto the plane-wave kernel.
  const Eigen::MatrixXcd near = floq::overlap_matrix(spin(1e6), f, 4);
  const Eigen::MatrixXcd kernel = floq::kernel_a0(f, 4);
  CHECK((near - kernel).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("overlap_matrix_reports_degenerate_filling_momenta") {
  // mu = 1 closes the gap at k = pi, which the default L = 8 grid hits.
  const ModelSpec m = spin(1.0);
  CHECK_THROWS_AS(floq::overlap_matrix(m, floq::make_filling(8, 8), 4),
                  floq::GridError);
  // The half-step offset dodges the touching even at criticality.
  const FillingSpec off = floq::make_filling(8, 8, Band::minus, pi / 8.0);
  const Eigen::MatrixXcd o = floq::overlap_matrix(m, off, 4);
  CHECK(std::abs(o.trace().real() - 4.0) < 1e-12);
}

TEST_CASE("vn_entropy_from_spectrum_values") {
  CHECK(floq::vn_entropy_from_spectrum({0.0, 1.0, 1.0, 0.0}) == 0.0);
  CHECK(floq::vn_entropy_from_spectrum({0.5}) ==
        Catch::Approx(std::log(2.0)).margin(1e-15));
  const double two_level = -2.0 * (0.25 * std::log(0.25) + 0.75 * std::log(0.75));
  CHECK(floq::vn_entropy_from_spectrum({0.25, 0.75}) ==
        Catch::Approx(two_level).margin(1e-14));

  // Tiny negative or >1 roundoff is clamped silently...
  CHECK(floq::vn_entropy_from_spectrum({-5e-11, 1.0 + 5e-11}) == 0.0);
  // ...but anything beyond the window is a bug upstream and must throw.
  CHECK_THROWS_AS(floq::vn_entropy_from_spectrum({1.0 + 2e-10}),
                  floq::RangeError);
  CHECK_THROWS_AS(floq::vn_entropy_from_spectrum({-2e-10}), floq::RangeError);
}

TEST_CASE("renyi_entropy_from_spectrum_values") {
  CHECK(floq::renyi_entropy_from_spectrum({0.5}, 2.0) ==
        Catch::Approx(std::log(2.0)).margin(1e-15));
  CHECK(floq::renyi_entropy_from_spectrum({0.0, 1.0}, 3.7) == 0.0);

  const std::vector<double> eta{0.25, 0.75};
  const double vn = floq::vn_entropy_from_spectrum(eta);
  CHECK(std::abs(floq::renyi_entropy_from_spectrum(eta, 0.999999) - vn) <
        1e-5);
  CHECK(std::abs(floq::renyi_entropy_from_spectrum(eta, 1.000001) - vn) <
        1e-5);

  CHECK_THROWS_AS(floq::renyi_entropy_from_spectrum(eta, 1.0),
                  floq::LambdaError);
  CHECK_THROWS_AS(floq::renyi_entropy_from_spectrum(eta, 0.0),
                  floq::LambdaError);
  CHECK_THROWS_AS(floq::renyi_entropy_from_spectrum(eta, -2.0),
                  floq::LambdaError);
}

TEST_CASE("renyi_entropy_is_non_increasing_in_the_order") {
  const floq::EntanglementResult r =
      floq::gee(spin(0.9), floq::make_filling(8, 5), 3);
  const double s_half = floq::renyi_entropy_from_spectrum(r.eta, 0.5);
  const double s_one = floq::vn_entropy_from_spectrum(r.eta);
  const double s_two = floq::renyi_entropy_from_spectrum(r.eta, 2.0);
  const double s_three = floq::renyi_entropy_from_spectrum(r.eta, 3.0);
  CHECK(s_half >= s_one - 1e-12);
  CHECK(s_one >= s_two - 1e-12);
  CHECK(s_two >= s_three - 1e-12);
}

TEST_CASE("entanglement_spectrum_maps_occupations_to_levels") {
  const std::vector<double> xi = floq::entanglement_spectrum({0.5});
  REQUIRE(xi.size() == 1);
  CHECK(std::abs(xi[0]) < 1e-12);

  const std::vector<double> fermi =
      floq::entanglement_spectrum({1.0 / (1.0 + std::exp(1.0))});
  REQUIRE(fermi.size() == 1);
  CHECK(fermi[0] == Catch::Approx(1.0).margin(1e-12));

  const std::vector<double> pair = floq::entanglement_spectrum({0.25, 0.75});
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Catch::Approx(-std::log(3.0)).margin(1e-12));
  CHECK(pair[1] == Catch::Approx(std::log(3.0)).margin(1e-12));

  // Saturated levels are counted, not returned.
  int pos = 0;
  int neg = 0;
  const std::vector<double> mid =
      floq::entanglement_spectrum({1e-15, 0.3, 1.0 - 1e-15, 0.0, 1.0}, &pos,
                                  &neg);
  CHECK(mid.size() == 1);
  CHECK(pos == 2);
  CHECK(neg == 2);
}

TEST_CASE("gee_reference_points") {
  // Unit filling: the plane-wave matrix is a projector, S_A0 = 0.
  const floq::EntanglementResult r =
      floq::gee(spin(0.9), floq::make_filling(8, 8), 4);
  CHECK(r.s_a0 <= 1e-10);
  CHECK(r.s_qg == r.s_a - r.s_a0);
  CHECK(r.s_a >= 0.0);
  CHECK(r.s_a <= 8.0 * std::log(2.0) + 1e-9);
  CHECK(r.eta.size() == 8);
  for (const double eta : r.eta) {
    CHECK(eta >= 0.0);
    CHECK(eta <= 1.0);
  }

  // Whole system: a pure state carries no entanglement.
  const floq::EntanglementResult whole =
      floq::gee(spin(0.9), floq::make_filling(8, 8), 8);
  CHECK(whole.s_a <= 1e-10);
  CHECK(std::abs(whole.s_qg) <= 1e-10);

  const floq::EntanglementResult partial =
      floq::gee(gapped_pqkc(), floq::make_filling(8, 6), 4);
  CHECK(partial.s_a >= 0.0);
  CHECK(partial.s_a0 >= 0.0);
  CHECK(partial.s_qg == partial.s_a - partial.s_a0);
}

TEST_CASE("gee_carries_optional_renyi_and_spectrum") {
  floq::GeeOptions opts;
  opts.renyi_lambdas = {0.5, 2.0, 3.0};
  opts.want_spectrum = true;
  const floq::EntanglementResult r =
      floq::gee(spin(0.9), floq::make_filling(8, 5), 3, opts);
  REQUIRE(r.renyi.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(r.renyi[i].lambda == opts.renyi_lambdas[i]);
    CHECK(r.renyi[i].s_qg == r.renyi[i].s_a - r.renyi[i].s_a0);
  }
  // Orders bracketing 1 bracket the von Neumann value.
  CHECK(r.renyi[0].s_a >= r.s_a - 1e-12);
  CHECK(r.renyi[1].s_a <= r.s_a + 1e-12);

  REQUIRE(r.ent_spectrum.has_value());
  CHECK(std::is_sorted(r.ent_spectrum->begin(), r.ent_spectrum->end()));
  CHECK(r.ent_spectrum->size() + static_cast<size_t>(r.spectrum_pos_inf) +
            static_cast<size_t>(r.spectrum_neg_inf) ==
        r.eta.size());

  floq::GeeOptions bad;
  bad.renyi_lambdas = {1.0};
  CHECK_THROWS_AS(floq::gee(spin(0.9), floq::make_filling(8, 5), 3, bad),
                  floq::LambdaError);
}

TEST_CASE("complement_subsystems_match_at_unit_filling") {
  const ModelSpec m = spin(0.9);
  const FillingSpec f = floq::make_filling(12, 12);
  for (int la = 1; la <= 6; ++la) {
    const double s_left = floq::gee(m, f, la).s_a;
    const double s_right = floq::gee(m, f, 12 - la).s_a;
    CHECK(std::abs(s_left - s_right) < 1e-9);
  }
}

TEST_CASE("overlap_route_equals_correlation_route") {
  // Exhaustive at L = 8 for the spin chain.
  const ModelSpec m = spin(0.9);
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const FillingSpec f = floq::make_filling(8, n);
    for (int la = 1; la <= 8; ++la) {
      worst = std::max(worst, std::abs(floq::gee(m, f, la).s_a -
                                       floq::correlation_matrix_entropy(m, f, la)));
    }
  }
  CHECK(worst < 1e-10);

  // Spot checks on the driven models and a larger chain.
  const FillingSpec f86 = floq::make_filling(8, 6);
  CHECK(std::abs(floq::gee(gapped_pqkc(), f86, 4).s_a -
                 floq::correlation_matrix_entropy(gapped_pqkc(), f86, 4)) <
        1e-10);

  const ModelSpec kicked = floq::ordkr({4.5 * pi, 0.5 * pi});
  const FillingSpec f12 = floq::make_filling(12, 7);
  CHECK(std::abs(floq::gee(kicked, f12, 5).s_a -
                 floq::correlation_matrix_entropy(kicked, f12, 5)) < 1e-9);

  const FillingSpec f64 = floq::make_filling(64, 40);
  CHECK(std::abs(floq::gee(m, f64, 20).s_a -
                 floq::correlation_matrix_entropy(m, f64, 20)) < 1e-9);
}

TEST_CASE("entropies_match_explicit_fock_space_reduction") {
  // Half the chain at unit filling.
  const FillingSpec f88 = floq::make_filling(8, 8);
  const floq::EntanglementResult spin_r = floq::gee(spin(0.9), f88, 4);
  CHECK(std::abs(spin_r.s_a - oracle::fock_entropy(spin(0.9), f88, 4)) <
        1e-8);

  // Partial filling in the kicked Kitaev chain.
  const FillingSpec f86 = floq::make_filling(8, 6);
  const floq::EntanglementResult pq_r = floq::gee(gapped_pqkc(), f86, 4);
  CHECK(std::abs(pq_r.s_a - oracle::fock_entropy(gapped_pqkc(), f86, 4)) <
        1e-8);

  // Small chain, quarter filling.
  const FillingSpec f42 = floq::make_filling(4, 2);
  CHECK(std::abs(floq::gee(spin(0.5), f42, 2).s_a -
                 oracle::fock_entropy(spin(0.5), f42, 2)) < 1e-9);
}

TEST_CASE("overlap_spectra_are_gauge_invariant") {
  const Eigen::MatrixXcd o =
      floq::overlap_matrix(spin(0.9), floq::make_filling(8, 6), 4);
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uph(0.0, 2.0 * pi);
  Eigen::VectorXcd phases(6);
  for (int i = 0; i < 6; ++i) phases(i) = std::polar(1.0, uph(rng));
  // Re-phasing every eigenstate conjugates the overlap matrix by a
  // diagonal unitary; the spectrum must not move.
  const Eigen::MatrixXcd rotated =
      phases.asDiagonal().inverse() * o * phases.asDiagonal();
  const std::vector<double> a = sorted_eigenvalues(o);
  const std::vector<double> b = sorted_eigenvalues(rotated);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i] - b[i]) < 1e-12);
  }
}

TEST_CASE("overlap_and_correlation_traces_agree_to_high_power") {
  // q = 1 is the particle count in the subsystem for both routes.
  CHECK(floq::trace_identity_check(spin(0.7), floq::make_filling(8, 5), 3,
                                   1) < 1e-12);
  CHECK(floq::trace_identity_check(spin(0.5), floq::make_filling(8, 8), 3,
                                   4) < 1e-10);
  CHECK(floq::trace_identity_check(gapped_pqkc(), floq::make_filling(8, 6), 4,
                                   4) < 1e-10);
  CHECK(floq::trace_identity_check(floq::ordkr({4.5 * pi, 0.5 * pi}),
                                   floq::make_filling(16, 9), 6, 4) < 1e-10);

  CHECK_THROWS_AS(floq::trace_identity_check(spin(0.5),
                                             floq::make_filling(8, 5), 3, 0),
                  floq::SizeError);
  CHECK_THROWS_AS(floq::trace_identity_check(spin(0.5),
                                             floq::make_filling(8, 5), 3, 7),
                  floq::SizeError);
  CHECK_THROWS_AS(floq::trace_identity_check(spin(0.5),
                                             floq::make_filling(128, 5), 3, 2),
                  floq::SizeError);
}

TEST_CASE("correlation_entropy_oracle_limits") {
  const FillingSpec f = floq::make_filling(6, 6);
  CHECK(floq::correlation_matrix_entropy(spin(0.5), f, 6) < 1e-10);
  CHECK_THROWS_AS(floq::correlation_matrix_entropy(
                      spin(0.5), floq::make_filling(2048, 10), 4),
                  floq::SizeError);
}

TEST_CASE("gee_at_scale_agrees_with_the_correlation_route") {
  // The saturation-plateau configuration: half the chain at unit
  // filling, deep in the gapped phase.
  const ModelSpec m = spin(0.9);
  const FillingSpec f = floq::make_filling(1000, 1000);
  const floq::EntanglementResult r = floq::gee(m, f, 500);
  CHECK(r.s_a0 <= 1e-10);
  CHECK(r.s_qg > 0.0);
  CHECK(std::abs(r.s_a - floq::correlation_matrix_entropy(m, f, 500)) <
        1e-9);
}

}  // namespace test_entanglement

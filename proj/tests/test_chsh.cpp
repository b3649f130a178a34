#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "spinorkit/bell.hpp"
#include "spinorkit/chsh.hpp"

using namespace spinorkit;

namespace {

rng::Sequence test_stream(std::uint32_t shard) {
  return {4242, rng::stream_id(rng::StreamPurpose::Tests, 64 + shard)};
}

Operator4 random_hermitian(rng::Sequence& seq) {
  Operator4 b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      b(i, j) = Complex{seq.next_gaussian(), seq.next_gaussian()};
  Operator4 h = b + b.adjoint();
  return h;
}

}  // namespace

TEST_CASE("pauli matrices along the axes") {
  const Matrix2c sz = pauli_dot(z_axis());
  CHECK(sz(0, 0) == Complex{1.0, 0.0});
  CHECK(sz(1, 1) == Complex{-1.0, 0.0});
  CHECK(sz(0, 1) == Complex{0.0, 0.0});

  rng::Sequence seq = test_stream(0);
  for (int i = 0; i < 100; ++i) {
    const UnitVector3 a = sample_unit_vector(seq);
    const Matrix2c s = pauli_dot(a);
    // Hermitian and traceless.
    CHECK(std::abs(s(0, 1) - std::conj(s(1, 0))) <= 1e-15);
    CHECK(std::abs(s.trace()) <= 1e-15);
    // Squares to the identity.
    const Matrix2c sq = s * s;
    CHECK(std::abs(sq(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(sq(1, 1) - 1.0) <= 1e-12);
    CHECK(std::abs(sq(0, 1)) <= 1e-12);
    // Eigenvalues +-1 from the 2x2 closed form.
    const auto ev = spin_sum_spectrum(a, a);  // spectrum of 2 sigma.a
    CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("spin-sum spectrum") {
  const auto xy = spin_sum_spectrum(x_axis(), y_axis());
  CHECK(xy[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(xy[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // Not a sum of +-1 eigenvalues of the two terms.
  for (double ev : xy)
    for (double excluded : {-2.0, 0.0, 2.0}) CHECK(std::abs(ev - excluded) > 0.4);

  const UnitVector3 minus_x = UnitVector3({-1.0, 0.0, 0.0});
  const auto opposite = spin_sum_spectrum(x_axis(), minus_x);
  CHECK(opposite[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(opposite[1] == doctest::Approx(0.0).epsilon(1e-14));

  rng::Sequence seq = test_stream(1);
  for (int i = 0; i < 200; ++i) {
    const UnitVector3 a = sample_unit_vector(seq);
    const UnitVector3 b = sample_unit_vector(seq);
    const double len = (a.vec() + b.vec()).norm();
    const auto ev = spin_sum_spectrum(a, b);
    CHECK(ev[0] == doctest::Approx(-len).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(len).epsilon(1e-12));
  }
}

TEST_CASE("jacobi eigensolver on fixed matrices") {
  CHECK(hermitian_eigenvalues(Operator4::identity()) ==
        std::array<double, 4>{1.0, 1.0, 1.0, 1.0});

  Operator4 diag;
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = -1.0;
  diag(3, 3) = -3.0;
  CHECK(hermitian_eigenvalues(diag) == std::array<double, 4>{-3.0, -1.0, 1.0, 3.0});
}

TEST_CASE("jacobi eigensolver matches the characteristic-polynomial oracle") {
  rng::Sequence seq = test_stream(2);
  for (int i = 0; i < 200; ++i) {
    const Operator4 h = random_hermitian(seq);
    const auto via_jacobi = hermitian_eigenvalues(h);
    const auto via_charpoly = oracles::hermitian_eigenvalues_charpoly(h);
    for (int k = 0; k < 4; ++k)
      CHECK(via_jacobi[static_cast<std::size_t>(k)] ==
            doctest::Approx(via_charpoly[static_cast<std::size_t>(k)]).epsilon(1e-8));
  }
}

TEST_CASE("jacobi eigenpairs satisfy the residual bound") {
  rng::Sequence seq = test_stream(3);
  for (int i = 0; i < 100; ++i) {
    const Operator4 h = random_hermitian(seq);
    const Eigensystem4 es = hermitian_eigensystem(h);
    for (int k = 0; k < 4; ++k) {
      double residual = 0.0;
      for (int r = 0; r < 4; ++r) {
        Complex sum = 0.0;
        for (int c = 0; c < 4; ++c) sum += h(r, c) * es.vectors(c, k);
        sum -= es.values[static_cast<std::size_t>(k)] * es.vectors(r, k);
        residual += std::norm(sum);
      }
      CHECK(std::sqrt(residual) <= 1e-9);
    }
  }
}

TEST_CASE("non-hermitian input is rejected") {
  Operator4 bad;
  bad(0, 1) = Complex{1.0, 0.0};
  bad(1, 0) = Complex{2.0, 0.0};
  CHECK_THROWS_AS((void)hermitian_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("chsh operator spectrum") {
  const double bound = 2.0 * std::sqrt(2.0);

  // Repeated settings collapse to 2 sigma.a (x) sigma.b.
  const SettingsQuad repeated{x_axis(), x_axis(), z_axis(), z_axis()};
  const auto collapsed = hermitian_eigenvalues(chsh_operator(repeated));
  for (double ev : collapsed) CHECK(std::min(std::abs(ev - 2.0), std::abs(ev + 2.0)) <= 1e-12);

  const auto spectrum = hermitian_eigenvalues(chsh_operator(tsirelson_settings()));
  CHECK(spectrum[0] == doctest::Approx(-bound).epsilon(1e-12));
  CHECK(std::abs(spectrum[1]) <= 1e-9);
  CHECK(std::abs(spectrum[2]) <= 1e-9);
  CHECK(spectrum[3] == doctest::Approx(bound).epsilon(1e-12));

  rng::Sequence seq = test_stream(4);
  double ceiling = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SettingsQuad s{sample_unit_vector(seq), sample_unit_vector(seq),
                         sample_unit_vector(seq), sample_unit_vector(seq)};
    const Operator4 op = chsh_operator(s);
    CHECK(op.hermiticity_defect() <= 1e-12);
    const auto ev = hermitian_eigenvalues(op);
    ceiling = std::max({ceiling, std::abs(ev[0]), std::abs(ev[3])});
  }
  CHECK(ceiling <= bound + 1e-9);
}

TEST_CASE("singlet expectation is minus the dot product") {
  CHECK(singlet_expectation(z_axis(), z_axis()) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(singlet_expectation(x_axis(), y_axis())) <= 1e-14);

  rng::Sequence seq = test_stream(5);
  for (int i = 0; i < 300; ++i) {
    const UnitVector3 a = sample_unit_vector(seq);
    const UnitVector3 b = sample_unit_vector(seq);
    CHECK(std::abs(singlet_expectation(a, b) + a.vec().dot(b.vec())) <= 1e-12);
    // The simulated scalar mean hits the same value.
    const CorrelationEstimate est = simulate(a, b, 4, 1);
    CHECK(std::abs(singlet_expectation(a, b) - est.scalar_mean) <= 1e-12);
  }
}

TEST_CASE("the outcome combination never leaves -2, +2") {
  CHECK(boole_combination(1, 1, 1, 1) == 2);
  CHECK(boole_combination(1, 1, 1, -1) == 2);
  CHECK(boole_combination(1, -1, 1, 1) == 2);
  CHECK(boole_combination(-1, 1, 1, 1) == -2);
  const auto values = boole_bound_enumeration();
  REQUIRE(values.size() == 2);
  CHECK(values[0] == -2);
  CHECK(values[1] == 2);
}

TEST_CASE("additivity report at the extremal settings") {
  const AdditivityReport r = eigenvalue_additivity_report(tsirelson_settings());
  REQUIRE(r.combination_set.size() == 2);
  CHECK(r.combination_set[0] == -2);
  CHECK(r.combination_set[1] == 2);
  CHECK(r.max_abs_eigenvalue == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(r.extreme_eigenvalue_in_combination);
  CHECK_FALSE(r.spectrum_intersects_combination);
}

TEST_CASE("additivity report at degenerate settings") {
  // a = a', b = b': the spectrum collapses into the combination set.
  const SettingsQuad repeated{x_axis(), x_axis(), z_axis(), z_axis()};
  const AdditivityReport r = eigenvalue_additivity_report(repeated);
  CHECK(r.spectrum_intersects_combination);
  CHECK(r.extreme_eigenvalue_in_combination);

  // All four settings equal.
  const SettingsQuad parallel{z_axis(), z_axis(), z_axis(), z_axis()};
  CHECK(eigenvalue_additivity_report(parallel).spectrum_intersects_combination);
}

TEST_CASE("expectation linearity is exact on finite samples") {
  const SettingsQuad s = tsirelson_settings();

  // Singlet-model outcomes: A = lambda, B = -lambda for every setting.
  const OutcomeFn a_fn = [](const UnitVector3&, int lambda) { return lambda; };
  const OutcomeFn b_fn = [](const UnitVector3&, int lambda) { return -lambda; };

  std::vector<int> lambdas;
  for (std::uint64_t i = 0; i < 1000; ++i) lambdas.push_back(trial_lambda(6, i));
  const LinearityReport shared = expectation_linearity_check(lambdas, a_fn, b_fn, s);
  CHECK(shared.exact_equal);
  CHECK(shared.lhs_mean == -2.0);  // AB + AB' + A'B - A'B' = -2 on every trial
  CHECK(shared.rhs_mean == -2.0);

  // A single-trial sample.
  const std::vector<int> one{+1};
  CHECK(expectation_linearity_check(one, a_fn, b_fn, s).exact_equal);

  // Arbitrary sign tables.
  rng::Sequence seq = test_stream(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t table = seq.next_u64();
    const OutcomeFn ra = [table, &s](const UnitVector3& v, int lambda) {
      const int slot = (v.x() == s.a_prime.x() ? 2 : 0) + (lambda > 0 ? 0 : 1);
      return ((table >> slot) & 1ull) ? 1 : -1;
    };
    const OutcomeFn rb = [table, &s](const UnitVector3& v, int lambda) {
      const int slot = 4 + (v.y() == s.b_prime.y() ? 2 : 0) + (lambda > 0 ? 0 : 1);
      return ((table >> slot) & 1ull) ? 1 : -1;
    };
    std::vector<int> sample;
    const std::size_t size = 1 + static_cast<std::size_t>(seq.next_u64() % 400);
    for (std::size_t i = 0; i < size; ++i) sample.push_back((seq.next_u64() & 1ull) ? 1 : -1);
    CHECK(expectation_linearity_check(sample, ra, rb, s).exact_equal);
  }

  CHECK_THROWS_AS((void)expectation_linearity_check({}, a_fn, b_fn, s), std::invalid_argument);
}

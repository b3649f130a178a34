#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinorkit/even_algebra.hpp"
#include "spinorkit/multivector.hpp"
#include "spinorkit/rng.hpp"

using namespace spinorkit;

namespace {

rng::Sequence test_stream(std::uint32_t shard) {
  return {2024, rng::stream_id(rng::StreamPurpose::Tests, shard)};
}

bool bitwise_equal(const Multivector16& a, const Multivector16& b) {
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool coords_equal(const KElement& a, const KElement& b) {
  const auto ca = a.coordinates();
  const auto cb = b.coordinates();
  for (int i = 0; i < 8; ++i)
    if (ca[static_cast<std::size_t>(i)] != cb[static_cast<std::size_t>(i)]) return false;
  return true;
}

// The disputed zero-divisor pair: the unit 4-blade minus/plus one.
const KElement kX = KElement::split({-1.0, 1.0});
const KElement kY = KElement::split({1.0, 1.0});

}  // namespace

TEST_CASE("embedding of the unit coordinates") {
  CHECK(bitwise_equal(embed(KElement::scalar(1.0)), Multivector16::scalar(1.0)));
  CHECK(bitwise_equal(embed(KElement::split({0.0, 1.0})), pseudoscalar4()));

  // I3 e1 = e2e3.
  KElement ux;
  ux.qr.u.x = 1.0;
  CHECK(bitwise_equal(embed(ux), Multivector16::basis(0b0110)));
}

TEST_CASE("the orientation scales the non-scalar basis blades") {
  const Multivector16 e12 = Multivector16::basis(0b0011);
  const KElement plus = extract(e12, +1);
  const KElement minus = extract(e12, -1);
  CHECK(plus.qr.u.z == 1.0);
  CHECK(minus.qr.u.z == -1.0);
  CHECK(plus.qr.g == minus.qr.g);

  // Scalars are orientation blind.
  CHECK(extract(Multivector16::scalar(3.0), -1).qr.g == 3.0);
}

TEST_CASE("embed and extract are inverse for both orientations") {
  rng::Sequence seq = test_stream(10);
  for (int i = 0; i < 500; ++i) {
    for (int orient : {+1, -1}) {
      const KElement x = random_k_element(seq, orient);
      const Multivector16 m = embed(x);
      for (unsigned mask = 0; mask < kBladeCount; ++mask)
        if (Blade{mask}.grade() % 2 == 1) CHECK(m[mask] == 0.0);
      CHECK(coords_equal(extract(m, orient), x));
      CHECK(bitwise_equal(embed(extract(m, orient)), m));
    }
  }
}

TEST_CASE("extract rejects odd-grade content") {
  Multivector16 m = Multivector16::basis(0b0001);
  CHECK_THROWS_AS((void)extract(m, +1), std::invalid_argument);
  CHECK_THROWS_AS((void)extract(Multivector16::basis(0b0111), -1), std::invalid_argument);
}

TEST_CASE("k_product requires matching orientations") {
  const KElement a = KElement::scalar(1.0, +1);
  const KElement b = KElement::scalar(1.0, -1);
  CHECK_THROWS_AS((void)k_product(a, b), std::invalid_argument);
}

TEST_CASE("the disputed pair multiplies to zero") {
  const KElement xy = k_product(kX, kY);
  for (double coord : xy.coordinates()) CHECK(coord == 0.0);
}

TEST_CASE("one is the identity of the pair algebra") {
  rng::Sequence seq = test_stream(11);
  for (int i = 0; i < 100; ++i) {
    const KElement x = random_k_element(seq);
    CHECK(coords_equal(k_product(KElement::scalar(1.0), x), x));
    CHECK(coords_equal(k_product(x, KElement::scalar(1.0)), x));
  }
}

TEST_CASE("pair products agree with the full-algebra geometric product") {
  rng::Sequence seq = test_stream(12);
  for (int i = 0; i < 1000; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    CHECK(approx_equal(embed(k_product(x, y)), embed(x) * embed(y)));
  }
}

TEST_CASE("pair products are associative") {
  rng::Sequence seq = test_stream(13);
  for (int i = 0; i < 500; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    const KElement z = random_k_element(seq);
    CHECK(approx_equal(k_product(k_product(x, y), z), k_product(x, k_product(y, z))));
  }
}

TEST_CASE("quadratic form closed form") {
  const Hyperbolic qx = quadratic_form(kX);
  CHECK(qx.c == 2.0);
  CHECK(qx.d == -2.0);

  const Hyperbolic q1 = quadratic_form(KElement::scalar(1.0));
  CHECK(q1.c == 1.0);
  CHECK(q1.d == 0.0);

  rng::Sequence seq = test_stream(14);
  for (int i = 0; i < 500; ++i) {
    const KElement x = random_k_element(seq);
    const Hyperbolic q = quadratic_form(x);

    // Generic closed form in the coordinates.
    const double c = x.qr.g * x.qr.g + x.qr.u.dot(x.qr.u) + x.qd.g * x.qd.g +
                     x.qd.u.dot(x.qd.u);
    const double d = 2.0 * x.qr.g * x.qd.g + 2.0 * x.qr.u.dot(x.qd.u);
    CHECK(q.c == doctest::Approx(c).epsilon(1e-14));
    CHECK(q.d == doctest::Approx(d).epsilon(1e-14));

    // Same value through X reverse(X) in the pair algebra; the bivector
    // blocks cancel identically.
    const KElement xxd = k_product(x, k_reverse(x));
    CHECK(xxd.qr.u.x == 0.0);
    CHECK(xxd.qr.u.y == 0.0);
    CHECK(xxd.qr.u.z == 0.0);
    CHECK(xxd.qd.u.x == 0.0);
    CHECK(xxd.qd.u.y == 0.0);
    CHECK(xxd.qd.u.z == 0.0);
    CHECK(xxd.qr.g == q.c);
    CHECK(xxd.qd.g == q.d);

    // And through the full algebra.
    const Multivector16 m = embed(x) * embed(x).reversed();
    CHECK(m.scalar_part() == doctest::Approx(q.c).epsilon(1e-12));
    CHECK(m[0b1111] == doctest::Approx(q.d).epsilon(1e-12));
  }
}

TEST_CASE("hyperbolic square root: principal cases") {
  const Hyperbolic a = hyperbolic_sqrt({2.0, -2.0});
  CHECK(a.c == 1.0);
  CHECK(a.d == -1.0);

  const Hyperbolic b = hyperbolic_sqrt({1.0, 1.0});
  CHECK(b.c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(b.d == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const Hyperbolic c = hyperbolic_sqrt({4.0, 0.0});
  CHECK(c.c == 2.0);
  CHECK(c.d == 0.0);
}

TEST_CASE("hyperbolic square root is principal and involutive on the cone") {
  rng::Sequence seq = test_stream(15);
  for (int i = 0; i < 10000; ++i) {
    const Hyperbolic q = quadratic_form(random_k_element(seq));
    const Hyperbolic root = hyperbolic_sqrt(q);
    CHECK(root.c >= 0.0);
    CHECK(root.c >= std::abs(root.d));
    const Hyperbolic back = root * root;
    const double scale = std::max(1.0, std::abs(q.c));
    CHECK(std::abs(back.c - q.c) <= 1e-10 * scale);
    CHECK(std::abs(back.d - q.d) <= 1e-10 * scale);
  }
}

TEST_CASE("hyperbolic square root rejects values outside the cone") {
  CHECK_THROWS_AS((void)hyperbolic_sqrt({1.0, 2.0}), std::domain_error);
  CHECK_THROWS_AS((void)hyperbolic_sqrt({-1.0, 0.0}), std::domain_error);
  // Zero divisors sit on the boundary and are fine.
  const Hyperbolic edge = hyperbolic_sqrt({1.0, 1.0});
  CHECK(edge.c == edge.d);
  const Hyperbolic back = hyperbolic_sqrt({2.0, 2.0}) * hyperbolic_sqrt({2.0, 2.0});
  CHECK(back.c == 2.0);
  CHECK(back.d == 2.0);
}

TEST_CASE("geometric norm of the disputed pair") {
  const Hyperbolic nx = geometric_norm(kX);
  CHECK(nx.c == 1.0);
  CHECK(nx.d == -1.0);
  const Hyperbolic ny = geometric_norm(kY);
  CHECK(ny.c == 1.0);
  CHECK(ny.d == 1.0);
  const Hyperbolic zero = geometric_norm(KElement{});
  CHECK(zero.c == 0.0);
  CHECK(zero.d == 0.0);
}

TEST_CASE("orthogonality defect") {
  KElement mixed;  // q_r = 1, q_d = I3 e1
  mixed.qr.g = 1.0;
  mixed.qd.u.x = 1.0;
  CHECK(orthogonality_defect(mixed) == 0.0);
  CHECK(orthogonality_defect(kX) == -2.0);

  KElement pure;  // q_d = 0
  pure.qr = {0.3, {1.0, -2.0, 0.5}};
  CHECK(orthogonality_defect(pure) == 0.0);
}

TEST_CASE("scalar norm") {
  CHECK(scalar_norm(kX) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(scalar_norm(KElement{}) == 0.0);

  rng::Sequence seq = test_stream(16);
  for (int i = 0; i < 500; ++i) {
    const KElement x = random_k_element(seq);
    // Defined as the root of the scalar coefficient, bit for bit.
    CHECK(scalar_norm(x) == std::sqrt(quadratic_form(x).c));
    double sum = 0.0;
    for (double coord : x.coordinates()) sum += coord * coord;
    CHECK(scalar_norm(x) * scalar_norm(x) == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("composition law on random pairs and on the disputed pair") {
  const CompositionReport disputed = verify_composition(kX, kY);
  CHECK(disputed.lhs.c == 0.0);
  CHECK(disputed.lhs.d == 0.0);
  CHECK(disputed.rhs.c == 0.0);
  CHECK(disputed.rhs.d == 0.0);
  CHECK(disputed.equal);

  const CompositionReport unit = verify_composition(KElement::scalar(1.0), KElement::scalar(1.0));
  CHECK(unit.lhs.c == 1.0);
  CHECK(unit.rhs.c == 1.0);
  CHECK(unit.equal);

  rng::Sequence seq = test_stream(17);
  for (int i = 0; i < 2000; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    CHECK(verify_composition(x, y).equal);
  }
}

TEST_CASE("norm squares compose as hyperbolic numbers") {
  rng::Sequence seq = test_stream(18);
  for (int i = 0; i < 2000; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    const Hyperbolic lhs = quadratic_form(k_product(x, y));
    const Hyperbolic rhs = quadratic_form(x) * quadratic_form(y);
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

TEST_CASE("positive definiteness and light-cone containment") {
  rng::Sequence seq = test_stream(19);
  for (int i = 0; i < 2000; ++i) {
    const KElement x = random_k_element(seq);
    const Hyperbolic q = quadratic_form(x);
    CHECK(scalar_norm(x) > 0.0);
    CHECK(q.c > 0.0);
    CHECK(q.c >= std::abs(q.d) - 1e-12 * q.c);
  }
  CHECK(scalar_norm(KElement{}) == 0.0);
  CHECK(quadratic_form(KElement{}).c == 0.0);
  CHECK(quadratic_form(KElement{}).d == 0.0);
}

TEST_CASE("scalar norms compose on the zero-defect set") {
  rng::Sequence seq = test_stream(20);
  for (int i = 0; i < 2000; ++i) {
    const KElement x = random_zero_defect_element(seq);
    const KElement y = random_zero_defect_element(seq);
    CHECK(std::abs(orthogonality_defect(x)) <= 1e-12 * quadratic_form(x).c);
    const KElement xy = k_product(x, y);
    const double lhs = scalar_norm(xy);
    const double rhs = scalar_norm(x) * scalar_norm(y);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    // The zero-defect set is closed under products: the form of the product
    // is the hyperbolic product of two real forms.
    CHECK(std::abs(orthogonality_defect(xy)) <= 1e-10 * std::max(1.0, quadratic_form(xy).c));
  }
}

TEST_CASE("the two norms diverge on the disputed pair") {
  // Geometric route: both sides vanish.
  const CompositionReport geometric = verify_composition(kX, kY);
  CHECK(geometric.equal);
  CHECK(geometric.lhs.c == 0.0);
  // Scalar route: sqrt(2) * sqrt(2) = 2 against 0.
  const double scalar_sides_gap = scalar_norm(kX) * scalar_norm(kY) - scalar_norm(k_product(kX, kY));
  CHECK(scalar_sides_gap == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("seven-sphere membership") {
  KElement unit_quat;
  unit_quat.qr = {0.5, {0.5, 0.5, 0.5}};
  CHECK(is_on_seven_sphere(unit_quat, 1.0, 1e-12));

  KElement mixed;
  mixed.qr.g = 1.0;
  mixed.qd.u.x = 1.0;
  CHECK(is_on_seven_sphere(mixed, std::sqrt(2.0), 1e-12));

  const KElement split_unit = KElement::split({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  CHECK_FALSE(is_on_seven_sphere(split_unit, 1.0, 1e-12));
  CHECK(orthogonality_defect(split_unit) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS((void)is_on_seven_sphere(unit_quat, 0.0, 1e-12), std::invalid_argument);
}

TEST_CASE("orientation change of basis") {
  const OrientationBasisCheck check = orientation_change_of_basis();
  CHECK(check.diagonal[0] == 1.0);
  for (int i = 1; i < 8; ++i) CHECK(check.diagonal[static_cast<std::size_t>(i)] == -1.0);
  CHECK(check.max_off_diagonal == 0.0);
  CHECK(check.determinant == -1.0);
  CHECK(orientation_determinant() == -1.0);

  // Applying the change of basis twice is the identity.
  double det_squared = 1.0;
  for (double d : check.diagonal) det_squared *= d * d;
  CHECK(det_squared == 1.0);
  CHECK(check.determinant * check.determinant == 1.0);
}

#pragma once

#include <array>

#include "spinorkit/multivector.hpp"
#include "spinorkit/rng.hpp"
#include "spinorkit/vec3.hpp"

namespace spinorkit {

// Quaternion in bivector form q = g + I3*u, where I3 = e1e2e3. Because
// (I3 a)(I3 b) = -(a.b) - I3 (a x b), the induced product carries the
// opposite cross-term sign from Hamilton's convention; tests pin it against
// the multivector product.
struct Quaternion {
  double g = 0.0;
  Vec3 u{};

  Quaternion conjugate() const { return {g, -u}; }
  double squared_norm() const { return g * g + u.dot(u); }

  Quaternion operator+(const Quaternion& o) const { return {g + o.g, u + o.u}; }
  Quaternion operator-(const Quaternion& o) const { return {g - o.g, u - o.u}; }
  Quaternion operator*(const Quaternion& o) const {
    return {g * o.g - u.dot(o.u), g * o.u + o.g * u - u.cross(o.u)};
  }
};

// Split-complex (hyperbolic) value c + d*E, where E is the unit 4-blade with
// E^2 = +1. Commutative; has zero divisors on the lines |c| = |d|.
struct Hyperbolic {
  double c = 0.0;
  double d = 0.0;

  Hyperbolic operator+(const Hyperbolic& o) const { return {c + o.c, d + o.d}; }
  Hyperbolic operator-(const Hyperbolic& o) const { return {c - o.c, d - o.d}; }
  Hyperbolic operator*(const Hyperbolic& o) const {
    return {c * o.c + d * o.d, c * o.d + d * o.c};
  }
};

bool approx_equal(const Hyperbolic& a, const Hyperbolic& b, double rel = kRelTol,
                  double abs = kAbsTol);

// Principal square root of an in-cone hyperbolic value (c >= |d|): the root
// p + q*E with p = (sqrt(c+d)+sqrt(c-d))/2, q = (sqrt(c+d)-sqrt(c-d))/2, so
// p >= |q| >= 0 and (p + q*E)^2 = c + d*E. Zero divisors (|c| = |d|) are
// accepted; values outside the cone throw std::domain_error.
Hyperbolic hyperbolic_sqrt(const Hyperbolic& h);

// Element of the 8-dimensional even subalgebra of Cl(4,0), written as a
// quaternion pair X = q_r + q_d*E, tagged with an orientation (+1 or -1).
//
// The orientation selects which of the two oppositely oriented bases
// embed/extract translate to (the non-scalar basis blades are scaled by it)
// and which product order the singlet simulation uses. Arithmetic on the
// (q_r, q_d) pair itself is orientation-independent; mixing orientations in
// one product is a caller error.
struct KElement {
  Quaternion qr{};
  Quaternion qd{};
  int orientation = +1;

  KElement() = default;
  KElement(const Quaternion& r, const Quaternion& d, int orient);

  static KElement scalar(double s, int orient = +1) {
    return {{s, {}}, {}, orient};
  }
  // c + d*E as a K-element.
  static KElement split(const Hyperbolic& h, int orient = +1) {
    return {{h.c, {}}, {h.d, {}}, orient};
  }

  std::array<double, 8> coordinates() const {
    return {qr.g, qr.u.x, qr.u.y, qr.u.z, qd.g, qd.u.x, qd.u.y, qd.u.z};
  }
};

bool approx_equal(const KElement& a, const KElement& b, double rel = kRelTol,
                  double abs = kAbsTol);

// Reversion: conjugates both quaternions and fixes E.
KElement k_reverse(const KElement& x);

// Product in the even subalgebra,
//   (q_r1 + q_d1 E)(q_r2 + q_d2 E)
//     = (q_r1 q_r2 + q_d1 q_d2) + (q_r1 q_d2 + q_d1 q_r2) E.
// Orientations must match.
KElement k_product(const KElement& x, const KElement& y);

// Writes x into the full algebra over the orientation-scaled basis; the
// image has even-grade support only.
Multivector16 embed(const KElement& x);

// Inverse of embed for the given orientation. Rejects input whose odd-grade
// coefficients exceed tol * max(1, |m|).
KElement extract(const Multivector16& m, int orientation, double tol = 1e-12);

// X X^dagger = (g^2 + u.u + h^2 + v.v) + (2gh + 2u.v) E. Always lands in the
// closed future cone c >= |d| (Cauchy-Schwarz).
Hyperbolic quadratic_form(const KElement& x);

// sqrt(X X^dagger) evaluated with geometric products throughout; hyperbolic
// valued in general.
Hyperbolic geometric_norm(const KElement& x);

// Coefficient of E in the quadratic form, 2gh + 2u.v. Zero exactly when the
// normalization condition q_r q_d^dagger + q_d q_r^dagger = 0 holds.
double orthogonality_defect(const KElement& x);

// Pythagorean 8-dimensional length sqrt(g^2 + u.u + h^2 + v.v), reported for
// every element regardless of its defect; pair with orthogonality_defect to
// see whether the scalar-norm reduction condition holds.
double scalar_norm(const KElement& x);

struct CompositionReport {
  Hyperbolic lhs;  // geometric_norm(XY)
  Hyperbolic rhs;  // geometric_norm(X) * geometric_norm(Y)
  bool equal = false;
  double max_delta = 0.0;
};

// Checks the composition law ||XY|| = ||X|| ||Y|| with hyperbolic values on
// both sides; equality within rel_tol relative to the larger side.
CompositionReport verify_composition(const KElement& x, const KElement& y,
                                     double rel_tol = 1e-10);

// Membership in the 7-sphere of zero-defect elements with the given radius.
bool is_on_seven_sphere(const KElement& x, double radius, double tol);

struct OrientationBasisCheck {
  std::array<double, 8> diagonal{};
  double max_off_diagonal = 0.0;
  double determinant = 0.0;
};

// Builds the 8x8 change-of-basis matrix between the two oriented bases of
// the even subalgebra and reports its diagonal and determinant. The scalar
// basis element is shared; the seven others flip, so the determinant is -1.
OrientationBasisCheck orientation_change_of_basis();

double orientation_determinant();

// Standard-normal sampling of the 8 coordinates.
KElement random_k_element(rng::Sequence& seq, int orientation = +1);

// Samples an element with zero orthogonality defect: q_r is drawn freely and
// the (h, v) block is projected against (g, u).
KElement random_zero_defect_element(rng::Sequence& seq, int orientation = +1);

}  // namespace spinorkit

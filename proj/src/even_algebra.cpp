#include "spinorkit/even_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorkit {

namespace {

// Blade masks of the even subalgebra in coordinate order: the scalar, the
// three spatial bivectors carrying u, the unit 4-blade carrying h, and the
// three mixed bivectors carrying v.
constexpr unsigned kScalarMask = 0b0000;
constexpr unsigned kE12 = 0b0011;
constexpr unsigned kE13 = 0b0101;
constexpr unsigned kE23 = 0b0110;
constexpr unsigned kE14 = 0b1001;
constexpr unsigned kE24 = 0b1010;
constexpr unsigned kE34 = 0b1100;
constexpr unsigned kE1234 = 0b1111;

double in_cone_sqrt(double s, double scale) {
  if (s < 0.0) {
    // Rounded quadratic forms can land a few ulp below the cone boundary;
    // anything past the kit-wide relative tolerance is a domain violation.
    if (s < -kRelTol * scale)
      throw std::domain_error("hyperbolic_sqrt: value outside the future cone (c < |d|)");
    s = 0.0;
  }
  return std::sqrt(s);
}

int checked_orientation(int orient) {
  if (orient != 1 && orient != -1)
    throw std::invalid_argument("orientation must be +1 or -1");
  return orient;
}

}  // namespace

bool approx_equal(const Hyperbolic& a, const Hyperbolic& b, double rel, double abs) {
  const double scale =
      std::max(std::max(std::abs(a.c), std::abs(a.d)), std::max(std::abs(b.c), std::abs(b.d)));
  const double bound = std::max(abs, rel * scale);
  return std::abs(a.c - b.c) <= bound && std::abs(a.d - b.d) <= bound;
}

Hyperbolic hyperbolic_sqrt(const Hyperbolic& h) {
  const double scale = std::max({std::abs(h.c), std::abs(h.d), 1.0});
  const double rp = in_cone_sqrt(h.c + h.d, scale);
  const double rm = in_cone_sqrt(h.c - h.d, scale);
  return {0.5 * (rp + rm), 0.5 * (rp - rm)};
}

KElement::KElement(const Quaternion& r, const Quaternion& d, int orient)
    : qr(r), qd(d), orientation(checked_orientation(orient)) {}

bool approx_equal(const KElement& a, const KElement& b, double rel, double abs) {
  if (a.orientation != b.orientation) return false;
  const auto ca = a.coordinates();
  const auto cb = b.coordinates();
  double scale = 0.0;
  for (int i = 0; i < 8; ++i)
    scale = std::max({scale, std::abs(ca[static_cast<std::size_t>(i)]),
                      std::abs(cb[static_cast<std::size_t>(i)])});
  const double bound = std::max(abs, rel * scale);
  for (int i = 0; i < 8; ++i)
    if (std::abs(ca[static_cast<std::size_t>(i)] - cb[static_cast<std::size_t>(i)]) > bound)
      return false;
  return true;
}

KElement k_reverse(const KElement& x) {
  return {x.qr.conjugate(), x.qd.conjugate(), x.orientation};
}

KElement k_product(const KElement& x, const KElement& y) {
  if (x.orientation != y.orientation)
    throw std::invalid_argument("k_product: mixed orientations");
  return {x.qr * y.qr + x.qd * y.qd, x.qr * y.qd + x.qd * y.qr, x.orientation};
}

Multivector16 embed(const KElement& x) {
  const double w = static_cast<double>(checked_orientation(x.orientation));
  Multivector16 m;
  m[kScalarMask] = x.qr.g;
  // I3 u = u_x e2e3 + u_y e3e1 + u_z e1e2, with e3e1 = -e1e3 canonically.
  m[kE23] = w * x.qr.u.x;
  m[kE13] = -w * x.qr.u.y;
  m[kE12] = w * x.qr.u.z;
  m[kE1234] = w * x.qd.g;
  // (I3 v) e1e2e3e4 = -(v_x e1e4 + v_y e2e4 + v_z e3e4).
  m[kE14] = -w * x.qd.u.x;
  m[kE24] = -w * x.qd.u.y;
  m[kE34] = -w * x.qd.u.z;
  return m;
}

KElement extract(const Multivector16& m, int orientation, double tol) {
  const double w = static_cast<double>(checked_orientation(orientation));
  const double bound = tol * std::max(1.0, m.max_abs());
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    if ((Blade{mask}.grade() & 1) && std::abs(m[mask]) > bound)
      throw std::invalid_argument("extract: odd-grade content above tolerance");
  }
  KElement x;
  x.orientation = orientation;
  x.qr.g = m[kScalarMask];
  x.qr.u = {w * m[kE23], -w * m[kE13], w * m[kE12]};
  x.qd.g = w * m[kE1234];
  x.qd.u = {-w * m[kE14], -w * m[kE24], -w * m[kE34]};
  return x;
}

Hyperbolic quadratic_form(const KElement& x) {
  return {x.qr.squared_norm() + x.qd.squared_norm(),
          2.0 * (x.qr.g * x.qd.g + x.qr.u.dot(x.qd.u))};
}

Hyperbolic geometric_norm(const KElement& x) { return hyperbolic_sqrt(quadratic_form(x)); }

double orthogonality_defect(const KElement& x) { return quadratic_form(x).d; }

double scalar_norm(const KElement& x) { return std::sqrt(quadratic_form(x).c); }

CompositionReport verify_composition(const KElement& x, const KElement& y,
                                     double rel_tol) {
  CompositionReport r;
  r.lhs = geometric_norm(k_product(x, y));
  r.rhs = geometric_norm(x) * geometric_norm(y);
  r.max_delta = std::max(std::abs(r.lhs.c - r.rhs.c), std::abs(r.lhs.d - r.rhs.d));
  const double scale = std::max(
      {std::abs(r.lhs.c), std::abs(r.lhs.d), std::abs(r.rhs.c), std::abs(r.rhs.d)});
  r.equal = r.max_delta <= std::max(kAbsTol, rel_tol * scale);
  return r;
}

bool is_on_seven_sphere(const KElement& x, double radius, double tol) {
  if (radius <= 0.0) throw std::invalid_argument("is_on_seven_sphere: radius must be positive");
  return std::abs(orthogonality_defect(x)) <= tol &&
         std::abs(scalar_norm(x) - radius) <= tol;
}

OrientationBasisCheck orientation_change_of_basis() {
  // The eight basis elements of the oriented subalgebra, as multivectors.
  auto basis_for = [](int orient) {
    std::array<Multivector16, 8> basis;
    const auto coord_element = [&](int index) {
      KElement e;
      e.orientation = orient;
      switch (index) {
        case 0: e.qr.g = 1.0; break;
        case 1: e.qr.u.x = 1.0; break;
        case 2: e.qr.u.y = 1.0; break;
        case 3: e.qr.u.z = 1.0; break;
        case 4: e.qd.g = 1.0; break;
        case 5: e.qd.u.x = 1.0; break;
        case 6: e.qd.u.y = 1.0; break;
        case 7: e.qd.u.z = 1.0; break;
        default: break;
      }
      return e;
    };
    for (int i = 0; i < 8; ++i) basis[static_cast<std::size_t>(i)] = embed(coord_element(i));
    return basis;
  };

  const auto plus = basis_for(+1);
  const auto minus = basis_for(-1);

  // Each basis element is a single blade, so expressing the minus basis over
  // the plus basis reduces to coefficient ratios blade by blade.
  std::array<std::array<double, 8>, 8> omega{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double num = 0.0, den = 0.0;
      for (unsigned mask = 0; mask < kBladeCount; ++mask) {
        num += minus[static_cast<std::size_t>(i)][mask] * plus[static_cast<std::size_t>(j)][mask];
        den += plus[static_cast<std::size_t>(j)][mask] * plus[static_cast<std::size_t>(j)][mask];
      }
      omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / den;
    }
  }

  OrientationBasisCheck check;
  for (int i = 0; i < 8; ++i) {
    check.diagonal[static_cast<std::size_t>(i)] =
        omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    for (int j = 0; j < 8; ++j)
      if (i != j)
        check.max_off_diagonal =
            std::max(check.max_off_diagonal,
                     std::abs(omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }

  // Determinant by Gaussian elimination with partial pivoting.
  auto a = omega;
  double det = 1.0;
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 8; ++row)
      if (std::abs(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
        pivot = row;
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const double p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= p;
    if (p == 0.0) return check;
    for (int row = col + 1; row < 8; ++row) {
      const double f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / p;
      for (int k = col; k < 8; ++k)
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
    }
  }
  check.determinant = det;
  return check;
}

double orientation_determinant() { return orientation_change_of_basis().determinant; }

KElement random_k_element(rng::Sequence& seq, int orientation) {
  KElement x;
  x.orientation = checked_orientation(orientation);
  x.qr.g = seq.next_gaussian();
  x.qr.u = {seq.next_gaussian(), seq.next_gaussian(), seq.next_gaussian()};
  x.qd.g = seq.next_gaussian();
  x.qd.u = {seq.next_gaussian(), seq.next_gaussian(), seq.next_gaussian()};
  return x;
}

KElement random_zero_defect_element(rng::Sequence& seq, int orientation) {
  KElement x = random_k_element(seq, orientation);
  const double rr = x.qr.squared_norm();
  if (rr == 0.0) return random_zero_defect_element(seq, orientation);
  // Project the (h, v) block against (g, u) so that gh + u.v = 0.
  const double overlap = (x.qr.g * x.qd.g + x.qr.u.dot(x.qd.u)) / rr;
  x.qd.g -= overlap * x.qr.g;
  x.qd.u = x.qd.u - overlap * x.qr.u;
  return x;
}

}  // namespace spinorkit

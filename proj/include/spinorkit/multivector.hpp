#pragma once

#include <array>
#include <bit>
#include <cstddef>

namespace spinorkit {

inline constexpr unsigned kBladeCount = 16;

// Default comparison tolerances for multivector arithmetic: every operation
// here is a short signed sum of products, so error growth is negligible.
inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsTol = 1e-15;

// Basis blade of Cl(4,0) over generators e1..e4, encoded as a bitmask with
// bit i-1 <-> e_i. All four generators square to +1. The canonical sign
// convention is ascending generator order within a blade.
struct Blade {
  unsigned mask = 0;
  constexpr int grade() const { return std::popcount(mask); }
};

// Number of transpositions needed to merge blade a in front of blade b into
// ascending order: pairs (i in a, j in b) with i > j.
constexpr int blade_reorder_swaps(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return swaps;
}

// Sign of the geometric product of two basis blades. Repeated generators
// annihilate with square +1, so the sign is the transposition parity alone;
// the result blade is a ^ b.
int blade_product_sign(unsigned a, unsigned b) noexcept;

// Full element of the 16-dimensional real Clifford algebra Cl(4,0),
// one coefficient per basis blade, indexed by blade mask.
class Multivector16 {
 public:
  Multivector16() { c_.fill(0.0); }

  static Multivector16 scalar(double s) {
    Multivector16 m;
    m.c_[0] = s;
    return m;
  }

  // Unit basis blade for the given mask.
  static Multivector16 basis(unsigned mask);

  double operator[](unsigned mask) const { return c_[mask]; }
  double& operator[](unsigned mask) { return c_[mask]; }

  const std::array<double, kBladeCount>& coefficients() const { return c_; }

  Multivector16 operator+(const Multivector16& o) const;
  Multivector16 operator-(const Multivector16& o) const;
  Multivector16 operator-() const;
  Multivector16 operator*(double s) const;
  Multivector16& operator+=(const Multivector16& o);

  // Geometric product.
  Multivector16 operator*(const Multivector16& o) const;

  // Reversion: grade k picks up (-1)^(k(k-1)/2).
  Multivector16 reversed() const;

  // Grade projection; k must lie in 0..4.
  Multivector16 grade(int k) const;

  double scalar_part() const { return c_[0]; }

  double max_abs() const;

 private:
  std::array<double, kBladeCount> c_;
};

inline Multivector16 operator*(double s, const Multivector16& m) { return m * s; }

// e1 e2 e3, the unit 3-blade of the spatial generators; squares to -1.
Multivector16 pseudoscalar3();

// e1 e2 e3 e4, the unit 4-blade of the full algebra; squares to +1, is fixed
// by reversion, and commutes with every even-grade element.
Multivector16 pseudoscalar4();

// Componentwise comparison with relative tolerance and absolute floor.
bool approx_equal(const Multivector16& a, const Multivector16& b,
                  double rel = kRelTol, double abs = kAbsTol);

}  // namespace spinorkit

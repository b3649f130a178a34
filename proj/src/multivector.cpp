#include "spinorkit/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinorkit {

namespace {

// Sign and result-blade tables, computed once at startup from the parity
// rule rather than transcribed.
struct ProductTable {
  std::array<std::array<signed char, kBladeCount>, kBladeCount> sign;

  ProductTable() {
    for (unsigned a = 0; a < kBladeCount; ++a)
      for (unsigned b = 0; b < kBladeCount; ++b)
        sign[a][b] = (blade_reorder_swaps(a, b) & 1) ? -1 : 1;
  }
};

const ProductTable& table() {
  static const ProductTable t;
  return t;
}

constexpr std::array<signed char, 5> kReverseSign = {1, 1, -1, -1, 1};

}  // namespace

int blade_product_sign(unsigned a, unsigned b) noexcept {
  return table().sign[a & 15u][b & 15u];
}

Multivector16 Multivector16::basis(unsigned mask) {
  if (mask >= kBladeCount) throw std::out_of_range("blade mask out of range");
  Multivector16 m;
  m.c_[mask] = 1.0;
  return m;
}

Multivector16 Multivector16::operator+(const Multivector16& o) const {
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Multivector16 Multivector16::operator-(const Multivector16& o) const {
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Multivector16 Multivector16::operator-() const {
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i) r.c_[i] = -c_[i];
  return r;
}

Multivector16 Multivector16::operator*(double s) const {
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] * s;
  return r;
}

Multivector16& Multivector16::operator+=(const Multivector16& o) {
  for (unsigned i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector16 Multivector16::operator*(const Multivector16& o) const {
  const ProductTable& t = table();
  Multivector16 r;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    const double ca = c_[a];
    if (ca == 0.0) continue;
    for (unsigned b = 0; b < kBladeCount; ++b) {
      const double cb = o.c_[b];
      if (cb == 0.0) continue;
      r.c_[a ^ b] += static_cast<double>(t.sign[a][b]) * ca * cb;
    }
  }
  return r;
}

Multivector16 Multivector16::reversed() const {
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    r.c_[i] = c_[i] * kReverseSign[static_cast<std::size_t>(std::popcount(i))];
  return r;
}

Multivector16 Multivector16::grade(int k) const {
  if (k < 0 || k > 4) throw std::out_of_range("grade must lie in 0..4");
  Multivector16 r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (std::popcount(i) == k) r.c_[i] = c_[i];
  return r;
}

double Multivector16::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Multivector16 pseudoscalar3() { return Multivector16::basis(0b0111); }

Multivector16 pseudoscalar4() { return Multivector16::basis(0b1111); }

bool approx_equal(const Multivector16& a, const Multivector16& b, double rel,
                  double abs) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  const double bound = std::max(abs, rel * scale);
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (std::abs(a[i] - b[i]) > bound) return false;
  return true;
}

}  // namespace spinorkit

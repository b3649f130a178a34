#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "spinorkit/bell.hpp"
#include "spinorkit/vec3.hpp"

namespace spinorkit {

using Complex = std::complex<double>;

struct Matrix2c {
  std::array<Complex, 4> m{};  // row major

  Complex operator()(int r, int c) const {
    return m[static_cast<std::size_t>(2 * r + c)];
  }
  Complex& operator()(int r, int c) {
    return m[static_cast<std::size_t>(2 * r + c)];
  }

  Matrix2c operator+(const Matrix2c& o) const;
  Matrix2c operator*(const Matrix2c& o) const;
  Matrix2c adjoint() const;
  Complex trace() const { return m[0] + m[3]; }
};

// 4x4 complex matrix; the home of the four-term CHSH operator.
struct Operator4 {
  std::array<Complex, 16> m{};  // row major

  Complex operator()(int r, int c) const {
    return m[static_cast<std::size_t>(4 * r + c)];
  }
  Complex& operator()(int r, int c) {
    return m[static_cast<std::size_t>(4 * r + c)];
  }

  static Operator4 identity();
  static Operator4 kron(const Matrix2c& a, const Matrix2c& b);

  Operator4 operator+(const Operator4& o) const;
  Operator4 operator-(const Operator4& o) const;
  Operator4 operator*(const Operator4& o) const;
  Operator4 operator*(double s) const;
  Operator4 adjoint() const;

  double max_abs() const;
  // Largest deviation from self-adjointness.
  double hermiticity_defect() const;
};

// sigma . a = a_x sigma_x + a_y sigma_y + a_z sigma_z; Hermitian, traceless,
// squares to the identity.
Matrix2c pauli_dot(const UnitVector3& a);

// Eigenvalues of sigma.a + sigma.b, ascending. Closed-form 2x2 solve; they
// equal -|a+b| and +|a+b|, not sums of the +-1 eigenvalues of the terms.
std::array<double, 2> spin_sum_spectrum(const UnitVector3& a, const UnitVector3& b);

struct SettingsQuad {
  UnitVector3 a;
  UnitVector3 a_prime;
  UnitVector3 b;
  UnitVector3 b_prime;
};

// The settings that extremize the CHSH operator: a = x, a' = y,
// b = (x+y)/sqrt 2, b' = (x-y)/sqrt 2.
SettingsQuad tsirelson_settings();

// sigma.a (x) sigma.b + sigma.a (x) sigma.b' + sigma.a' (x) sigma.b
//   - sigma.a' (x) sigma.b'.
Operator4 chsh_operator(const SettingsQuad& s);

struct Eigensystem4 {
  std::array<double, 4> values{};  // ascending
  Operator4 vectors;               // columns are the matching eigenvectors
};

// Cyclic complex Jacobi diagonalization of a Hermitian 4x4 matrix.
// Off-diagonal Frobenius threshold 1e-12 relative, at most 100 sweeps.
// Non-Hermitian input (defect above 1e-12 relative) is rejected.
Eigensystem4 hermitian_eigensystem(const Operator4& m);

std::array<double, 4> hermitian_eigenvalues(const Operator4& m);

// Expectation of sigma.a (x) sigma.b in the two-particle singlet state;
// equals -a.b.
double singlet_expectation(const UnitVector3& a, const UnitVector3& b);

// The four-term outcome combination A B + A B' + A' B - A' B' over signs.
int boole_combination(int a_out, int a_prime_out, int b_out, int b_prime_out);

// Exhaustive values of the combination over all 16 sign assignments;
// returns the distinct values, ascending. Always exactly {-2, +2}.
std::vector<int> boole_bound_enumeration();

struct AdditivityReport {
  std::array<double, 4> spectrum{};          // of the CHSH operator, ascending
  std::array<int, 16> combination_values{};  // one per sign assignment
  std::vector<int> combination_set;          // distinct values, ascending
  bool spectrum_intersects_combination = false;  // any eigenvalue in the set
  bool extreme_eigenvalue_in_combination = false;
  double max_abs_eigenvalue = 0.0;
};

// Juxtaposes the spectrum of the operator sum with the values the summed
// per-outcome combination can take. For generic settings the extreme
// eigenvalues (up to 2 sqrt 2 in magnitude) lie outside {-2, +2}.
AdditivityReport eigenvalue_additivity_report(const SettingsQuad& s,
                                              double tol = 1e-9);

// Outcome function of one side: (setting, lambda) -> +-1.
using OutcomeFn = std::function<int(const UnitVector3&, int)>;

struct LinearityReport {
  long long lhs_sum = 0;  // sum of the four per-setting outcome-product sums
  long long rhs_sum = 0;  // sum of the per-trial four-term combinations
  double lhs_mean = 0.0;
  double rhs_mean = 0.0;
  bool exact_equal = false;
  std::size_t n = 0;
};

// Evaluates both sides of the expectation-additivity identity as finite
// averages over one shared lambda sample. Both sides reduce to the same
// integer sum, so equality is exact, not approximate.
LinearityReport expectation_linearity_check(std::span<const int> lambdas,
                                            const OutcomeFn& a_outcome,
                                            const OutcomeFn& b_outcome,
                                            const SettingsQuad& s);

}  // namespace spinorkit

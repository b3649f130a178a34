#include "spinorkit/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinorkit {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Matrix2c Matrix2c::operator+(const Matrix2c& o) const {
  Matrix2c r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Matrix2c Matrix2c::operator*(const Matrix2c& o) const {
  Matrix2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
  return r;
}

Matrix2c Matrix2c::adjoint() const {
  Matrix2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Operator4 Operator4::identity() {
  Operator4 r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Operator4 Operator4::kron(const Matrix2c& a, const Matrix2c& b) {
  Operator4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Operator4 Operator4::operator+(const Operator4& o) const {
  Operator4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Operator4 Operator4::operator-(const Operator4& o) const {
  Operator4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Operator4 Operator4::operator*(const Operator4& o) const {
  Operator4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Operator4 Operator4::operator*(double s) const {
  Operator4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] * s;
  return r;
}

Operator4 Operator4::adjoint() const {
  Operator4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double Operator4::max_abs() const {
  double v = 0.0;
  for (const Complex& c : m) v = std::max(v, std::abs(c));
  return v;
}

double Operator4::hermiticity_defect() const {
  double defect = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return defect;
}

Matrix2c pauli_dot(const UnitVector3& a) {
  Matrix2c r;
  r(0, 0) = a.z();
  r(0, 1) = Complex{a.x(), -a.y()};
  r(1, 0) = Complex{a.x(), a.y()};
  r(1, 1) = -a.z();
  return r;
}

std::array<double, 2> spin_sum_spectrum(const UnitVector3& a, const UnitVector3& b) {
  const Matrix2c s = pauli_dot(a) + pauli_dot(b);
  const double mean = 0.5 * std::real(s(0, 0) + s(1, 1));
  const double half_gap = std::hypot(0.5 * std::real(s(0, 0) - s(1, 1)), std::abs(s(0, 1)));
  return {mean - half_gap, mean + half_gap};
}

SettingsQuad tsirelson_settings() {
  const double r = 1.0 / std::sqrt(2.0);
  return {x_axis(), y_axis(), UnitVector3::normalized({r, r, 0.0}),
          UnitVector3::normalized({r, -r, 0.0})};
}

Operator4 chsh_operator(const SettingsQuad& s) {
  const Matrix2c sa = pauli_dot(s.a);
  const Matrix2c sap = pauli_dot(s.a_prime);
  const Matrix2c sb = pauli_dot(s.b);
  const Matrix2c sbp = pauli_dot(s.b_prime);
  return Operator4::kron(sa, sb) + Operator4::kron(sa, sbp) +
         Operator4::kron(sap, sb) - Operator4::kron(sap, sbp);
}

Eigensystem4 hermitian_eigensystem(const Operator4& input) {
  const double scale = std::max(1.0, input.max_abs());
  if (input.hermiticity_defect() > 1e-12 * scale)
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");

  Operator4 a = input;
  // Force exact Hermitian symmetry so rotations stay consistent.
  for (int i = 0; i < 4; ++i) {
    a(i, i) = std::real(a(i, i));
    for (int j = i + 1; j < 4; ++j) a(j, i) = std::conj(a(i, j));
  }

  Operator4 v = Operator4::identity();

  const auto off_diagonal = [&a]() {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_diagonal() > 1e-12 * scale; ++sweep) {
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        // Unitary plane rotation annihilating a(p, q): reduce the pivot to a
        // real symmetric 2x2 problem through the phase of a(p, q).
        const Complex phase = apq / mag;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = t * c * phase;

        // Columns: col_p <- c col_p - conj(s) col_q ; col_q <- s col_p + c col_q.
        for (int k = 0; k < 4; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        // Rows: row_p <- c row_p - s row_q ; row_q <- conj(s) row_p + c row_q.
        for (int k = 0; k < 4; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
      }
    }
  }

  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return std::real(a(i, i)) < std::real(a(j, j)); });

  Eigensystem4 out;
  for (int i = 0; i < 4; ++i) {
    out.values[static_cast<std::size_t>(i)] = std::real(a(order[static_cast<std::size_t>(i)],
                                                          order[static_cast<std::size_t>(i)]));
    for (int k = 0; k < 4; ++k)
      out.vectors(k, i) = v(k, order[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Operator4& m) {
  return hermitian_eigensystem(m).values;
}

double singlet_expectation(const UnitVector3& a, const UnitVector3& b) {
  const Operator4 op = Operator4::kron(pauli_dot(a), pauli_dot(b));
  // |psi> = (|01> - |10>) / sqrt 2.
  const std::array<Complex, 4> psi = {0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  Complex e = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e += std::conj(psi[static_cast<std::size_t>(i)]) *
                                     op(i, j) * psi[static_cast<std::size_t>(j)];
  return std::real(e);
}

int boole_combination(int a_out, int a_prime_out, int b_out, int b_prime_out) {
  return a_out * b_out + a_out * b_prime_out + a_prime_out * b_out -
         a_prime_out * b_prime_out;
}

std::vector<int> boole_bound_enumeration() {
  std::vector<int> values;
  for (int bits = 0; bits < 16; ++bits) {
    const int a = (bits & 1) ? 1 : -1;
    const int ap = (bits & 2) ? 1 : -1;
    const int b = (bits & 4) ? 1 : -1;
    const int bp = (bits & 8) ? 1 : -1;
    values.push_back(boole_combination(a, ap, b, bp));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

AdditivityReport eigenvalue_additivity_report(const SettingsQuad& s, double tol) {
  AdditivityReport r;
  r.spectrum = hermitian_eigenvalues(chsh_operator(s));
  for (int bits = 0; bits < 16; ++bits) {
    const int a = (bits & 1) ? 1 : -1;
    const int ap = (bits & 2) ? 1 : -1;
    const int b = (bits & 4) ? 1 : -1;
    const int bp = (bits & 8) ? 1 : -1;
    r.combination_values[static_cast<std::size_t>(bits)] = boole_combination(a, ap, b, bp);
  }
  r.combination_set.assign(r.combination_values.begin(), r.combination_values.end());
  std::sort(r.combination_set.begin(), r.combination_set.end());
  r.combination_set.erase(std::unique(r.combination_set.begin(), r.combination_set.end()),
                          r.combination_set.end());

  const auto in_set = [&r, tol](double value) {
    for (int c : r.combination_set)
      if (std::abs(value - static_cast<double>(c)) <= tol) return true;
    return false;
  };
  for (double ev : r.spectrum) {
    r.max_abs_eigenvalue = std::max(r.max_abs_eigenvalue, std::abs(ev));
    if (in_set(ev)) r.spectrum_intersects_combination = true;
  }
  const double extreme =
      std::abs(r.spectrum[3]) >= std::abs(r.spectrum[0]) ? r.spectrum[3] : r.spectrum[0];
  r.extreme_eigenvalue_in_combination = in_set(extreme);
  return r;
}

LinearityReport expectation_linearity_check(std::span<const int> lambdas,
                                            const OutcomeFn& a_outcome,
                                            const OutcomeFn& b_outcome,
                                            const SettingsQuad& s) {
  if (lambdas.empty())
    throw std::invalid_argument("expectation_linearity_check: empty sample");

  // Both sides as integer sums over the shared sample: term-by-term sums on
  // the left, per-trial combinations on the right. Their equality is the
  // finite-sum form of the additivity identity and is exact.
  long long sum_ab = 0, sum_abp = 0, sum_apb = 0, sum_apbp = 0, sum_combined = 0;
  for (int lambda : lambdas) {
    const int a = a_outcome(s.a, lambda);
    const int ap = a_outcome(s.a_prime, lambda);
    const int b = b_outcome(s.b, lambda);
    const int bp = b_outcome(s.b_prime, lambda);
    sum_ab += a * b;
    sum_abp += a * bp;
    sum_apb += ap * b;
    sum_apbp += ap * bp;
    sum_combined += boole_combination(a, ap, b, bp);
  }

  LinearityReport r;
  r.n = lambdas.size();
  r.lhs_sum = sum_ab + sum_abp + sum_apb - sum_apbp;
  r.rhs_sum = sum_combined;
  r.lhs_mean = static_cast<double>(r.lhs_sum) / static_cast<double>(r.n);
  r.rhs_mean = static_cast<double>(r.rhs_sum) / static_cast<double>(r.n);
  r.exact_equal = r.lhs_sum == r.rhs_sum;
  return r;
}

}  // namespace spinorkit

#include "spinorkit/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spinorkit/bell.hpp"
#include "spinorkit/chsh.hpp"
#include "spinorkit/even_algebra.hpp"
#include "spinorkit/format.hpp"
#include "spinorkit/multivector.hpp"
#include "spinorkit/rng.hpp"

namespace spinorkit {

namespace {

std::string format_hyperbolic(const Hyperbolic& h) {
  std::string s = format_double(h.c);
  s += h.d < 0.0 ? " - " : " + ";
  s += format_double(std::abs(h.d));
  s += "e";
  return s;
}

std::string format_spectrum(const std::array<double, 4>& values) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += "; ";
    s += format_double(values[static_cast<std::size_t>(i)]);
  }
  return s;
}

Multivector16 random_multivector(rng::Sequence& seq) {
  Multivector16 m;
  for (unsigned i = 0; i < kBladeCount; ++i) m[i] = seq.next_gaussian();
  return m;
}

bool bitwise_equal(const Multivector16& a, const Multivector16& b) {
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

rng::Sequence campaign_stream(const RunConfig& config, std::uint32_t index) {
  return {config.seed, rng::stream_id(rng::StreamPurpose::Elements, index)};
}

}  // namespace

void campaign_verify_algebra(Report& report, const RunConfig& config) {
  const Multivector16 e4 = pseudoscalar4();
  const Multivector16 i3 = pseudoscalar3();
  const Multivector16 one = Multivector16::scalar(1.0);

  bool gen_ok = true;
  for (unsigned g = 0; g < 4; ++g) {
    const Multivector16 e = Multivector16::basis(1u << g);
    gen_ok = gen_ok && bitwise_equal(e * e, one);
  }
  report.add("generator-squares", "plumbing", gen_ok, gen_ok ? "+1,+1,+1,+1" : "mismatch",
             "+1,+1,+1,+1");

  report.add("pseudoscalar-square", "§2.7", bitwise_equal(e4 * e4, one), "+1", "+1");
  report.add("pseudoscalar-reverse", "§2.7", bitwise_equal(e4.reversed(), e4),
             "fixed by reversion", "fixed by reversion");
  report.add("spatial-pseudoscalar-square", "§2.8",
             bitwise_equal(i3 * i3, Multivector16::scalar(-1.0)), "-1", "-1");
  // The grade-3 blade is odd, so it anticommutes with the 4-blade; commuting
  // with the 4-blade is a property of the even subalgebra, checked below.
  report.add("pseudoscalar-odd-anticommute", "plumbing",
             bitwise_equal(i3 * e4, -(e4 * i3)), "anticommute", "anticommute");

  rng::Sequence seq = campaign_stream(config, 0);
  const std::uint64_t sweeps = config.trials;

  double assoc_worst = 0.0;
  for (std::uint64_t i = 0; i < sweeps; ++i) {
    const Multivector16 a = random_multivector(seq);
    const Multivector16 b = random_multivector(seq);
    const Multivector16 c = random_multivector(seq);
    const Multivector16 left = (a * b) * c;
    const Multivector16 right = a * (b * c);
    const Multivector16 diff = left - right;
    const double scale = std::max({left.max_abs(), right.max_abs(), 1.0});
    assoc_worst = std::max(assoc_worst, diff.max_abs() / scale);
  }
  report.add("product-associativity", "plumbing", assoc_worst <= 1e-12,
             "max relative deviation " + format_double(assoc_worst), "<= 1e-12", 1e-12);

  double anti_worst = 0.0;
  for (std::uint64_t i = 0; i < sweeps; ++i) {
    const Multivector16 a = random_multivector(seq);
    const Multivector16 b = random_multivector(seq);
    const Multivector16 left = (a * b).reversed();
    const Multivector16 right = b.reversed() * a.reversed();
    const double scale = std::max({left.max_abs(), right.max_abs(), 1.0});
    anti_worst = std::max(anti_worst, (left - right).max_abs() / scale);
  }
  report.add("reverse-anti-automorphism", "§2.8", anti_worst <= 1e-12,
             "max relative deviation " + format_double(anti_worst), "<= 1e-12", 1e-12);

  rng::Sequence kseq = campaign_stream(config, 1);
  bool central_ok = true;
  for (std::uint64_t i = 0; i < sweeps && central_ok; ++i) {
    const Multivector16 even = embed(random_k_element(kseq));
    central_ok = bitwise_equal(e4 * even, even * e4);
  }
  report.add("pseudoscalar-centrality", "§2.8", central_ok,
             central_ok ? "commutes exactly on even elements" : "mismatch",
             "commutes exactly on even elements");

  bool grade_ok = true;
  for (std::uint64_t i = 0; i < sweeps && grade_ok; ++i) {
    const Multivector16 a = random_multivector(seq);
    Multivector16 sum;
    for (int k = 0; k <= 4; ++k) sum += a.grade(k);
    grade_ok = bitwise_equal(sum, a);
  }
  report.add("grade-decomposition", "plumbing", grade_ok,
             grade_ok ? "exact reconstruction" : "mismatch", "exact reconstruction");

  bool round_trip_ok = true;
  for (std::uint64_t i = 0; i < sweeps && round_trip_ok; ++i) {
    for (int orient : {+1, -1}) {
      const KElement x = random_k_element(kseq, orient);
      const KElement back = extract(embed(x), orient);
      const auto cx = x.coordinates();
      const auto cb = back.coordinates();
      for (int k = 0; k < 8; ++k)
        if (cx[static_cast<std::size_t>(k)] != cb[static_cast<std::size_t>(k)])
          round_trip_ok = false;
    }
  }
  report.add("embed-extract-round-trip", "§2.6", round_trip_ok,
             round_trip_ok ? "identity for both orientations" : "mismatch",
             "identity for both orientations");

  double kprod_worst = 0.0;
  for (std::uint64_t i = 0; i < sweeps; ++i) {
    const KElement x = random_k_element(kseq);
    const KElement y = random_k_element(kseq);
    const Multivector16 via_pair = embed(k_product(x, y));
    const Multivector16 via_full = embed(x) * embed(y);
    const double scale = std::max({via_pair.max_abs(), via_full.max_abs(), 1.0});
    kprod_worst = std::max(kprod_worst, (via_pair - via_full).max_abs() / scale);
  }
  report.add("k-product-vs-embedded-product", "§2.8", kprod_worst <= 1e-12,
             "max relative deviation " + format_double(kprod_worst), "<= 1e-12", 1e-12);
}

void campaign_verify_norms(Report& report, const RunConfig& config) {
  rng::Sequence seq = campaign_stream(config, 2);
  const double tol = config.tolerance;

  double comp_worst = 0.0;
  bool comp_ok = true;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    const CompositionReport r = verify_composition(x, y, tol);
    comp_ok = comp_ok && r.equal;
    const double scale = std::max({std::abs(r.lhs.c), std::abs(r.lhs.d),
                                   std::abs(r.rhs.c), std::abs(r.rhs.d), 1.0});
    comp_worst = std::max(comp_worst, r.max_delta / scale);
  }
  report.add("composition-law", "Eq. (5)", comp_ok,
             format_double(config.trials) + " pairs, max relative gap " +
                 format_double(comp_worst),
             "norm of product equals product of norms", tol);

  double square_worst = 0.0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const KElement x = random_k_element(seq);
    const KElement y = random_k_element(seq);
    const Hyperbolic lhs = quadratic_form(k_product(x, y));
    const Hyperbolic rhs = quadratic_form(x) * quadratic_form(y);
    const double scale = std::max({std::abs(lhs.c), std::abs(lhs.d), 1.0});
    square_worst = std::max({square_worst, std::abs(lhs.c - rhs.c) / scale,
                             std::abs(lhs.d - rhs.d) / scale});
  }
  report.add("quadratic-form-composition", "Eq. (20)", square_worst <= tol,
             "max relative gap " + format_double(square_worst),
             "(ac+bd) + (ad+bc)e on both routes", tol);

  bool pd_ok = true;
  for (std::uint64_t i = 0; i < config.trials && pd_ok; ++i) {
    const KElement x = random_k_element(seq);
    pd_ok = scalar_norm(x) > 0.0 && quadratic_form(x).c > 0.0;
  }
  const bool zero_maps = scalar_norm(KElement{}) == 0.0 &&
                         quadratic_form(KElement{}).c == 0.0 &&
                         quadratic_form(KElement{}).d == 0.0;
  report.add("positive-definiteness", "Eq. (6)", pd_ok && zero_maps,
             pd_ok ? "nonzero elements have positive norm; zero maps to zero"
                   : "degenerate nonzero element found",
             "norm vanishes only at zero");

  bool cone_ok = true;
  double cone_worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const Hyperbolic q = quadratic_form(random_k_element(seq));
    const double slack = q.c - std::abs(q.d);
    cone_worst = std::min(cone_worst, slack);
    cone_ok = cone_ok && slack >= -1e-12 * std::max(1.0, q.c);
  }
  report.add("light-cone-containment", "Review History Reviewer #3", cone_ok,
             "min(c - |d|) = " + format_double(cone_worst), ">= 0", 1e-12);

  double sqrt_worst = 0.0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const Hyperbolic q = quadratic_form(random_k_element(seq));
    const Hyperbolic root = hyperbolic_sqrt(q);
    const Hyperbolic back = root * root;
    const double scale = std::max({std::abs(q.c), std::abs(q.d), 1.0});
    sqrt_worst = std::max({sqrt_worst, std::abs(back.c - q.c) / scale,
                           std::abs(back.d - q.d) / scale});
  }
  report.add("hyperbolic-sqrt-round-trip", "Review History Reviewer #3",
             sqrt_worst <= tol, "max relative gap " + format_double(sqrt_worst),
             "principal root squares back", tol);

  const Hyperbolic r1 = hyperbolic_sqrt({2.0, -2.0});
  report.add("sqrt-of-2-minus-2e", "Eq. (13)", r1.c == 1.0 && r1.d == -1.0,
             format_hyperbolic(r1), "1 - 1e");
  const Hyperbolic r2 = hyperbolic_sqrt({2.0, 2.0});
  report.add("sqrt-of-2-plus-2e", "Eq. (14)", r2.c == 1.0 && r2.d == 1.0,
             format_hyperbolic(r2), "1 + 1e");
  const Hyperbolic r3 = hyperbolic_sqrt({1.0, 1.0});
  const double half_sqrt2 = std::sqrt(2.0) / 2.0;
  report.add("sqrt-of-1-plus-e", "Review History Reviewer #3",
             std::abs(r3.c - half_sqrt2) <= 1e-15 && std::abs(r3.d - half_sqrt2) <= 1e-15,
             format_hyperbolic(r3), "(1 + 1e)/sqrt(2)", 1e-15);
  const Hyperbolic r4 = hyperbolic_sqrt({4.0, 0.0});
  report.add("sqrt-of-scalar-4", "plumbing", r4.c == 2.0 && r4.d == 0.0,
             format_hyperbolic(r4), "2 + 0e");

  bool consistency_ok = true;
  for (std::uint64_t i = 0; i < config.trials && consistency_ok; ++i) {
    const KElement x = random_k_element(seq);
    consistency_ok = scalar_norm(x) == std::sqrt(quadratic_form(x).c);
  }
  report.add("scalar-norm-consistency", "Eq. (28)", consistency_ok,
             consistency_ok ? "scalar norm is sqrt of the scalar coefficient" : "mismatch",
             "scalar norm is sqrt of the scalar coefficient");

  double pyth_worst = 0.0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const KElement x = random_k_element(seq);
    double sum = 0.0;
    for (double coord : x.coordinates()) sum += coord * coord;
    const double n = scalar_norm(x);
    pyth_worst = std::max(pyth_worst, std::abs(n * n - sum) / std::max(1.0, sum));
  }
  report.add("scalar-norm-pythagorean", "Eq. (30)", pyth_worst <= 1e-12,
             "max relative gap " + format_double(pyth_worst),
             "eight-dimensional Pythagorean length", 1e-12);

  double scalar_comp_worst = 0.0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const KElement x = random_zero_defect_element(seq);
    const KElement y = random_zero_defect_element(seq);
    const double lhs = scalar_norm(k_product(x, y));
    const double rhs = scalar_norm(x) * scalar_norm(y);
    scalar_comp_worst =
        std::max(scalar_comp_worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  report.add("scalar-composition-zero-defect", "Eq. (27)", scalar_comp_worst <= tol,
             "max relative gap " + format_double(scalar_comp_worst),
             "scalar norms compose on the zero-defect set", tol);

  KElement unit_quat;
  unit_quat.qr = {0.5, {0.5, 0.5, 0.5}};
  const bool sphere1 = is_on_seven_sphere(unit_quat, 1.0, 1e-12);
  KElement mixed;
  mixed.qr.g = 1.0;
  mixed.qd.u = {1.0, 0.0, 0.0};
  const bool sphere2 = is_on_seven_sphere(mixed, std::sqrt(2.0), 1e-12);
  const KElement split_unit = KElement::split({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  const bool sphere3 = !is_on_seven_sphere(split_unit, 1.0, 1e-12);
  report.add("seven-sphere-membership", "Eq. (31)", sphere1 && sphere2 && sphere3,
             "unit quaternion in; orthogonal pair in; defect-1 element out",
             "zero defect and matching radius decide membership", 1e-12);

  const OrientationBasisCheck basis = orientation_change_of_basis();
  bool diag_ok = basis.diagonal[0] == 1.0 && basis.max_off_diagonal == 0.0;
  for (int i = 1; i < 8; ++i) diag_ok = diag_ok && basis.diagonal[static_cast<std::size_t>(i)] == -1.0;
  report.add("orientation-determinant", "§2.6",
             diag_ok && basis.determinant == -1.0,
             "diag(1,-1,-1,-1,-1,-1,-1,-1), det " + format_double(basis.determinant),
             "det -1");

  double qf_worst = 0.0;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    const KElement x = random_k_element(seq);
    const Hyperbolic closed = quadratic_form(x);
    const Multivector16 m = embed(x) * embed(x).reversed();
    const double scale = std::max({std::abs(closed.c), std::abs(closed.d), 1.0});
    qf_worst = std::max({qf_worst, std::abs(m.scalar_part() - closed.c) / scale,
                         std::abs(m[0b1111] - closed.d) / scale});
  }
  report.add("quadratic-form-closed-form", "Eqs. (12)-(14)", qf_worst <= 1e-12,
             "max relative gap vs full-algebra product " + format_double(qf_worst),
             "(g^2+u.u+h^2+v.v) + (2gh+2u.v)e", 1e-12);
}

void campaign_counterexample(Report& report) {
  const KElement x = KElement::split({-1.0, 1.0});  // the 4-blade unit minus one
  const KElement y = KElement::split({1.0, 1.0});   // the 4-blade unit plus one

  const Hyperbolic qx = quadratic_form(x);
  report.add("quadratic-form-x", "Eq. (13)", qx.c == 2.0 && qx.d == -2.0,
             format_hyperbolic(qx), "2 - 2e");

  const Hyperbolic nx = geometric_norm(x);
  report.add("geometric-norm-x", "Eq. (13)", nx.c == 1.0 && nx.d == -1.0,
             format_hyperbolic(nx), "1 - 1e");

  const Hyperbolic ny = geometric_norm(y);
  report.add("geometric-norm-y", "Eq. (14)", ny.c == 1.0 && ny.d == 1.0,
             format_hyperbolic(ny), "1 + 1e");

  const KElement xy = k_product(x, y);
  const Hyperbolic lhs = geometric_norm(xy);
  report.add("geometric-norm-of-product", "Eq. (12)", lhs.c == 0.0 && lhs.d == 0.0,
             format_hyperbolic(lhs), "0 + 0e");

  const Hyperbolic rhs = nx * ny;
  report.add("geometric-norm-product-of-norms", "Eq. (15)", rhs.c == 0.0 && rhs.d == 0.0,
             format_hyperbolic(rhs), "0 + 0e");

  report.add("geometric-composition-law-holds", "Eq. (5)",
             lhs.c == rhs.c && lhs.d == rhs.d,
             "both sides " + format_hyperbolic(lhs), "lhs equals rhs");

  const double sx = scalar_norm(x);
  const double sy = scalar_norm(y);
  const double s_product = sx * sy;
  const double s_lhs = scalar_norm(xy);
  report.add("scalar-norm-x", "Review History Reviewer #6 Eq. (1.4)",
             std::abs(sx - std::sqrt(2.0)) <= 1e-12, format_double(sx), "sqrt(2)", 1e-12);
  report.add("scalar-norm-y", "Review History Reviewer #6 Eq. (1.4)",
             std::abs(sy - std::sqrt(2.0)) <= 1e-12, format_double(sy), "sqrt(2)", 1e-12);
  report.add("scalar-norm-product-of-norms", "Review History Reviewer #6 Eq. (1.4)",
             std::abs(s_product - 2.0) <= 1e-12, format_double(s_product), "2", 1e-12);
  report.add("scalar-norm-of-product", "Review History Reviewer #6 Eq. (1.4)",
             s_lhs == 0.0, format_double(s_lhs), "0");
  report.add("scalar-composition-law-diverges", "Review History Reviewer #6 Eq. (1.4)",
             std::abs(s_product - s_lhs - 2.0) <= 1e-12,
             "gap between the scalar-norm sides " + format_double(s_product - s_lhs), "2",
             1e-12);

  report.add("defect-x", "Eq. (29)", orthogonality_defect(x) == -2.0,
             format_double(orthogonality_defect(x)), "-2");
  report.add("defect-y", "Eq. (29)", orthogonality_defect(y) == 2.0,
             format_double(orthogonality_defect(y)), "2");
}

void campaign_simulate_singlet(Report& report, const RunConfig& config) {
  const double residual_bound = 5.0 / std::sqrt(static_cast<double>(config.trials));

  std::ofstream dump;
  if (!config.dump_trials_path.empty()) {
    dump.open(config.dump_trials_path, std::ios::binary);
    if (!dump)
      throw std::runtime_error("cannot open trial dump path: " + config.dump_trials_path);
  }

  for (std::uint64_t k = 0; k < config.pairs; ++k) {
    rng::Sequence setting_seq(
        config.seed, rng::stream_id(rng::StreamPurpose::Settings,
                                    static_cast<std::uint32_t>(k)));
    const UnitVector3 a = sample_unit_vector(setting_seq);
    const UnitVector3 b = sample_unit_vector(setting_seq);
    // Each pair gets its own coin seed so residuals are independent.
    const std::uint64_t pair_seed = config.seed + k;
    const CorrelationEstimate est =
        simulate(a, b, config.trials, pair_seed, config.workers);

    const std::string tag = std::to_string(k);
    const double gap = est.scalar_mean + a.vec().dot(b.vec());
    report.add("singlet-exact-correlator-" + tag, "§2.5", gap == 0.0,
               "scalar mean + a.b = " + format_double(gap), "0");
    report.add("bivector-residual-" + tag, "§2.9", est.bivector_residual <= residual_bound,
               format_double(est.bivector_residual),
               "<= " + format_double(residual_bound), residual_bound);
    report.add("outcome-marginal-" + tag, "Review History Round 2",
               std::abs(est.mean_A()) <= residual_bound,
               "mean(A) = " + format_double(est.mean_A()),
               "0 within " + format_double(residual_bound), residual_bound);
    report.add("outcome-product-" + tag, "Review History Round 2",
               est.outcome_product_mean == -1.0, format_double(est.outcome_product_mean),
               "-1");

    if (k == 0 && dump.is_open()) {
      dump_trials_csv(dump, a, b, config.trials, pair_seed);
      if (!dump)
        throw std::runtime_error("failed while writing trial dump: " + config.dump_trials_path);
    }
  }
}

void campaign_chsh(Report& report, const RunConfig& config) {
  const double bound = 2.0 * std::sqrt(2.0);

  const SettingsQuad canonical = tsirelson_settings();
  const auto spectrum = hermitian_eigenvalues(chsh_operator(canonical));
  const bool canonical_ok =
      std::abs(spectrum[0] + bound) <= 1e-9 && std::abs(spectrum[1]) <= 1e-9 &&
      std::abs(spectrum[2]) <= 1e-9 && std::abs(spectrum[3] - bound) <= 1e-9;
  report.add("canonical-spectrum", "§2.4", canonical_ok, format_spectrum(spectrum),
             "-2sqrt(2); 0; 0; 2sqrt(2)", 1e-9);

  rng::Sequence seq = campaign_stream(config, 3);
  double ceiling = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SettingsQuad s{sample_unit_vector(seq), sample_unit_vector(seq),
                         sample_unit_vector(seq), sample_unit_vector(seq)};
    const auto ev = hermitian_eigenvalues(chsh_operator(s));
    ceiling = std::max({ceiling, std::abs(ev[0]), std::abs(ev[3])});
  }
  report.add("tsirelson-ceiling", "§2.4", ceiling <= bound + 1e-9,
             "max |eigenvalue| over 1000 random quadruples " + format_double(ceiling),
             "<= 2sqrt(2)", 1e-9);

  const auto boole = boole_bound_enumeration();
  const bool boole_ok = boole.size() == 2 && boole[0] == -2 && boole[1] == 2;
  report.add("boole-enumeration", "Eq. (3)", boole_ok,
             boole_ok ? "{-2, +2}" : "unexpected value set", "{-2, +2}");

  const AdditivityReport add = eigenvalue_additivity_report(canonical);
  report.add("additivity-disjoint-at-canonical", "§2.4",
             !add.extreme_eigenvalue_in_combination && !add.spectrum_intersects_combination,
             "extreme eigenvalue " + format_double(add.max_abs_eigenvalue) +
                 " outside {-2, +2}",
             "operator spectrum escapes the outcome-combination set", 1e-9);

  const auto spin_sum = spin_sum_spectrum(x_axis(), y_axis());
  const double root2 = std::sqrt(2.0);
  bool spin_ok = std::abs(spin_sum[0] + root2) <= 1e-12 &&
                 std::abs(spin_sum[1] - root2) <= 1e-12;
  for (double ev : spin_sum)
    for (double excluded : {-2.0, 0.0, 2.0}) spin_ok = spin_ok && std::abs(ev - excluded) > 0.1;
  report.add("spin-sum-eigenvalues", "§2.4", spin_ok,
             format_double(spin_sum[0]) + "; " + format_double(spin_sum[1]),
             "-sqrt(2); +sqrt(2), not in {-2, 0, +2}", 1e-12);

  bool pauli_ok = true;
  for (int i = 0; i < 32; ++i) {
    const UnitVector3 a = sample_unit_vector(seq);
    const Matrix2c sq = pauli_dot(a) * pauli_dot(a);
    pauli_ok = pauli_ok && std::abs(sq(0, 0) - 1.0) <= 1e-12 &&
               std::abs(sq(1, 1) - 1.0) <= 1e-12 && std::abs(sq(0, 1)) <= 1e-12 &&
               std::abs(sq(1, 0)) <= 1e-12;
  }
  report.add("pauli-square-identity", "§2.4", pauli_ok,
             pauli_ok ? "(sigma.a)^2 = identity" : "mismatch", "(sigma.a)^2 = identity",
             1e-12);

  double singlet_worst = 0.0;
  double sim_gap_worst = 0.0;
  for (std::uint64_t k = 0; k < config.pairs; ++k) {
    const UnitVector3 a = sample_unit_vector(seq);
    const UnitVector3 b = sample_unit_vector(seq);
    const double e = singlet_expectation(a, b);
    singlet_worst = std::max(singlet_worst, std::abs(e + a.vec().dot(b.vec())));
    const CorrelationEstimate est = simulate(a, b, 8, config.seed + k);
    sim_gap_worst = std::max(sim_gap_worst, std::abs(e - est.scalar_mean));
  }
  report.add("singlet-expectation", "§2.5", singlet_worst <= 1e-12,
             "max |expectation + a.b| = " + format_double(singlet_worst), "0", 1e-12);
  report.add("singlet-vs-simulation", "§2.5", sim_gap_worst <= 1e-12,
             "max gap between operator expectation and simulated scalar mean " +
                 format_double(sim_gap_worst),
             "0", 1e-12);

  rng::Sequence lin_seq = campaign_stream(config, 4);
  const std::size_t sample_size =
      static_cast<std::size_t>(std::min<std::uint64_t>(config.trials, 4096));
  bool linear_ok = true;
  for (int cfg = 0; cfg < 100 && linear_ok; ++cfg) {
    const SettingsQuad s{sample_unit_vector(lin_seq), sample_unit_vector(lin_seq),
                         sample_unit_vector(lin_seq), sample_unit_vector(lin_seq)};
    std::vector<int> lambdas(sample_size);
    for (int& l : lambdas) l = (lin_seq.next_u64() & 1ull) ? 1 : -1;
    const std::uint64_t table = lin_seq.next_u64();
    const auto same = [](const UnitVector3& p, const UnitVector3& q) {
      return p.x() == q.x() && p.y() == q.y() && p.z() == q.z();
    };
    const auto side = [s, table, same](bool is_b) {
      return [s, table, same, is_b](const UnitVector3& setting, int lambda) {
        const bool primed = is_b ? same(setting, s.b_prime) : same(setting, s.a_prime);
        const int slot = (is_b ? 4 : 0) + (primed ? 2 : 0) + (lambda > 0 ? 0 : 1);
        return ((table >> slot) & 1ull) ? 1 : -1;
      };
    };
    const LinearityReport lin = expectation_linearity_check(lambdas, side(false), side(true), s);
    linear_ok = lin.exact_equal;
  }
  report.add("expectation-linearity", "Eq. (1)", linear_ok,
             linear_ok ? "both sides agree exactly on 100 random configurations"
                       : "mismatch found",
             "finite-sum linearity is exact");
}

Report run_campaign(const RunConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.pairs < 1) throw std::invalid_argument("pairs must be at least 1");
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (config.format != "json" && config.format != "csv")
    throw std::invalid_argument("format must be json or csv");

  Report report;
  report.command = config.command;
  report.seed = config.seed;
  report.trials = config.trials;
  report.pairs = config.pairs;
  report.tolerance = config.tolerance;

  if (config.command == "verify-algebra") {
    campaign_verify_algebra(report, config);
  } else if (config.command == "verify-norms") {
    campaign_verify_norms(report, config);
  } else if (config.command == "counterexample") {
    campaign_counterexample(report);
  } else if (config.command == "simulate-singlet") {
    campaign_simulate_singlet(report, config);
  } else if (config.command == "chsh") {
    campaign_chsh(report, config);
  } else if (config.command == "all") {
    campaign_verify_algebra(report, config);
    campaign_verify_norms(report, config);
    campaign_counterexample(report);
    campaign_simulate_singlet(report, config);
    campaign_chsh(report, config);
  } else {
    throw std::invalid_argument("unknown command: " + config.command);
  }
  return report;
}

}  // namespace spinorkit

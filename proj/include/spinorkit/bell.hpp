#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spinorkit/even_algebra.hpp"
#include "spinorkit/rng.hpp"
#include "spinorkit/vec3.hpp"

namespace spinorkit {

// Unit vector in 3-space; the constructor rejects non-unit input.
class UnitVector3 {
 public:
  explicit UnitVector3(const Vec3& v);

  static UnitVector3 normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

 private:
  Vec3 v_;
};

inline UnitVector3 x_axis() { return UnitVector3({1.0, 0.0, 0.0}); }
inline UnitVector3 y_axis() { return UnitVector3({0.0, 1.0, 0.0}); }
inline UnitVector3 z_axis() { return UnitVector3({0.0, 0.0, 1.0}); }

// Detector bivector D(a) = I3 a: a pure-bivector quaternion that squares
// to -1. The scalar part of D(a) D(b) is -a.b.
KElement detector_bivector(const UnitVector3& a, int orientation = +1);

// Outcomes of one trial given the orientation coin: A = lambda, B = -lambda.
struct Outcomes {
  int A = 0;
  int B = 0;
};
Outcomes measurement_outcomes(int lambda);

// Product of the two detector bivectors in the order selected by the
// orientation: D(a) D(b) for lambda = +1 and D(b) D(a) for lambda = -1. The
// scalar part is -a.b on both branches; the bivector parts are opposite.
KElement trial_product(const UnitVector3& a, const UnitVector3& b, int lambda);

struct TrialRecord {
  std::uint64_t trial = 0;
  int lambda = 0;
  int A = 0;
  int B = 0;
  KElement q;
};

struct CorrelationEstimate {
  double scalar_mean = 0.0;        // mean scalar part of the trial elements
  double bivector_residual = 0.0;  // length of the averaged non-scalar part
  std::uint64_t n = 0;
  double std_error = 0.0;          // binomial standard error of mean(lambda)
  std::uint64_t n_plus = 0;        // lambda = +1 count
  double outcome_product_mean = 0.0;  // mean of the per-trial A*B (always -1)

  double lambda_mean() const {
    return n == 0 ? 0.0
                  : (2.0 * static_cast<double>(n_plus) - static_cast<double>(n)) /
                        static_cast<double>(n);
  }
  double mean_A() const { return lambda_mean(); }
  double mean_B() const { return -lambda_mean(); }
};

// The orientation coin of trial i under a given seed: +1 or -1, a pure
// function of (seed, i). Coins are drawn one bit at a time from Philox
// blocks; shard k of the stream is keyed (seed, k), so any partition of the
// trial range over workers reproduces the same sequence.
int trial_lambda(std::uint64_t seed, std::uint64_t trial);

// Runs n singlet trials with detector settings a and b and aggregates the
// trial elements. The per-trial scalar is setting-dependent but coin
// independent, so the scalar mean reproduces -a.b exactly; the bivector
// residual decays stochastically as 1/sqrt(n). Results are bit-identical for
// any worker count.
CorrelationEstimate simulate(const UnitVector3& a, const UnitVector3& b,
                             std::uint64_t n, std::uint64_t seed, int workers = 1);

// Materialized per-trial records; intended for small n.
std::vector<TrialRecord> simulate_trials(const UnitVector3& a, const UnitVector3& b,
                                         std::uint64_t n, std::uint64_t seed);

// Streams trials as CSV rows: trial,lambda,A,B,q0..q7.
void dump_trials_csv(std::ostream& out, const UnitVector3& a, const UnitVector3& b,
                     std::uint64_t n, std::uint64_t seed);

// Uniform point on the 2-sphere from normalized Gaussian triples.
UnitVector3 sample_unit_vector(rng::Sequence& seq);

}  // namespace spinorkit

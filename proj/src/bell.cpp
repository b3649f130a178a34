#include "spinorkit/bell.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "spinorkit/format.hpp"

namespace spinorkit {

namespace {

constexpr std::uint64_t kShardBits = 12;  // 4096 trials per coin shard
constexpr std::uint64_t kShardTrials = 1ull << kShardBits;

// One 256-bit block of coin bits; shard k of the stream is keyed (seed, k).
std::array<std::uint64_t, 4> coin_block(std::uint64_t seed, std::uint64_t shard,
                                        std::uint64_t block) {
  return rng::philox4x64(
      {block, 0, 0, 0},
      {seed, rng::stream_id(rng::StreamPurpose::TrialCoins,
                            static_cast<std::uint32_t>(shard))});
}

// Set bits within [from, to) of a 256-bit block.
int popcount_range(const std::array<std::uint64_t, 4>& words, unsigned from,
                   unsigned to) {
  int count = 0;
  for (unsigned word = 0; word < 4; ++word) {
    const unsigned lo = word * 64;
    const unsigned hi = lo + 64;
    if (to <= lo || from >= hi) continue;
    std::uint64_t v = words[word];
    const unsigned a = std::max(from, lo) - lo;
    const unsigned b = std::min(to, hi) - lo;
    if (b < 64) v &= (1ull << b) - 1;
    if (a > 0) v &= ~((1ull << a) - 1);
    count += std::popcount(v);
  }
  return count;
}

// Number of lambda = +1 coins among trials [begin, end). Pure in (seed,
// begin, end) and additive over subranges, so any worker partition sums to
// the same total.
std::uint64_t count_plus_range(std::uint64_t seed, std::uint64_t begin,
                               std::uint64_t end) {
  std::uint64_t count = 0;
  std::uint64_t i = begin;
  while (i < end) {
    const std::uint64_t shard = i >> kShardBits;
    const std::uint64_t shard_base = shard << kShardBits;
    const std::uint64_t stop = std::min(end, shard_base + kShardTrials);
    std::uint64_t off = i - shard_base;
    const std::uint64_t off_end = stop - shard_base;
    while (off < off_end) {
      const std::uint64_t block = off >> 8;
      const unsigned from = static_cast<unsigned>(off & 255);
      const unsigned to =
          static_cast<unsigned>(std::min<std::uint64_t>(off_end - (block << 8), 256));
      count += static_cast<std::uint64_t>(
          popcount_range(coin_block(seed, shard, block), from, to));
      off = (block << 8) + to;
    }
    i = stop;
  }
  return count;
}

}  // namespace

UnitVector3::UnitVector3(const Vec3& v) : v_(v) {
  if (std::abs(v.dot(v) - 1.0) > 1e-12)
    throw std::invalid_argument("UnitVector3: input is not unit length");
}

UnitVector3 UnitVector3::normalized(const Vec3& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("UnitVector3: cannot normalize zero");
  return UnitVector3({v.x / n, v.y / n, v.z / n});
}

KElement detector_bivector(const UnitVector3& a, int orientation) {
  KElement d;
  d.orientation = orientation;
  d.qr.u = a.vec();
  return d;
}

Outcomes measurement_outcomes(int lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("measurement_outcomes: lambda must be +1 or -1");
  return {lambda, -lambda};
}

KElement trial_product(const UnitVector3& a, const UnitVector3& b, int lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("trial_product: lambda must be +1 or -1");
  const KElement da = detector_bivector(a, lambda);
  const KElement db = detector_bivector(b, lambda);
  // The orientation coin switches the order of the bivector product.
  return lambda == 1 ? k_product(da, db) : k_product(db, da);
}

int trial_lambda(std::uint64_t seed, std::uint64_t trial) {
  const std::uint64_t shard = trial >> kShardBits;
  const std::uint64_t off = trial & (kShardTrials - 1);
  const auto block = coin_block(seed, shard, off >> 8);
  const unsigned bit = static_cast<unsigned>(off & 255);
  return ((block[bit >> 6] >> (bit & 63)) & 1ull) ? +1 : -1;
}

CorrelationEstimate simulate(const UnitVector3& a, const UnitVector3& b,
                             std::uint64_t n, std::uint64_t seed, int workers) {
  if (n == 0) throw std::invalid_argument("simulate: trial count must be at least 1");
  if (workers < 1) throw std::invalid_argument("simulate: worker count must be at least 1");

  std::uint64_t n_plus = 0;
  if (workers == 1) {
    n_plus = count_plus_range(seed, 0, n);
  } else {
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(n, chunk * static_cast<std::uint64_t>(w));
      const std::uint64_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&partial, w, seed, lo, hi] {
        partial[static_cast<std::size_t>(w)] = count_plus_range(seed, lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t p : partial) n_plus += p;
  }

  // The two branch elements share the scalar part bitwise and carry opposite
  // bivector parts, so (n_plus, n) is a sufficient statistic: the exact mean
  // of n copies of the shared scalar is that scalar, and the averaged
  // non-scalar part is lambda_mean times the lambda = +1 bivector.
  const KElement q_plus = trial_product(a, b, +1);

  CorrelationEstimate est;
  est.n = n;
  est.n_plus = n_plus;
  est.scalar_mean = q_plus.qr.g;
  const double m = est.lambda_mean();
  est.bivector_residual = std::abs(m) * q_plus.qr.u.norm();
  est.std_error = std::sqrt(std::max(0.0, 1.0 - m * m) / static_cast<double>(n));
  est.outcome_product_mean = -1.0;  // A = -B on every trial
  return est;
}

std::vector<TrialRecord> simulate_trials(const UnitVector3& a, const UnitVector3& b,
                                         std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("simulate_trials: trial count must be at least 1");
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    const int lambda = trial_lambda(seed, i);
    const Outcomes o = measurement_outcomes(lambda);
    records.push_back({i, lambda, o.A, o.B, trial_product(a, b, lambda)});
  }
  return records;
}

void dump_trials_csv(std::ostream& out, const UnitVector3& a, const UnitVector3& b,
                     std::uint64_t n, std::uint64_t seed) {
  out << "trial,lambda,A,B,q0,q1,q2,q3,q4,q5,q6,q7\n";
  for (std::uint64_t i = 0; i < n; ++i) {
    const int lambda = trial_lambda(seed, i);
    const Outcomes o = measurement_outcomes(lambda);
    const KElement q = trial_product(a, b, lambda);
    out << i << ',' << lambda << ',' << o.A << ',' << o.B;
    for (double coord : q.coordinates()) out << ',' << format_double(coord);
    out << '\n';
  }
}

UnitVector3 sample_unit_vector(rng::Sequence& seq) {
  for (;;) {
    const Vec3 g{seq.next_gaussian(), seq.next_gaussian(), seq.next_gaussian()};
    const double n = g.norm();
    if (n > 1e-12) return UnitVector3({g.x / n, g.y / n, g.z / n});
  }
}

}  // namespace spinorkit

#include "qipm/qlsa_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qipm/error.hpp"
#include "qipm/kernels.hpp"
#include "qipm/kp_tree.hpp"
#include "qipm/rng.hpp"

namespace qipm::qlsa {
namespace {

constexpr double kMaxCopies = 9007199254740992.0;  // 2^53
constexpr std::int64_t kMaxPerShotCopies = 2'000'000'000;

// Exact multinomial draw via the chain of conditional binomials.
std::vector<std::int64_t> multinomial(const std::vector<double>& weights, std::int64_t trials,
                                      Engine& rng) {
  double remaining_mass = 0.0;
  for (double w : weights) remaining_mass += w;
  std::vector<std::int64_t> counts(weights.size(), 0);
  std::int64_t remaining = trials;
  for (std::size_t i = 0; i < weights.size() && remaining > 0; ++i) {
    if (weights[i] <= 0.0) continue;
    if (i + 1 == weights.size() || weights[i] >= remaining_mass) {
      counts[i] = remaining;
      remaining = 0;
      break;
    }
    const double p = std::clamp(weights[i] / remaining_mass, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> binom(remaining, p);
    counts[i] = binom(rng);
    remaining -= counts[i];
    remaining_mass -= weights[i];
  }
  // Trailing zero weights can leave trials unassigned only through rounding.
  if (remaining > 0) {
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (weights[i] > 0.0) {
        counts[i] += remaining;
        break;
      }
    }
  }
  return counts;
}

std::vector<std::int64_t> draw_counts(const std::vector<double>& amplitudes, std::int64_t copies,
                                      std::uint64_t seed, Sampling sampling) {
  if (sampling == Sampling::PerShot) {
    if (copies > kMaxPerShotCopies) {
      throw InputError("per-shot tomography limited to 2e9 copies; use multinomial sampling");
    }
    const SamplingTree tree{std::span<const double>(amplitudes)};
    return kernels::omp::shot_histogram(tree, copies, seed);
  }
  std::vector<double> weights(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) weights[i] = amplitudes[i] * amplitudes[i];
  Engine rng(seed);
  return multinomial(weights, copies, rng);
}

}  // namespace

std::int64_t tomography_copies(Index n_prime, double epsilon) {
  const double np = static_cast<double>(n_prime);
  const double raw = std::ceil(36.0 * np * std::log(np) / (epsilon * epsilon));
  if (!(raw < kMaxCopies)) return static_cast<std::int64_t>(kMaxCopies);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(raw));
}

TomographyOutcome tomography(const Vector& d_true, double epsilon, std::uint64_t seed,
                             Sampling sampling) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("tomography: epsilon must lie in (0, 1)");
  if (d_true.size() == 0 || std::abs(d_true.stableNorm() - 1.0) > 1e-12) {
    throw InputError("tomography: input must be a unit vector");
  }
  const Index np = d_true.size();
  const auto n = static_cast<std::size_t>(np);
  const std::int64_t N = tomography_copies(np, epsilon);

  TomographyOutcome out;
  out.copies_used = N;
  out.seed = seed;

  // Amplitude batch.
  std::vector<double> amps(d_true.data(), d_true.data() + n);
  const auto amp_counts = draw_counts(amps, N, derive_seed(seed, "tomography-amplitude"), sampling);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<double>(amp_counts[i]) / static_cast<double>(N);

  // Sign batch over outcomes (b, i), interleaved as index 2i + b.
  std::vector<double> sign_amps(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double root_p = std::sqrt(p[i]);
    sign_amps[2 * i] = 0.5 * (d_true(static_cast<Index>(i)) + root_p);
    sign_amps[2 * i + 1] = 0.5 * (d_true(static_cast<Index>(i)) - root_p);
  }
  const auto sign_counts = draw_counts(sign_amps, N, derive_seed(seed, "tomography-sign"), sampling);

  out.estimate.resize(np);
  for (std::size_t i = 0; i < n; ++i) {
    const double threshold = 0.4 * p[i] * static_cast<double>(N);
    const double sigma = static_cast<double>(sign_counts[2 * i]) > threshold ? 1.0 : -1.0;
    out.estimate(static_cast<Index>(i)) = sigma * std::sqrt(p[i]);
    if (p[i] > 0.0 && d_true(static_cast<Index>(i)) != 0.0 &&
        (sigma > 0.0) != (d_true(static_cast<Index>(i)) > 0.0)) {
      ++out.sign_flips_vs_truth;
    }
  }
  return out;
}

double norm_estimate(double true_norm, double epsilon, std::uint64_t seed) {
  if (!(true_norm > 0.0)) throw InputError("norm_estimate: norm must be positive");
  if (epsilon == 0.0) return true_norm;
  Engine rng = make_engine(seed, "norm-estimate");
  std::uniform_real_distribution<double> unif(-epsilon, epsilon);
  return true_norm * (1.0 + unif(rng));
}

bool fidelity_check(const Vector& candidate, const Vector& exact, double epsilon) {
  const double nc = candidate.stableNorm();
  const double ne = exact.stableNorm();
  if (nc == 0.0 || ne == 0.0) throw InputError("fidelity_check: zero vector");
  return (candidate / nc - exact / ne).norm() <= std::sqrt(7.0) * epsilon;
}

QlsaCost qlsa_cost(double frobenius, double kappa, double epsilon, Index n_prime) {
  if (!(frobenius > 0.0 && kappa > 0.0 && epsilon > 0.0 && n_prime > 0)) {
    throw InputError("qlsa_cost: all inputs must be positive");
  }
  QlsaCost c;
  c.frobenius = frobenius;
  c.kappa = kappa;
  c.epsilon = epsilon;
  c.n_prime = n_prime;
  const double np = static_cast<double>(n_prime);
  c.prepare_cost = (frobenius + std::log2(np)) * kappa * std::log2(np / epsilon);
  c.norm_cost = c.prepare_cost / epsilon;
  return c;
}

}  // namespace qipm::qlsa

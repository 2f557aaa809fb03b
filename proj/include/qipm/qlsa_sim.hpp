#pragma once

#include <cstdint>

#include "qipm/types.hpp"

namespace qipm::qlsa {

/// How measurement outcomes are drawn. Both give exactly multinomial counts;
/// Multinomial draws them by conditional binomials in O(n′) regardless of the
/// copy count, PerShot samples every copy from a sampling tree.
enum class Sampling { Multinomial, PerShot };

struct TomographyOutcome {
  /// σᵢ√pᵢ; unit norm by construction.
  Vector estimate;
  std::int64_t copies_used = 0;
  /// Coordinates whose recovered sign disagrees with the truth (pᵢ > 0 only).
  int sign_flips_vs_truth = 0;
  std::uint64_t seed = 0;
};

/// Copies per measurement batch, ⌈36 n′ ln n′ / ε²⌉ (at least 1), capped at 2⁵³.
std::int64_t tomography_copies(Index n_prime, double epsilon);

/// Reads a real unit vector out through sampling: an amplitude batch gives
/// pᵢ = nᵢ/N, then a sign batch over outcomes (0,i)/(1,i) with weights
/// (dᵢ ± √pᵢ)²/4 (renormalized) sets σᵢ = +1 iff n(0,i) > 0.4 pᵢ N.
/// The two batches use independent streams derived from `seed`.
TomographyOutcome tomography(const Vector& d_true, double epsilon, std::uint64_t seed,
                             Sampling sampling = Sampling::Multinomial);

/// ε-multiplicative norm estimate: true_norm · (1 + u), u ~ U[−ε, ε].
double norm_estimate(double true_norm, double epsilon, std::uint64_t seed);

/// Swap-test acceptance: ‖a/‖a‖ − b/‖b‖‖₂ ≤ √7 ε (non-strict). Throws
/// InputError on a zero vector.
bool fidelity_check(const Vector& candidate, const Vector& exact, double epsilon);

struct QlsaCost {
  double frobenius = 0.0;
  double kappa = 0.0;
  double epsilon = 0.0;
  Index n_prime = 0;
  /// (‖M‖_F + log₂ n′) · κ · log₂(n′/ε)
  double prepare_cost = 0.0;
  /// prepare_cost / ε
  double norm_cost = 0.0;
};

/// Cost-model bookkeeping for one state preparation and one norm estimate.
/// The state-preparation time T_f is charged as log₂ n′ and every polylog
/// factor as a single log₂.
QlsaCost qlsa_cost(double frobenius, double kappa, double epsilon, Index n_prime);

}  // namespace qipm::qlsa

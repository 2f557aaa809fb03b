#pragma once

// Data-parallel kernels. Every kernel has a straightforward serial version,
// kept as the reference for tests and benchmarks, and an OpenMP version used
// by the library. Both produce bit-identical results: row/column outputs are
// computed independently, and sampled histograms are split into a fixed
// number of chunks with their own derived RNG streams, so the thread count
// never changes the arithmetic.

#include <cstdint>
#include <vector>

#include "qipm/kp_tree.hpp"
#include "qipm/types.hpp"

namespace qipm::kernels {

/// Number of independent RNG chunks a shot histogram is split into.
inline constexpr int kShotChunks = 64;

namespace serial {

/// y = M x
void matvec(const Matrix& M, const Vector& x, Vector& y);
/// y = Mᵀ x
void matvec_transposed(const Matrix& M, const Vector& x, Vector& y);
std::vector<SamplingTree> build_row_trees(const Matrix& M);
/// Draws `shots` samples from the tree and counts hits per leaf.
std::vector<std::int64_t> shot_histogram(const SamplingTree& tree, std::int64_t shots,
                                         std::uint64_t seed);

}  // namespace serial

namespace omp {

void matvec(const Matrix& M, const Vector& x, Vector& y);
void matvec_transposed(const Matrix& M, const Vector& x, Vector& y);
std::vector<SamplingTree> build_row_trees(const Matrix& M);
std::vector<std::int64_t> shot_histogram(const SamplingTree& tree, std::int64_t shots,
                                         std::uint64_t seed);

}  // namespace omp

}  // namespace qipm::kernels

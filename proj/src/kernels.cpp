#include "qipm/kernels.hpp"

#include <random>

#include "qipm/rng.hpp"

namespace qipm::kernels {
namespace {

double row_dot(const Matrix& M, Index i, const Vector& x) {
  double acc = 0.0;
  for (Index j = 0; j < M.cols(); ++j) acc += M(i, j) * x(j);
  return acc;
}

double col_dot(const Matrix& M, Index j, const Vector& x) {
  double acc = 0.0;
  for (Index i = 0; i < M.rows(); ++i) acc += M(i, j) * x(i);
  return acc;
}

SamplingTree row_tree(const Matrix& M, Index i) {
  const Vector row = M.row(i).transpose();
  return SamplingTree(row);
}

std::int64_t chunk_shots(std::int64_t shots, int chunk) {
  const std::int64_t base = shots / kShotChunks;
  return base + (chunk < shots % kShotChunks ? 1 : 0);
}

void run_chunk(const SamplingTree& tree, std::int64_t shots, std::uint64_t seed, int chunk,
               std::vector<std::int64_t>& counts) {
  Engine rng = make_engine(seed, "shots", static_cast<std::uint64_t>(chunk));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::int64_t mine = chunk_shots(shots, chunk);
  for (std::int64_t s = 0; s < mine; ++s) ++counts[tree.sample_with(unif(rng))];
}

}  // namespace

namespace serial {

void matvec(const Matrix& M, const Vector& x, Vector& y) {
  y.resize(M.rows());
  for (Index i = 0; i < M.rows(); ++i) y(i) = row_dot(M, i, x);
}

void matvec_transposed(const Matrix& M, const Vector& x, Vector& y) {
  y.resize(M.cols());
  for (Index j = 0; j < M.cols(); ++j) y(j) = col_dot(M, j, x);
}

std::vector<SamplingTree> build_row_trees(const Matrix& M) {
  std::vector<SamplingTree> rows(static_cast<std::size_t>(M.rows()));
  for (Index i = 0; i < M.rows(); ++i) rows[static_cast<std::size_t>(i)] = row_tree(M, i);
  return rows;
}

std::vector<std::int64_t> shot_histogram(const SamplingTree& tree, std::int64_t shots,
                                         std::uint64_t seed) {
  std::vector<std::int64_t> counts(tree.size(), 0);
  for (int c = 0; c < kShotChunks; ++c) run_chunk(tree, shots, seed, c, counts);
  return counts;
}

}  // namespace serial

namespace omp {

void matvec(const Matrix& M, const Vector& x, Vector& y) {
  y.resize(M.rows());
  const Index rows = M.rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i) y(i) = row_dot(M, i, x);
}

void matvec_transposed(const Matrix& M, const Vector& x, Vector& y) {
  y.resize(M.cols());
  const Index cols = M.cols();
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < cols; ++j) y(j) = col_dot(M, j, x);
}

std::vector<SamplingTree> build_row_trees(const Matrix& M) {
  std::vector<SamplingTree> rows(static_cast<std::size_t>(M.rows()));
  const Index n = M.rows();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = row_tree(M, i);
  return rows;
}

std::vector<std::int64_t> shot_histogram(const SamplingTree& tree, std::int64_t shots,
                                         std::uint64_t seed) {
  std::vector<std::vector<std::int64_t>> partial(kShotChunks,
                                                 std::vector<std::int64_t>(tree.size(), 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < kShotChunks; ++c) run_chunk(tree, shots, seed, c, partial[c]);

  std::vector<std::int64_t> counts(tree.size(), 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
  }
  return counts;
}

}  // namespace omp

}  // namespace qipm::kernels

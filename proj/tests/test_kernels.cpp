#include <doctest.h>

#include <numeric>
#include <random>

#include <omp.h>

#include "qipm/kernels.hpp"
#include "qipm/rng.hpp"

using namespace qipm;

namespace {

Matrix random_matrix(Index r, Index c, std::uint64_t seed) {
  Engine rng(seed);
  std::normal_distribution<double> z;
  return Matrix::NullaryExpr(r, c, [&] { return z(rng); });
}

}  // namespace

TEST_CASE("serial and OpenMP mat-vec agree bit for bit") {
  for (Index n : {1, 7, 64, 131}) {
    const Matrix M = random_matrix(n, n + 3, static_cast<std::uint64_t>(n));
    const Vector x = random_matrix(n + 3, 1, 99).col(0);
    const Vector xt = random_matrix(n, 1, 98).col(0);
    Vector a, b;
    kernels::serial::matvec(M, x, a);
    kernels::omp::matvec(M, x, b);
    CHECK(a == b);
    CHECK((a - M * x).norm() <= 1e-12 * (1 + a.norm()));
    kernels::serial::matvec_transposed(M, xt, a);
    kernels::omp::matvec_transposed(M, xt, b);
    CHECK(a == b);
    CHECK((a - M.transpose() * xt).norm() <= 1e-12 * (1 + a.norm()));
  }
}

TEST_CASE("row trees agree") {
  const Matrix M = random_matrix(33, 17, 4);
  const auto a = kernels::serial::build_row_trees(M);
  const auto b = kernels::omp::build_row_trees(M);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::vector<double>(a[i].nodes().begin(), a[i].nodes().end()) ==
          std::vector<double>(b[i].nodes().begin(), b[i].nodes().end()));
  }
}

TEST_CASE("shot histogram is independent of the thread count") {
  const SamplingTree tree(random_matrix(20, 1, 5).col(0));
  const auto ref = kernels::serial::shot_histogram(tree, 100003, 42);
  CHECK(std::accumulate(ref.begin(), ref.end(), std::int64_t{0}) == 100003);
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(kernels::omp::shot_histogram(tree, 100003, 42) == ref);
  }
  CHECK(kernels::omp::shot_histogram(tree, 100003, 43) != ref);
  CHECK(kernels::omp::shot_histogram(tree, 5, 1).size() == 20);
}

#include "qipm/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qipm/error.hpp"
#include "qipm/rng.hpp"

namespace qipm {

GeneratedInstance generate_instance(Index n, Index m, std::uint64_t seed, std::uint64_t index) {
  if (n < 1 || m < 1 || m > n) throw InputError("generate_instance needs 1 <= m <= n");
  Engine rng = make_engine(seed, "instance-gen", static_cast<std::uint64_t>(n) << 20 | static_cast<std::uint64_t>(m),
                           index);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> positive(0.5, 2.0);

  GeneratedInstance out;
  LpProblem& p = out.problem;
  p.A.resize(m, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) p.A(i, j) = entry(rng);
  }
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  out.x_star = Vector::Zero(n);
  out.s_star = Vector::Zero(n);
  for (Index r = 0; r < n; ++r) {
    const Index j = perm[static_cast<std::size_t>(r)];
    if (r < m) {
      out.x_star(j) = positive(rng);
    } else {
      out.s_star(j) = positive(rng);
    }
  }
  out.y_star.resize(m);
  for (Index i = 0; i < m; ++i) out.y_star(i) = entry(rng);

  p.b = p.A * out.x_star;
  p.c = p.A.transpose() * out.y_star + out.s_star;
  p.form = ProblemForm::StandardEquality;
  out.optimal_value = p.c.dot(out.x_star);
  return out;
}

LpProblem infeasible_primal_example() {
  LpProblem p;
  p.A = Matrix::Constant(1, 1, 1.0);
  p.b = Vector::Constant(1, -1.0);
  p.c = Vector::Constant(1, 1.0);
  return p;
}

LpProblem unbounded_primal_example() {
  LpProblem p;
  p.A.resize(1, 2);
  p.A << 1.0, -1.0;
  p.b = Vector::Zero(1);
  p.c.resize(2);
  p.c << -1.0, 0.0;
  return p;
}

}  // namespace qipm

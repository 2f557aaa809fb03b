#include "qipm/newton.hpp"

#include <cmath>

#include "qipm/central_path.hpp"
#include "qipm/error.hpp"

namespace qipm {

Direction Direction::unpack(const Vector& d, const BlockLayout& L) {
  if (d.size() != L.size()) throw InputError("direction vector has wrong length");
  Direction out;
  out.dy = d.segment(L.y(), L.m);
  out.dx = d.segment(L.x(), L.n);
  out.dtau = d(L.tau());
  out.dtheta = d(L.theta());
  out.ds = d.segment(L.s(), L.n);
  out.dk = d(L.k());
  return out;
}

Vector Direction::pack() const {
  Vector d(dy.size() + 2 * dx.size() + 3);
  d << dy, dx, dtau, dtheta, ds, dk;
  return d;
}

Vector Direction::dx_bar() const {
  Vector v(dx.size() + 1);
  v << dx, dtau;
  return v;
}

Vector Direction::ds_bar() const {
  Vector v(ds.size() + 1);
  v << ds, dk;
  return v;
}

std::vector<MatrixEntry> state_dependent_entries(const BlockLayout& L, const HsdState& v) {
  std::vector<MatrixEntry> out;
  out.reserve(static_cast<std::size_t>(2 * (L.n + 1)));
  for (Index i = 0; i < L.n; ++i) {
    out.push_back({L.s() + i, L.x() + i, v.s(i)});
    out.push_back({L.s() + i, L.s() + i, v.x(i)});
  }
  out.push_back({L.k(), L.tau(), v.k});
  out.push_back({L.k(), L.k(), v.tau});
  return out;
}

void refresh_state_entries(NewtonSystem& sys, const HsdState& v, int gamma) {
  const BlockLayout& L = sys.layout;
  for (const MatrixEntry& e : state_dependent_entries(L, v)) sys.M(e.row, e.col) = e.value;
  sys.gamma = gamma;
  sys.mu = mu(v);
  const double target = gamma * sys.mu;
  sys.f.segment(L.s(), L.n) = (target - v.x.cwiseProduct(v.s).array()).matrix();
  sys.f(L.k()) = target - v.tau * v.k;
}

NewtonSystem assemble(const HsdInstance& inst, const HsdState& v, int gamma) {
  if (gamma != 0 && gamma != 1) throw InputError("gamma must be 0 or 1");
  const LpProblem& p = inst.problem;
  BlockLayout L{inst.m(), inst.n()};
  const Index m = L.m;
  const Index n = L.n;

  NewtonSystem sys;
  sys.layout = L;
  sys.M = Matrix::Zero(L.size(), L.size());
  sys.f = Vector::Zero(L.size());
  Matrix& M = sys.M;

  // Row block y: A dx − b dτ + b̄ dθ
  M.block(L.y(), L.x(), m, n) = p.A;
  M.block(L.y(), L.tau(), m, 1) = -p.b;
  M.block(L.y(), L.theta(), m, 1) = inst.b_bar;

  // Row block x: −Aᵀ dy + c dτ − c̄ dθ − ds
  M.block(L.x(), L.y(), n, m) = -p.A.transpose();
  M.block(L.x(), L.tau(), n, 1) = p.c;
  M.block(L.x(), L.theta(), n, 1) = -inst.c_bar;
  M.block(L.x(), L.s(), n, n) = -Matrix::Identity(n, n);

  // Row τ: bᵀ dy − cᵀ dx + z̄ dθ − dk
  M.block(L.tau(), L.y(), 1, m) = p.b.transpose();
  M.block(L.tau(), L.x(), 1, n) = -p.c.transpose();
  M(L.tau(), L.theta()) = inst.z_bar;
  M(L.tau(), L.k()) = -1.0;

  // Row θ: −b̄ᵀ dy + c̄ᵀ dx − z̄ dτ
  M.block(L.theta(), L.y(), 1, m) = -inst.b_bar.transpose();
  M.block(L.theta(), L.x(), 1, n) = inst.c_bar.transpose();
  M(L.theta(), L.tau()) = -inst.z_bar;

  refresh_state_entries(sys, v, gamma);
  return sys;
}

Vector equality_residual(const HsdInstance& inst, const HsdState& v) {
  const LpProblem& p = inst.problem;
  const Index m = inst.m();
  const Index n = inst.n();
  Vector r(m + n + 2);
  r.head(m) = p.A * v.x - p.b * v.tau + inst.b_bar * v.theta;
  r.segment(m, n) = -p.A.transpose() * v.y + p.c * v.tau - inst.c_bar * v.theta - v.s;
  r(m + n) = p.b.dot(v.y) - p.c.dot(v.x) + inst.z_bar * v.theta - v.k;
  r(m + n + 1) = -inst.b_bar.dot(v.y) + inst.c_bar.dot(v.x) - inst.z_bar * v.tau + inst.normalization();
  return r;
}

Direction complementarity_shift(const HsdState& v, const Direction& dir, int gamma, double mu_value) {
  const double target = gamma * mu_value;
  Direction out = dir;
  const Index n = v.x.size();
  // X ds + S dx = γμ − xs, pair by pair.
  auto fix = [&](double x, double s, double& dx, double& ds) {
    if (x == 0.0 || s == 0.0) throw InputError("complementarity_shift: zero pivot coordinate");
    const double rhs = target - x * s;
    if (std::abs(x) >= std::abs(s)) {
      ds = (rhs - s * dx) / x;
    } else {
      dx = (rhs - x * ds) / s;
    }
  };
  for (Index i = 0; i < n; ++i) fix(v.x(i), v.s(i), out.dx(i), out.ds(i));
  fix(v.tau, v.k, out.dtau, out.dk);
  return out;
}

}  // namespace qipm

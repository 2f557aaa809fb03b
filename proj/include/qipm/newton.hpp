#pragma once

#include <vector>

#include "qipm/lp_model.hpp"

namespace qipm {

/// Offsets of the six variable blocks (y, x, τ, θ, s, k) inside the Newton
/// system; rows use the same offsets.
struct BlockLayout {
  Index m = 0;
  Index n = 0;

  Index y() const { return 0; }
  Index x() const { return m; }
  Index tau() const { return m + n; }
  Index theta() const { return m + n + 1; }
  Index s() const { return m + n + 2; }
  Index k() const { return m + 2 * n + 2; }
  Index size() const { return m + 2 * n + 3; }
};

struct Direction {
  Vector dy;
  Vector dx;
  double dtau = 0.0;
  double dtheta = 0.0;
  Vector ds;
  double dk = 0.0;

  static Direction unpack(const Vector& d, const BlockLayout& layout);
  Vector pack() const;
  Vector dx_bar() const;
  Vector ds_bar() const;
};

/// M d = f for one interior-point step. Rows, top to bottom:
///   [ 0    A    −b   b̄   0   0 ]        [ 0 ]
///   [ −Aᵀ  0    c   −c̄  −I   0 ]        [ 0 ]
///   [ bᵀ  −cᵀ   0    z̄   0  −1 ]  d  =  [ 0 ]
///   [ −b̄ᵀ  c̄ᵀ  −z̄   0   0   0 ]        [ 0 ]
///   [ 0    S    0    0   X   0 ]        [ γμ1 − Xs ]
///   [ 0    0    k    0   0   τ ]        [ γμ − τk ]
struct NewtonSystem {
  Matrix M;
  Vector f;
  int gamma = 0;
  double mu = 0.0;
  BlockLayout layout;
};

NewtonSystem assemble(const HsdInstance& instance, const HsdState& state, int gamma);

/// Refreshes only the state-dependent entries of an assembled system in
/// place: the 2(n+1) complementarity-row entries and the last n+1 RHS entries.
void refresh_state_entries(NewtonSystem& system, const HsdState& state, int gamma);

/// Residual of the m+n+2 equality rows of the embedding at `state`, in the
/// row order of the Newton system: Ax − bτ + b̄θ, −Aᵀy + cτ − c̄θ − s,
/// bᵀy − cᵀx + z̄θ − k, −b̄ᵀy + c̄ᵀx − z̄τ + (x0ᵀs0 + 1). A direction d with
/// upper rows M d = −r removes it in a full step.
Vector equality_residual(const HsdInstance& instance, const HsdState& state);

/// One state-dependent matrix entry (row, col, value).
struct MatrixEntry {
  Index row;
  Index col;
  double value;
};

/// The 2(n+1) matrix entries that depend on the iterate.
std::vector<MatrixEntry> state_dependent_entries(const BlockLayout& layout, const HsdState& state);

/// Forces the linearized complementarity rows X ds + S dx = γμ1 − Xs (and the
/// τ/k row) to hold exactly. Per pair (xᵢ, sᵢ) the component multiplied by
/// the larger of the two is recomputed: ds when |xᵢ| ≥ |sᵢ|, dx otherwise.
Direction complementarity_shift(const HsdState& state, const Direction& dir, int gamma, double mu);

}  // namespace qipm

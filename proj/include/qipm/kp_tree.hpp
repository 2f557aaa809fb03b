#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qipm/rng.hpp"
#include "qipm/types.hpp"

namespace qipm {

/// Binary tree of squared magnitudes with per-leaf signs, stored as an
/// implicit heap padded to a power of two. Node 1 is the root; the children
/// of node i are 2i and 2i+1; leaf j lives at capacity + j. Padding leaves
/// hold 0. Supports O(log n) point updates and exact L2 sampling:
/// index i is drawn with probability vᵢ² / ‖v‖².
class SamplingTree {
 public:
  SamplingTree() = default;
  explicit SamplingTree(std::span<const double> values);
  explicit SamplingTree(const Vector& values)
      : SamplingTree(std::span<const double>(values.data(), static_cast<std::size_t>(values.size()))) {}

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  /// ⌈log₂ capacity⌉: number of internal nodes on a leaf-to-root path.
  int depth() const { return depth_; }

  /// Σ vᵢ².
  double root() const { return nodes_.empty() ? 0.0 : nodes_[1]; }
  double leaf_weight(std::size_t i) const { return nodes_[capacity_ + i]; }
  int leaf_sign(std::size_t i) const { return signs_[i]; }
  /// Signed value, sign(vᵢ)·√(vᵢ²).
  double value(std::size_t i) const;
  /// Raw node array (index 0 unused), exposed for structural checks.
  std::span<const double> nodes() const { return nodes_; }

  /// Writes leaf i and refreshes its ancestors. Returns the number of nodes
  /// written (1 leaf + depth() ancestors). Throws std::out_of_range.
  int update(std::size_t i, double value);
  /// Writes a squared magnitude directly (used for the row-norm tree so its
  /// leaves equal the row roots bit for bit). Same return value as update().
  int set_weight(std::size_t i, double weight, int sign = 1);

  /// Draws a leaf index by top-down branching on partial sums. Throws
  /// InputError when the tree has zero mass.
  std::size_t sample(Engine& rng) const;
  /// Same descent driven by a uniform variate u ∈ [0, 1).
  std::size_t sample_with(double u) const;

  /// Largest |parent − (left + right)| over all internal nodes.
  double max_sum_violation() const;

 private:
  std::size_t size_ = 0;
  std::size_t capacity_ = 0;
  int depth_ = 0;
  std::vector<double> nodes_;
  std::vector<std::int8_t> signs_;
};

/// Row-wise store of a dense matrix: one SamplingTree per row plus a tree
/// over the squared row norms. norm_tree().root() is ‖M‖_F².
class MatrixStore {
 public:
  MatrixStore() = default;
  /// Builds all row trees (in parallel) and the row-norm tree.
  explicit MatrixStore(const Matrix& M);
  /// Assembles a store from prebuilt row trees of equal size.
  MatrixStore(std::vector<SamplingTree> rows, Index cols);

  Index rows() const { return static_cast<Index>(row_trees_.size()); }
  Index cols() const { return cols_; }
  const SamplingTree& row_tree(Index i) const { return row_trees_[static_cast<std::size_t>(i)]; }
  const SamplingTree& norm_tree() const { return norm_tree_; }
  double frobenius_squared() const { return norm_tree_.root(); }

  /// Updates M(i, j) and the row-norm leaf; returns matrix leaves written (1).
  int update(Index i, Index j, double value);

  struct Entry {
    Index row;
    Index col;
    double value;
  };
  /// Bulk path used for per-iteration refreshes. Returns matrix leaves written.
  int update_many(std::span<const Entry> entries);

  /// Samples (row, col) with probability M_ij² / ‖M‖_F².
  std::pair<Index, Index> row_sample(Engine& rng) const;

 private:
  Index cols_ = 0;
  std::vector<SamplingTree> row_trees_;
  SamplingTree norm_tree_;
};

}  // namespace qipm

#include "qipm/kp_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qipm/error.hpp"
#include "qipm/kernels.hpp"

namespace qipm {

SamplingTree::SamplingTree(std::span<const double> values) : size_(values.size()) {
  capacity_ = 1;
  depth_ = 0;
  while (capacity_ < std::max<std::size_t>(size_, 1)) {
    capacity_ <<= 1;
    ++depth_;
  }
  nodes_.assign(2 * capacity_, 0.0);
  signs_.assign(size_, 1);
  for (std::size_t j = 0; j < size_; ++j) {
    nodes_[capacity_ + j] = values[j] * values[j];
    signs_[j] = values[j] < 0.0 ? -1 : 1;
  }
  for (std::size_t i = capacity_ - 1; i >= 1; --i) nodes_[i] = nodes_[2 * i] + nodes_[2 * i + 1];
}

double SamplingTree::value(std::size_t i) const {
  return signs_[i] * std::sqrt(nodes_[capacity_ + i]);
}

int SamplingTree::set_weight(std::size_t i, double weight, int sign) {
  if (i >= size_) {
    throw std::out_of_range("SamplingTree index " + std::to_string(i) + " out of range");
  }
  std::size_t node = capacity_ + i;
  nodes_[node] = weight;
  signs_[i] = sign < 0 ? -1 : 1;
  int written = 1;
  for (node >>= 1; node >= 1; node >>= 1) {
    nodes_[node] = nodes_[2 * node] + nodes_[2 * node + 1];
    ++written;
  }
  return written;
}

int SamplingTree::update(std::size_t i, double value) {
  return set_weight(i, value * value, value < 0.0 ? -1 : 1);
}

std::size_t SamplingTree::sample_with(double u) const {
  if (!(root() > 0.0)) throw InputError("cannot sample from a zero-norm tree");
  double target = u * root();
  std::size_t node = 1;
  while (node < capacity_) {
    const double left = nodes_[2 * node];
    const double right = nodes_[2 * node + 1];
    bool go_left = target < left;
    // Rounding can point at an empty subtree; never descend into one.
    if (go_left && left <= 0.0) go_left = false;
    if (!go_left && right <= 0.0) go_left = true;
    if (go_left) {
      node = 2 * node;
    } else {
      target -= left;
      node = 2 * node + 1;
    }
  }
  return node - capacity_;
}

std::size_t SamplingTree::sample(Engine& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return sample_with(unif(rng));
}

double SamplingTree::max_sum_violation() const {
  double worst = 0.0;
  for (std::size_t i = 1; i < capacity_; ++i) {
    worst = std::max(worst, std::abs(nodes_[i] - (nodes_[2 * i] + nodes_[2 * i + 1])));
  }
  return worst;
}

MatrixStore::MatrixStore(const Matrix& M)
    : MatrixStore(kernels::omp::build_row_trees(M), M.cols()) {}

MatrixStore::MatrixStore(std::vector<SamplingTree> rows, Index cols)
    : cols_(cols), row_trees_(std::move(rows)) {
  std::vector<double> zeros(row_trees_.size(), 0.0);
  norm_tree_ = SamplingTree(std::span<const double>(zeros));
  for (std::size_t i = 0; i < row_trees_.size(); ++i) {
    if (static_cast<Index>(row_trees_[i].size()) != cols_) {
      throw InputError("MatrixStore rows must all have the same length");
    }
    norm_tree_.set_weight(i, row_trees_[i].root());
  }
}

int MatrixStore::update(Index i, Index j, double value) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols_) {
    throw std::out_of_range("MatrixStore entry out of range");
  }
  SamplingTree& row = row_trees_[static_cast<std::size_t>(i)];
  row.update(static_cast<std::size_t>(j), value);
  norm_tree_.set_weight(static_cast<std::size_t>(i), row.root());
  return 1;
}

int MatrixStore::update_many(std::span<const Entry> entries) {
  int written = 0;
  for (const Entry& e : entries) written += update(e.row, e.col, e.value);
  return written;
}

std::pair<Index, Index> MatrixStore::row_sample(Engine& rng) const {
  if (!(norm_tree_.root() > 0.0)) throw InputError("cannot sample from a zero matrix");
  const std::size_t i = norm_tree_.sample(rng);
  const std::size_t j = row_trees_[i].sample(rng);
  return {static_cast<Index>(i), static_cast<Index>(j)};
}

}  // namespace qipm

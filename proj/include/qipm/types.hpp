#pragma once

#include <Eigen/Dense>

namespace qipm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace qipm

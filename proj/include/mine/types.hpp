#pragma once

#include <Eigen/Dense>

namespace mine {

using Arr1D = Eigen::ArrayXd;
using Arr1I = Eigen::ArrayXi;
using Mat2D = Eigen::MatrixXd;
using Mat2I = Eigen::MatrixXi;

}  // namespace mine

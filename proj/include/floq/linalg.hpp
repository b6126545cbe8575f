#pragma once

#include <vector>

#include <Eigen/Dense>

namespace floq {

/// Eigenvalues of a Hermitian matrix, ascending (LAPACK zheevd, values
/// only; reads the lower triangle). BLAS is pinned to one thread on
/// first use so repeated runs are bitwise reproducible regardless of
/// caller-side concurrency.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a);

}  // namespace floq

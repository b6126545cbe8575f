#include "floq/linalg.hpp"

#include <complex>
#include <mutex>
#include <string>

#include "floq/errors.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float_real(z) ((z).real())
#define lapack_complex_float_imag(z) ((z).imag())
#define lapack_complex_double_real(z) ((z).real())
#define lapack_complex_double_imag(z) ((z).imag())
#include <lapacke.h>

extern "C" void openblas_set_num_threads(int);

namespace floq {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw SizeError("hermitian_eigenvalues: matrix not square");
  }
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return {};

  // One BLAS thread, always: threaded reductions would reorder the
  // floating-point sums and break bitwise reproducibility across runs.
  static std::once_flag blas_once;
  std::call_once(blas_once, [] { openblas_set_num_threads(1); });

  Eigen::MatrixXcd work = a;  // zheevd destroys its input
  std::vector<double> w(static_cast<size_t>(n));
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                         work.data(), n, w.data());
  if (info != 0) {
    throw FloqError("hermitian_eigenvalues: zheevd failed (info=" +
                    std::to_string(info) + ")");
  }
  return w;
}

}  // namespace floq

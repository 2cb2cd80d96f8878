#pragma once

// Dense complex linear algebra on small composite Hilbert spaces.
//
// Every operator carries the dimensions of its tensor factors; structural
// operations (products, partial traces) validate them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "infocons/errors.hpp"

namespace infocons {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using Dims = std::vector<std::size_t>;

namespace tolerance {
inline constexpr double hermitian = 1e-10;
inline constexpr double eigen_reconstruction = 1e-10;
}  // namespace tolerance

inline std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

inline std::string dims_to_string(const Dims& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

inline void validate_dims(const Dims& dims) {
  if (dims.empty()) throw DimensionError("subsystem dimension list is empty");
  for (auto d : dims)
    if (d == 0) throw DimensionError("subsystem dimension must be >= 1");
}

/// Largest entry modulus of a matrix.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Square complex matrix over a composite space with recorded subsystem dims.
class ComplexOperator {
 public:
  ComplexOperator(Dims dims, Matrix entries) : dims_(std::move(dims)), m_(std::move(entries)) {
    validate_dims(dims_);
    const auto d = total_dimension(dims_);
    if (static_cast<std::size_t>(m_.rows()) != d || static_cast<std::size_t>(m_.cols()) != d)
      throw DimensionError("operator is " + std::to_string(m_.rows()) + "x" +
                           std::to_string(m_.cols()) + " but dims " + dims_to_string(dims_) +
                           " require " + std::to_string(d) + "x" + std::to_string(d));
    if (!m_.allFinite()) throw ValidationError("operator has non-finite entries");
  }

  static ComplexOperator identity(Dims dims) {
    validate_dims(dims);
    const auto d = static_cast<Eigen::Index>(total_dimension(dims));
    return {std::move(dims), Matrix::Identity(d, d)};
  }

  static ComplexOperator zero(Dims dims) {
    validate_dims(dims);
    const auto d = static_cast<Eigen::Index>(total_dimension(dims));
    return {std::move(dims), Matrix::Zero(d, d)};
  }

  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Complex trace() const { return m_.trace(); }
  ComplexOperator adjoint() const { return {dims_, m_.adjoint()}; }

  /// Max-entry modulus of A - A†.
  double hermiticity_defect() const { return max_abs(m_ - m_.adjoint()); }

  /// (A + A†)/2, same dims.
  ComplexOperator hermitian_part() const { return {dims_, (m_ + m_.adjoint()) * 0.5}; }

  ComplexOperator with_dims(Dims dims) const { return {std::move(dims), m_}; }

 private:
  Dims dims_;
  Matrix m_;
};

inline void require_same_dims(const ComplexOperator& a, const ComplexOperator& b, const char* what) {
  if (a.dims() != b.dims())
    throw DimensionError(std::string(what) + ": dims " + dims_to_string(a.dims()) + " vs " +
                         dims_to_string(b.dims()));
}

inline ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dims(a, b, "operator product");
  return {a.dims(), a.matrix() * b.matrix()};
}

inline ComplexOperator operator+(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dims(a, b, "operator sum");
  return {a.dims(), a.matrix() + b.matrix()};
}

inline ComplexOperator operator-(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dims(a, b, "operator difference");
  return {a.dims(), a.matrix() - b.matrix()};
}

inline ComplexOperator operator*(Complex s, const ComplexOperator& a) { return {a.dims(), s * a.matrix()}; }
inline ComplexOperator operator*(double s, const ComplexOperator& a) { return {a.dims(), s * a.matrix()}; }

/// Max-entry modulus of a - b. Dims must agree.
inline double max_abs_diff(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dims(a, b, "max_abs_diff");
  return max_abs(a.matrix() - b.matrix());
}

/// Kronecker product of dense matrices; the left factor indexes the slow block.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {std::move(dims), kron(a.matrix(), b.matrix())};
}

/// Traces out every subsystem not listed in `keep`. Kept subsystems appear in
/// ascending index order regardless of the order given.
inline ComplexOperator partial_trace(const ComplexOperator& a, std::vector<std::size_t> keep) {
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const auto& dims = a.dims();
  const auto n = dims.size();
  if (keep.back() >= n)
    throw DimensionError("partial_trace: subsystem index " + std::to_string(keep.back()) +
                         " out of range for dims " + dims_to_string(dims));

  std::vector<bool> kept(n, false);
  for (auto k : keep) kept[k] = true;
  Dims out_dims;
  for (auto k : keep) out_dims.push_back(dims[k]);

  // Row-major strides of the full and reduced spaces.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) stride[i - 1] = stride[i] * dims[i];

  const std::size_t d = a.dim();
  std::vector<std::size_t> kept_index(d, 0);
  std::vector<std::size_t> traced_index(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t k_idx = 0, t_idx = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto digit = (r / stride[s]) % dims[s];
      if (kept[s])
        k_idx = k_idx * dims[s] + digit;
      else
        t_idx = t_idx * dims[s] + digit;
    }
    kept_index[r] = k_idx;
    traced_index[r] = t_idx;
  }

  const auto out_d = static_cast<Eigen::Index>(total_dimension(out_dims));
  Matrix out = Matrix::Zero(out_d, out_d);
  const auto& m = a.matrix();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (traced_index[r] == traced_index[c])
        out(static_cast<Eigen::Index>(kept_index[r]), static_cast<Eigen::Index>(kept_index[c])) +=
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return {std::move(out_dims), std::move(out)};
}

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  /// V diag(λ) V†.
  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

/// Decomposes a Hermitian operator. Inputs within the Hermiticity tolerance are
/// symmetrized first; anything further off is rejected.
inline EigenSystem hermitian_eigensystem(const ComplexOperator& a) {
  const double defect = a.hermiticity_defect();
  if (defect > tolerance::hermitian)
    throw ValidationError("hermitian_eigensystem: input is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  const Eigen::MatrixXcd sym = (a.matrix() + a.matrix().adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("hermitian_eigensystem: decomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace infocons

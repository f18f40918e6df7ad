#include "qwalk/op_matrix.hpp"

#include <cmath>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

long long isqrt_exact(long long v) {
  if (v < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

std::string to_string(IndexSpace s) { return s == IndexSpace::Vertex ? "vertex" : "arc"; }

OpMatrix::OpMatrix(IndexSpace row_space, std::size_t rows, IndexSpace col_space, std::size_t cols)
    : row_space_(row_space), col_space_(col_space), rows_(rows), cols_(cols), data_(rows * cols) {}

OpMatrix OpMatrix::identity(IndexSpace space, std::size_t n) {
  OpMatrix m(space, n, space, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, CycScalar(1));
  return m;
}

OpMatrix OpMatrix::all_ones(IndexSpace space, std::size_t n) {
  OpMatrix m(space, n, space, n);
  for (auto& x : m.data_) x = CycScalar(1);
  return m;
}

void OpMatrix::check_same_shape(const OpMatrix& rhs, const char* op) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || row_space_ != rhs.row_space_ ||
      col_space_ != rhs.col_space_) {
    throw PreconditionError(std::string("operator shape mismatch in ") + op);
  }
}

OpMatrix OpMatrix::adjoint() const {
  OpMatrix out(col_space_, cols_, row_space_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (!x.is_zero()) out.set(j, i, x.conj());
    }
  return out;
}

OpMatrix OpMatrix::transposed() const {
  OpMatrix out(col_space_, cols_, row_space_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

OpMatrix OpMatrix::hadamard(const OpMatrix& rhs) const {
  check_same_shape(rhs, "hadamard product");
  OpMatrix out(row_space_, rows_, col_space_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].is_zero() && !rhs.data_[k].is_zero()) out.data_[k] = data_[k] * rhs.data_[k];
  }
  return out;
}

OpMatrix OpMatrix::scaled(const CycScalar& s) const {
  OpMatrix out(row_space_, rows_, col_space_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].is_zero()) out.data_[k] = data_[k] * s;
  }
  return out;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& rhs) {
  check_same_shape(rhs, "sum");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (rhs.data_[k].is_zero()) continue;
    if (data_[k].is_zero()) {
      data_[k] = rhs.data_[k];
    } else {
      data_[k] += rhs.data_[k];
    }
  }
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& rhs) {
  check_same_shape(rhs, "difference");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
  }
  return *this;
}

OpMatrix operator*(const OpMatrix& lhs, const OpMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_ || lhs.col_space_ != rhs.row_space_) {
    throw PreconditionError("operator product: inner index spaces disagree (" +
                            to_string(lhs.col_space_) + " x" + std::to_string(lhs.cols_) +
                            " vs " + to_string(rhs.row_space_) + " x" +
                            std::to_string(rhs.rows_) + ")");
  }
  OpMatrix out(lhs.row_space_, lhs.rows_, rhs.col_space_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const CycScalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const CycScalar& b = rhs(k, j);
        if (b.is_zero()) continue;
        CycScalar& dst = out.at(i, j);
        if (dst.is_zero()) {
          dst = a * b;
        } else {
          dst += a * b;
        }
      }
    }
  }
  return out;
}

bool operator==(const OpMatrix& lhs, const OpMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_ || lhs.row_space_ != rhs.row_space_ ||
      lhs.col_space_ != rhs.col_space_) {
    return false;
  }
  for (std::size_t k = 0; k < lhs.data_.size(); ++k) {
    if (!(lhs.data_[k] == rhs.data_[k])) return false;
  }
  return true;
}

bool OpMatrix::is_self_adjoint() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
    }
  return true;
}

bool OpMatrix::is_unitary() const {
  if (!is_square()) return false;
  return (*this) * adjoint() == identity(row_space_, rows_);
}

bool OpMatrix::all_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

CycScalar OpMatrix::trace() const {
  CycScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Eigen::MatrixXcd OpMatrix::to_complex() const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).to_complex();
  return m;
}

// -- SqrtScaledMatrix ---------------------------------------------------------

SqrtScaledMatrix::SqrtScaledMatrix(OpMatrix core)
    : row_scale_(core.rows(), 1), core_(std::move(core)), col_scale_(core_.cols(), 1) {}

SqrtScaledMatrix::SqrtScaledMatrix(std::vector<long long> row_scale, OpMatrix core,
                                   std::vector<long long> col_scale)
    : row_scale_(std::move(row_scale)), core_(std::move(core)), col_scale_(std::move(col_scale)) {
  if (row_scale_.size() != core_.rows() || col_scale_.size() != core_.cols()) {
    throw PreconditionError("scale vector length does not match the operator");
  }
  for (long long s : row_scale_)
    if (s <= 0) throw PreconditionError("scales must be positive");
  for (long long s : col_scale_)
    if (s <= 0) throw PreconditionError("scales must be positive");
}

SqrtScaledMatrix SqrtScaledMatrix::adjoint() const {
  return SqrtScaledMatrix(col_scale_, core_.adjoint(), row_scale_);
}

SqrtScaledMatrix operator*(const SqrtScaledMatrix& lhs, const SqrtScaledMatrix& rhs) {
  const std::size_t inner = lhs.cols();
  if (inner != rhs.rows()) throw PreconditionError("scaled product: dimension mismatch");
  // (A c^{-1/2}) (r^{-1/2} B) = A diag(1/sqrt(c r)) B, exact when c r is square.
  OpMatrix mid(lhs.core_.col_space(), inner, rhs.core_.row_space(), inner);
  for (std::size_t k = 0; k < inner; ++k) {
    const long long prod = lhs.col_scale_[k] * rhs.row_scale_[k];
    const long long root = isqrt_exact(prod);
    if (root < 0) {
      throw PreconditionError("scaled product leaves the cyclotomic field at index " +
                              std::to_string(k));
    }
    mid.set(k, k, CycScalar(Rational(1, root)));
  }
  return SqrtScaledMatrix(lhs.row_scale_, lhs.core_ * mid * rhs.core_, rhs.col_scale_);
}

bool operator==(const SqrtScaledMatrix& lhs, const SqrtScaledMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      const CycScalar& a = lhs.core_(i, j);
      const CycScalar& b = rhs.core_(i, j);
      if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() != b.is_zero()) return false;
        continue;
      }
      const long long p = lhs.row_scale_[i] * lhs.col_scale_[j];
      const long long pp = rhs.row_scale_[i] * rhs.col_scale_[j];
      if (p == pp) {
        if (!(a == b)) return false;
        continue;
      }
      // a / sqrt(p) == b / sqrt(pp)  iff  a^2 pp == b^2 p and a conj(b) > 0.
      if (!(a * a * CycScalar(pp) == b * b * CycScalar(p))) return false;
      if ((a * b.conj()).real_part_sign() <= 0) return false;
    }
  }
  return true;
}

bool SqrtScaledMatrix::is_exact() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!core_(i, j).is_zero() && isqrt_exact(row_scale_[i] * col_scale_[j]) < 0) return false;
    }
  return true;
}

OpMatrix SqrtScaledMatrix::to_exact() const {
  OpMatrix out(core_.row_space(), rows(), core_.col_space(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const CycScalar& x = core_(i, j);
      if (x.is_zero()) continue;
      const long long root = isqrt_exact(row_scale_[i] * col_scale_[j]);
      if (root < 0) throw PreconditionError("entry is not in the cyclotomic field");
      out.set(i, j, x * CycScalar(Rational(1, root)));
    }
  return out;
}

OpMatrix SqrtScaledMatrix::similar_unscaled() const {
  if (row_scale_ != col_scale_) {
    throw PreconditionError("similarity needs matching row and column scales");
  }
  OpMatrix out(core_.row_space(), rows(), core_.col_space(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const CycScalar& x = core_(i, j);
      if (!x.is_zero()) out.set(i, j, x * CycScalar(Rational(1, row_scale_[i])));
    }
  return out;
}

bool SqrtScaledMatrix::is_self_adjoint() const {
  if (rows() != cols()) return false;
  return *this == adjoint();
}

Eigen::MatrixXcd SqrtScaledMatrix::to_complex() const {
  Eigen::MatrixXcd m = core_.to_complex();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) /= std::sqrt(static_cast<double>(row_scale_[i]) * static_cast<double>(col_scale_[j]));
  return m;
}

// -- IntMatrix -------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n);
  std::fill(m.data_.begin(), m.data_.end(), 1);
  return m;
}

IntMatrix IntMatrix::hadamard(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * rhs.data_[k];
  return out;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  const std::size_t n = lhs.n_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += a * rhs(k, j);
    }
  return out;
}

OpMatrix IntMatrix::to_op(IndexSpace space) const {
  OpMatrix m(space, n_, space, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0) m.set(i, j, CycScalar(static_cast<long long>((*this)(i, j))));
  return m;
}

}  // namespace qwalk

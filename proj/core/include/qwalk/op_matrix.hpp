#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/cyclotomic.hpp"

namespace qwalk {

/// What a matrix dimension is indexed by.
enum class IndexSpace { Vertex, Arc };

std::string to_string(IndexSpace s);

/// Dense matrix over the cyclotomic field with tagged row and column spaces.
///
/// Products check that the inner index spaces and dimensions agree.
class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(IndexSpace row_space, std::size_t rows, IndexSpace col_space, std::size_t cols);

  static OpMatrix identity(IndexSpace space, std::size_t n);
  static OpMatrix all_ones(IndexSpace space, std::size_t n);
  static OpMatrix zero(IndexSpace space, std::size_t n) { return OpMatrix(space, n, space, n); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  IndexSpace row_space() const noexcept { return row_space_; }
  IndexSpace col_space() const noexcept { return col_space_; }
  bool is_square() const noexcept { return rows_ == cols_ && row_space_ == col_space_; }

  const CycScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  CycScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, CycScalar v) { data_[i * cols_ + j] = std::move(v); }

  OpMatrix adjoint() const;
  OpMatrix transposed() const;
  OpMatrix hadamard(const OpMatrix& rhs) const;
  OpMatrix scaled(const CycScalar& s) const;

  OpMatrix& operator+=(const OpMatrix& rhs);
  OpMatrix& operator-=(const OpMatrix& rhs);
  friend OpMatrix operator+(OpMatrix lhs, const OpMatrix& rhs) { return lhs += rhs; }
  friend OpMatrix operator-(OpMatrix lhs, const OpMatrix& rhs) { return lhs -= rhs; }
  friend OpMatrix operator*(const OpMatrix& lhs, const OpMatrix& rhs);
  friend bool operator==(const OpMatrix& lhs, const OpMatrix& rhs);

  bool is_self_adjoint() const;
  /// M M^* = I exactly.
  bool is_unitary() const;
  bool all_rational() const;
  CycScalar trace() const;

  Eigen::MatrixXcd to_complex() const;

 private:
  void check_same_shape(const OpMatrix& rhs, const char* op) const;

  IndexSpace row_space_ = IndexSpace::Vertex;
  IndexSpace col_space_ = IndexSpace::Vertex;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

/// diag(row_scale)^{-1/2} * core * diag(col_scale)^{-1/2}.
///
/// Entries such as 1/sqrt(deg x deg y) leave the cyclotomic field; keeping the
/// square-root factors outside the core keeps every stored entry exact.
/// Products are only formed when the inner scales multiply to perfect squares,
/// which is the case for every product the walk operators use.
class SqrtScaledMatrix {
 public:
  SqrtScaledMatrix() = default;
  explicit SqrtScaledMatrix(OpMatrix core);
  SqrtScaledMatrix(std::vector<long long> row_scale, OpMatrix core,
                   std::vector<long long> col_scale);

  const OpMatrix& core() const noexcept { return core_; }
  const std::vector<long long>& row_scale() const noexcept { return row_scale_; }
  const std::vector<long long>& col_scale() const noexcept { return col_scale_; }
  std::size_t rows() const noexcept { return core_.rows(); }
  std::size_t cols() const noexcept { return core_.cols(); }

  SqrtScaledMatrix adjoint() const;
  friend SqrtScaledMatrix operator*(const SqrtScaledMatrix& lhs, const SqrtScaledMatrix& rhs);
  /// Exact entrywise equality of the represented values.
  friend bool operator==(const SqrtScaledMatrix& lhs, const SqrtScaledMatrix& rhs);

  /// Whether every represented entry lies in the cyclotomic field.
  bool is_exact() const;
  /// The represented matrix; throws when !is_exact().
  OpMatrix to_exact() const;
  /// diag(s)^{-1} * core, similar to the represented matrix when the row and
  /// column scales coincide.
  OpMatrix similar_unscaled() const;
  bool is_self_adjoint() const;

  Eigen::MatrixXcd to_complex() const;

 private:
  std::vector<long long> row_scale_;
  OpMatrix core_;
  std::vector<long long> col_scale_;
};

/// Small dense integer matrix used for supports and their products.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  IntMatrix hadamard(const IntMatrix& rhs) const;
  std::int64_t trace() const;
  bool is_zero() const;

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  OpMatrix to_op(IndexSpace space) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace qwalk

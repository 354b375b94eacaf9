#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ringgrp/presentation.hpp"

namespace ringgrp {

/// Dense matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Gaussian elimination). Square only.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;  ///< rows x rows, unimodular
  IntMatrix v;  ///< cols x cols, unimodular; u * m * v == d
};

/// Diagonal d_1 | d_2 | ... with d_i >= 0. The pivot is the entry of least
/// nonzero absolute value, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
  std::vector<Integer> torsion;  ///< each > 1, each dividing the next
  std::size_t free_rank = 0;

  /// `Z^r + Z/d1 + Z/d2 ...`; the trivial group prints as `0`.
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Row i is the exponent-sum vector of relator i.
IntMatrix relator_matrix(const Presentation& p);

/// Invariants of Z^n / (row space) for an integer matrix with n columns.
AbelianInvariants invariants_of(const IntMatrix& relations);

AbelianInvariants abelianization(const Presentation& p);

}  // namespace ringgrp

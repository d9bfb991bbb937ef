#pragma once

// Dense exact linear-algebra kernels.
//
// Each kernel comes as a serial reference and an OpenMP version. Both produce
// bit-identical output: reduced row echelon form is unique, and minors are
// written into slots fixed by their (row subset, column subset) index.

#include <cstddef>
#include <optional>
#include <vector>

#include "divcert/ring.hpp"

namespace divcert {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing

  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm rref_serial(RationalMatrix m);
EchelonForm rref_parallel(RationalMatrix m);
/// Dispatches to the parallel kernel.
EchelonForm rref(RationalMatrix m);

/// Some solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;  // [row][col]

Polynomial determinant(const PolynomialMatrix& m, const RingPtr& ring);

/// All r x r minors in row-major (row subset, column subset) lexicographic
/// order, zeros included. r = 0 yields the single minor 1.
std::vector<Polynomial> minors_serial(const PolynomialMatrix& m, const RingPtr& ring, int r);
std::vector<Polynomial> minors_parallel(const PolynomialMatrix& m, const RingPtr& ring, int r);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace divcert

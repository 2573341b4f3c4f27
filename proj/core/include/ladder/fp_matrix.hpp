#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ladder/fp.hpp"

namespace ladder {

// Dense row-major matrix of residues sharing a single odd prime modulus.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(u32 p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMatrix identity(u32 p, std::size_t n);
  // Entries may be any signed values; they are reduced into [0, p).
  static FpMatrix from_rows(u32 p,
                            const std::vector<std::vector<long long>>& rows);

  u32 modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  u32& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<u32> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const u32> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const u32> v);
  std::vector<u32> col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const u32> v);

  std::vector<u32> mul_vec(std::span<const u32> x) const;  // this * x
  FpMatrix mul(const FpMatrix& rhs) const;
  FpMatrix transposed() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  u32 p_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u32> a_;
};

struct RrefResult {
  FpMatrix m;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row-echelon form with deterministic pivoting: pivots are found
// by scanning columns left to right and rows top to bottom.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Basis of {x : m x = 0} in echelon (free-variable) normal form: one
// vector per free column in increasing column order, with a 1 in the free
// coordinate and zeros in every other free coordinate.
std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m);

// Coefficients expressing v in the given basis, or nullopt when v is not
// in the span. Coefficients for basis vectors that rref leaves free are 0,
// so the answer is deterministic. Throws DimensionMismatch on ragged input.
std::optional<std::vector<u32>> in_span(
    const std::vector<std::vector<u32>>& basis, std::span<const u32> v,
    u32 p);

// Incremental row-echelon accumulator: rank tracking, membership tests and
// greedy independent-subset selection without re-eliminating from scratch.
class EchelonBasis {
 public:
  EchelonBasis(u32 p, std::size_t cols) : p_(p), cols_(cols) {}

  // Reduces v against the current rows; if a nonzero residual remains it
  // is normalized and inserted. Returns true when v was independent.
  bool add(std::span<const u32> v);
  // Residual of v after elimination (zero iff v is in the row span).
  std::vector<u32> reduce(std::span<const u32> v) const;
  bool contains(std::span<const u32> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  FpMatrix to_matrix() const;

 private:
  u32 p_;
  std::size_t cols_;
  std::vector<std::vector<u32>> rows_;   // kept sorted by pivot column
  std::vector<std::size_t> pivot_cols_;  // parallel to rows_
};

}  // namespace ladder

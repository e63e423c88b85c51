#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adic/ring.hpp"

namespace adic {

// Dense row-major matrix of exact ring elements. Zero row or column counts
// are legal everywhere.
class ExactMatrix {
 public:
  ExactMatrix() : ring_(Ring::integers()), rows_(0), cols_(0) {}
  ExactMatrix(const Ring& ring, int rows, int cols);

  static ExactMatrix identity(const Ring& ring, int n);
  static ExactMatrix diagonal(const Ring& ring, int rows, int cols,
                              const std::vector<RingElement>& d);
  // Square diagonal matrix from the given entries.
  static ExactMatrix diagonal_square(const Ring& ring,
                                     const std::vector<RingElement>& d);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const RingElement& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const RingElement& v);

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const RingElement& c) const;

  // Row/column elementary operations (used by the SNF driver).
  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const RingElement& f);
  void add_col_multiple(int dst, int src, const RingElement& f);
  void scale_row(int i, const RingElement& unit);
  void scale_col(int j, const RingElement& unit);

  ExactMatrix columns(const std::vector<int>& which) const;
  std::vector<RingElement> column(int j) const;
  // Rows [r0, r0+n) as a new matrix.
  ExactMatrix row_block(int r0, int n) const;

  std::string to_string() const;

 private:
  int idx(int i, int j) const { return i * cols_ + j; }
  Ring ring_;
  int rows_, cols_;
  std::vector<RingElement> e_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b);
// Block diagonal assembly of two matrices.
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);

// U*A*V = S with S rectangular-diagonal, each diagonal entry dividing the
// next, entries unit-normalized, and det(U), det(V) units.
struct SNFResult {
  ExactMatrix U, S, V;
  std::vector<RingElement> diagonal() const;
};

SNFResult smith_normal_form(const ExactMatrix& A);

// Exact determinant by fraction-free (Bareiss) elimination.
RingElement determinant(const ExactMatrix& A);

// Solves A x = b exactly; caches the SNF so many right-hand sides against
// the same matrix are cheap.
class LinearSolver {
 public:
  explicit LinearSolver(const ExactMatrix& A);
  std::optional<std::vector<RingElement>> solve(
      const std::vector<RingElement>& b) const;
  bool solvable(const std::vector<RingElement>& b) const;

 private:
  ExactMatrix A_;
  SNFResult snf_;
};

// Columns form a free basis of ker(A : R^cols -> R^rows).
ExactMatrix kernel_basis(const ExactMatrix& A);

}  // namespace adic

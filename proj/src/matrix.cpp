#include "adic/matrix.hpp"

#include <sstream>

namespace adic {

ExactMatrix::ExactMatrix(const Ring& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, ring.zero());
}

ExactMatrix ExactMatrix::identity(const Ring& ring, int n) {
  ExactMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, ring.one());
  return m;
}

ExactMatrix ExactMatrix::diagonal(const Ring& ring, int rows, int cols,
                                  const std::vector<RingElement>& d) {
  ExactMatrix m(ring, rows, cols);
  for (size_t i = 0; i < d.size(); ++i) {
    if (static_cast<int>(i) >= rows || static_cast<int>(i) >= cols)
      throw Error("diagonal entries exceed matrix shape");
    m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal_square(const Ring& ring,
                                         const std::vector<RingElement>& d) {
  int n = static_cast<int>(d.size());
  return diagonal(ring, n, n, d);
}

void ExactMatrix::set(int i, int j, const RingElement& v) {
  if (v.ring() != ring_) throw PreconditionError("matrix entry ring mismatch");
  e_[idx(i, j)] = v;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

ExactMatrix ExactMatrix::scaled(const RingElement& c) const {
  ExactMatrix m(ring_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, c * at(i, j));
  return m;
}

void ExactMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(e_[idx(i, c)], e_[idx(j, c)]);
}

void ExactMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(e_[idx(r, i)], e_[idx(r, j)]);
}

void ExactMatrix::add_row_multiple(int dst, int src, const RingElement& f) {
  for (int c = 0; c < cols_; ++c)
    e_[idx(dst, c)] = e_[idx(dst, c)] + f * e_[idx(src, c)];
}

void ExactMatrix::add_col_multiple(int dst, int src, const RingElement& f) {
  for (int r = 0; r < rows_; ++r)
    e_[idx(r, dst)] = e_[idx(r, dst)] + f * e_[idx(r, src)];
}

void ExactMatrix::scale_row(int i, const RingElement& unit) {
  for (int c = 0; c < cols_; ++c) e_[idx(i, c)] = unit * e_[idx(i, c)];
}

void ExactMatrix::scale_col(int j, const RingElement& unit) {
  for (int r = 0; r < rows_; ++r) e_[idx(r, j)] = unit * e_[idx(r, j)];
}

ExactMatrix ExactMatrix::columns(const std::vector<int>& which) const {
  ExactMatrix m(ring_, rows_, static_cast<int>(which.size()));
  for (size_t k = 0; k < which.size(); ++k)
    for (int r = 0; r < rows_; ++r)
      m.set(r, static_cast<int>(k), at(r, which[k]));
  return m;
}

std::vector<RingElement> ExactMatrix::column(int j) const {
  std::vector<RingElement> c;
  c.reserve(rows_);
  for (int r = 0; r < rows_; ++r) c.push_back(at(r, j));
  return c;
}

ExactMatrix ExactMatrix::row_block(int r0, int n) const {
  ExactMatrix m(ring_, n, cols_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(r0 + i, j));
  return m;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring()) throw PreconditionError("matrix ring mismatch");
  if (a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch");
  ExactMatrix m(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      RingElement s = a.ring().zero();
      for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
      m.set(i, j, s);
    }
  return m;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring() || a.rows() != b.rows())
    throw PreconditionError("hconcat shape mismatch");
  ExactMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring() || a.cols() != b.cols())
    throw PreconditionError("vconcat shape mismatch");
  ExactMatrix m(a.ring(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) m.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i) m.set(a.rows() + i, j, b.at(i, j));
  }
  return m;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring()) throw PreconditionError("block_diag ring mismatch");
  ExactMatrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return m;
}

std::vector<RingElement> SNFResult::diagonal() const {
  std::vector<RingElement> d;
  int n = std::min(S.rows(), S.cols());
  d.reserve(n);
  for (int i = 0; i < n; ++i) d.push_back(S.at(i, i));
  return d;
}

namespace {

// Smallest-norm nonzero pivot in S[k.., k..]; returns false when the
// submatrix is zero.
bool find_pivot(const ExactMatrix& S, int k, int& pi, int& pj) {
  bool found = false;
  for (int i = k; i < S.rows(); ++i)
    for (int j = k; j < S.cols(); ++j) {
      const RingElement& v = S.at(i, j);
      if (v.is_zero()) continue;
      if (!found || norm_less(v, S.at(pi, pj))) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

bool row_col_clean(const ExactMatrix& S, int k) {
  for (int i = k + 1; i < S.rows(); ++i)
    if (!S.at(i, k).is_zero()) return false;
  for (int j = k + 1; j < S.cols(); ++j)
    if (!S.at(k, j).is_zero()) return false;
  return true;
}

}  // namespace

SNFResult smith_normal_form(const ExactMatrix& A) {
  const Ring& R = A.ring();
  SNFResult res{ExactMatrix::identity(R, A.rows()), A,
                ExactMatrix::identity(R, A.cols())};
  ExactMatrix& U = res.U;
  ExactMatrix& S = res.S;
  ExactMatrix& V = res.V;

  int n = std::min(A.rows(), A.cols());
  for (int k = 0; k < n; ++k) {
    int pi, pj;
    if (!find_pivot(S, k, pi, pj)) break;  // rest of the matrix is zero
    while (true) {
      find_pivot(S, k, pi, pj);
      S.swap_rows(k, pi);
      U.swap_rows(k, pi);
      S.swap_cols(k, pj);
      V.swap_cols(k, pj);

      // Reduce the pivot column and row. If any remainder survives it is
      // strictly smaller than the pivot, so the loop terminates.
      bool reduced_all = true;
      for (int i = k + 1; i < S.rows(); ++i) {
        if (S.at(i, k).is_zero()) continue;
        RingElement f = -divmod(S.at(i, k), S.at(k, k)).quot;
        S.add_row_multiple(i, k, f);
        U.add_row_multiple(i, k, f);
        if (!S.at(i, k).is_zero()) reduced_all = false;
      }
      for (int j = k + 1; j < S.cols(); ++j) {
        if (S.at(k, j).is_zero()) continue;
        RingElement f = -divmod(S.at(k, j), S.at(k, k)).quot;
        S.add_col_multiple(j, k, f);
        V.add_col_multiple(j, k, f);
        if (!S.at(k, j).is_zero()) reduced_all = false;
      }
      if (!reduced_all || !row_col_clean(S, k)) continue;

      // Pivot isolated. Enforce divisibility into the remaining block: pull
      // a non-divisible entry into the pivot row and keep reducing.
      bool fixed = true;
      for (int i = k + 1; i < S.rows() && fixed; ++i)
        for (int j = k + 1; j < S.cols() && fixed; ++j)
          if (!divides(S.at(k, k), S.at(i, j))) {
            S.add_row_multiple(k, i, R.one());
            U.add_row_multiple(k, i, R.one());
            fixed = false;
          }
      if (fixed) break;
    }
    // Canonical associate on the diagonal.
    RingElement u = normalizing_unit(S.at(k, k));
    if (!u.is_one()) {
      S.scale_row(k, u);
      U.scale_row(k, u);
    }
  }
  return res;
}

RingElement determinant(const ExactMatrix& A) {
  if (A.rows() != A.cols()) throw PreconditionError("determinant of non-square matrix");
  const Ring& R = A.ring();
  int n = A.rows();
  if (n == 0) return R.one();
  // Bareiss fraction-free elimination with column pivoting; every division
  // is exact over an integral domain.
  ExactMatrix M = A;
  RingElement prev = R.one();
  RingElement sign = R.one();
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M.at(i, k).is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return R.zero();
      M.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        RingElement num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        M.set(i, j, exact_div(num, prev));
      }
    prev = M.at(k, k);
  }
  return sign * M.at(n - 1, n - 1);
}

LinearSolver::LinearSolver(const ExactMatrix& A)
    : A_(A), snf_(smith_normal_form(A)) {}

std::optional<std::vector<RingElement>> LinearSolver::solve(
    const std::vector<RingElement>& b) const {
  if (static_cast<int>(b.size()) != A_.rows())
    throw PreconditionError("solve: rhs size mismatch");
  const Ring& R = A_.ring();
  // U A V = S, so A x = b becomes S y = U b with x = V y.
  std::vector<RingElement> ub(A_.rows(), R.zero());
  for (int i = 0; i < A_.rows(); ++i) {
    RingElement s = R.zero();
    for (int j = 0; j < A_.rows(); ++j) s = s + snf_.U.at(i, j) * b[j];
    ub[i] = s;
  }
  int n = std::min(A_.rows(), A_.cols());
  std::vector<RingElement> y(A_.cols(), R.zero());
  for (int i = 0; i < A_.rows(); ++i) {
    if (i < n && !snf_.S.at(i, i).is_zero()) {
      auto [q, r] = divmod(ub[i], snf_.S.at(i, i));
      if (!r.is_zero()) return std::nullopt;
      y[i] = q;
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<RingElement> x(A_.cols(), R.zero());
  for (int i = 0; i < A_.cols(); ++i) {
    RingElement s = R.zero();
    for (int j = 0; j < A_.cols(); ++j) s = s + snf_.V.at(i, j) * y[j];
    x[i] = s;
  }
  return x;
}

bool LinearSolver::solvable(const std::vector<RingElement>& b) const {
  return solve(b).has_value();
}

ExactMatrix kernel_basis(const ExactMatrix& A) {
  SNFResult snf = smith_normal_form(A);
  int n = std::min(A.rows(), A.cols());
  std::vector<int> zero_cols;
  for (int j = 0; j < A.cols(); ++j)
    if (j >= n || snf.S.at(j, j).is_zero()) zero_cols.push_back(j);
  return snf.V.columns(zero_cols);
}

}  // namespace adic

#pragma once

#include <string>
#include <vector>

#include "fields.hpp"

namespace eaforge {

enum class Form { euclidean, hermitian };

inline const char* form_name(Form f) {
  return f == Form::euclidean ? "euclidean" : "hermitian";
}

// Dense row-major matrix over an interned Field. Zero-row matrices are legal
// and show up naturally as parity matrices of full spaces.
class Mat {
 public:
  Mat() = default;

  Mat(const Field& f, int rows, int cols)
      : f_(&f), rows_(rows), cols_(cols), e_((size_t)rows * cols, 0) {
    if (rows < 0 || cols < 0) fail(errc::dimension_mismatch, "negative matrix shape");
  }

  static Mat from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    Mat out(f, r, c);
    for (int i = 0; i < r; ++i) {
      if ((int)rows[i].size() != c)
        fail(errc::dimension_mismatch, "ragged row " + std::to_string(i));
      for (int j = 0; j < c; ++j) {
        if (!f.contains(rows[i][j]))
          fail(errc::dimension_mismatch, "entry out of field range at row " + std::to_string(i));
        out.set(i, j, rows[i][j]);
      }
    }
    return out;
  }

  const Field& field() const { return *f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int r, int c) const { return e_[(size_t)r * cols_ + c]; }
  void set(int r, int c, int v) { e_[(size_t)r * cols_ + c] = v; }

  std::vector<int> row(int r) const {
    return std::vector<int>(e_.begin() + (size_t)r * cols_, e_.begin() + (size_t)(r + 1) * cols_);
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) {
      int t = get(a, j);
      set(a, j, get(b, j));
      set(b, j, t);
    }
  }

  bool operator==(const Mat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  const Field* f_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<int> e_;
};

inline Mat identity(const Field& f, int n) {
  Mat out(f, n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

inline Mat transpose(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(j, i, a.get(i, j));
  return out;
}

inline Mat conj_mat(const Mat& a) {
  Mat out(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().conj(a.get(i, j)));
  return out;
}

inline Mat dagger(const Mat& a) { return transpose(conj_mat(a)); }

inline Mat mat_mul(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "mat_mul shape");
  const Field& f = a.field();
  Mat out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      int v = a.get(i, l);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.set(i, j, f.add(out.get(i, j), f.mul(v, b.get(l, j))));
    }
  return out;
}

inline Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "vstack");
  if (a.cols() != b.cols()) fail(errc::dimension_mismatch, "vstack width");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.get(i, j));
  return out;
}

inline Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "hstack");
  if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "hstack height");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
    for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.get(i, j));
  }
  return out;
}

struct RrefResult {
  Mat mat;
  int rank = 0;
  std::vector<int> pivots;
};

inline RrefResult rref(Mat a) {
  const Field& f = a.field();
  int r = 0;
  std::vector<int> pivots;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.get(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    int scale = f.inv(a.get(r, col));
    for (int j = col; j < a.cols(); ++j) a.set(r, j, f.mul(a.get(r, j), scale));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.get(i, col) == 0) continue;
      int factor = a.get(i, col);
      for (int j = col; j < a.cols(); ++j)
        a.set(i, j, f.sub(a.get(i, j), f.mul(factor, a.get(r, j))));
    }
    pivots.push_back(col);
    ++r;
  }
  return RrefResult{std::move(a), r, std::move(pivots)};
}

inline int rank(const Mat& a) { return rref(a).rank; }

// Returns the nonzero rows of the reduced form: the canonical basis of the
// row space.
inline Mat row_basis(const Mat& a) {
  RrefResult rr = rref(a);
  Mat out(a.field(), rr.rank, a.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, rr.mat.get(i, j));
  return out;
}

// Canonical (RREF) basis of the right kernel of a.
inline Mat null_space(const Mat& a) {
  const Field& f = a.field();
  RrefResult rr = rref(a);
  int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  Mat basis(f, n - rr.rank, n);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    basis.set(row, j, 1);
    for (int i = 0; i < rr.rank; ++i) basis.set(row, rr.pivots[i], f.neg(rr.mat.get(i, j)));
    ++row;
  }
  return row_basis(basis);
}

// Canonical basis of rowspace(a) ∩ rowspace(b), via kernels.
inline Mat intersect_rowspaces(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "intersect_rowspaces");
  if (a.cols() != b.cols()) fail(errc::dimension_mismatch, "intersect_rowspaces width");
  return null_space(vstack(null_space(a), null_space(b)));
}

inline int gram_rank(const Mat& m, Form form) {
  Mat g = form == Form::euclidean ? mat_mul(m, transpose(m)) : mat_mul(m, dagger(m));
  return rank(g);
}

inline bool is_nonsingular(const Mat& m) {
  if (m.rows() != m.cols()) fail(errc::not_square, "is_nonsingular needs a square matrix");
  return rank(m) == m.rows();
}

inline bool row_space_contains(const Mat& a, const std::vector<int>& v) {
  if ((int)v.size() != a.cols()) fail(errc::dimension_mismatch, "row_space_contains width");
  Mat stacked(a.field(), a.rows() + 1, a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) stacked.set(i, j, a.get(i, j));
  for (int j = 0; j < a.cols(); ++j) stacked.set(a.rows(), j, v[j]);
  return rank(stacked) == rank(a);
}

inline bool row_space_leq(const Mat& a, const Mat& b) {
  return rank(vstack(a, b)) == rank(b);
}

inline bool is_zero_mat(const Mat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j) != 0) return false;
  return true;
}

}  // namespace eaforge

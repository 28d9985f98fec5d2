#include "helmlab/linalg/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

Complex dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("dot: size mismatch");
  Complex s = 0.0;
  for (Index i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm2(const Vector& x) {
  double s = 0.0;
  for (const Complex& v : x) s += std::norm(v);
  return std::sqrt(s);
}

void axpy(Complex alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw DimensionError("axpy: size mismatch");
  for (Index i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Complex alpha, Vector& x) {
  for (Complex& v : x) v *= alpha;
}

bool all_finite(const Vector& x) {
  for (const Complex& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

SparseMatrix::SparseMatrix(Index nrows, Index ncols,
                           std::vector<Index> row_offsets,
                           std::vector<Index> col_indices, Vector values)
    : nrows_(nrows),
      ncols_(ncols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  if (row_offsets_.size() != nrows_ + 1)
    throw DimensionError("SparseMatrix: row_offsets size mismatch");
  if (row_offsets_.back() != values_.size() ||
      col_indices_.size() != values_.size())
    throw DimensionError("SparseMatrix: value count mismatch");
  for (Index i = 0; i < nrows_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1])
      throw DimensionError("SparseMatrix: row_offsets not nondecreasing");
    for (Index p = row_offsets_[i]; p + 1 < row_offsets_[i + 1]; ++p)
      if (col_indices_[p] >= col_indices_[p + 1])
        throw DimensionError(
            "SparseMatrix: column indices not strictly increasing in row");
  }
  if (!all_finite(values_))
    throw DimensionError("SparseMatrix: non-finite value");
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<Index> offs(n + 1), cols(n);
  Vector vals(n, Complex(1.0, 0.0));
  for (Index i = 0; i <= n; ++i) offs[i] = i;
  for (Index i = 0; i < n; ++i) cols[i] = i;
  return SparseMatrix(n, n, std::move(offs), std::move(cols), std::move(vals));
}

Complex SparseMatrix::coeff(Index i, Index j) const {
  auto beg = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i]);
  auto end = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i + 1]);
  auto it = std::lower_bound(beg, end, j);
  if (it == end || *it != j) return 0.0;
  return values_[static_cast<Index>(it - col_indices_.begin())];
}

double SparseMatrix::norm_inf() const {
  double m = 0.0;
  for (Index i = 0; i < nrows_; ++i) {
    double s = 0.0;
    for (Index p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
      s += std::abs(values_[p]);
    m = std::max(m, s);
  }
  return m;
}

SparseBuilder::SparseBuilder(Index nrows, Index ncols)
    : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

void SparseBuilder::add(Index i, Index j, Complex v) {
  if (i >= nrows_ || j >= ncols_) throw DimensionError("SparseBuilder: index out of range");
  rows_[i].emplace_back(j, v);
}

SparseMatrix SparseBuilder::build() const {
  std::vector<Index> offs(nrows_ + 1, 0);
  std::vector<Index> cols;
  Vector vals;
  std::vector<std::pair<Index, Complex>> row;
  for (Index i = 0; i < nrows_; ++i) {
    row.assign(rows_[i].begin(), rows_[i].end());
    std::stable_sort(row.begin(), row.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Index w = 0;
    for (Index r = 0; r < row.size(); ++r) {
      if (w > 0 && cols[offs[i] + w - 1] == row[r].first) {
        vals[offs[i] + w - 1] += row[r].second;
      } else {
        cols.push_back(row[r].first);
        vals.push_back(row[r].second);
        ++w;
      }
    }
    offs[i + 1] = cols.size();
  }
  return SparseMatrix(nrows_, ncols_, std::move(offs), std::move(cols),
                      std::move(vals));
}

Vector sparse_matvec(const SparseMatrix& A, const Vector& x) {
  if (A.cols() != x.size()) throw DimensionError("sparse_matvec: size mismatch");
  Vector y(A.rows(), 0.0);
  const auto& offs = A.row_offsets();
  const auto& cols = A.col_indices();
  const auto& vals = A.values();
  for (Index i = 0; i < A.rows(); ++i) {
    Complex s = 0.0;
    for (Index p = offs[i]; p < offs[i + 1]; ++p) s += vals[p] * x[cols[p]];
    y[i] = s;
  }
  return y;
}

SparseMatrix sparse_add(Complex alpha, const SparseMatrix& A, Complex beta,
                        const SparseMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionError("sparse_add: shape mismatch");
  SparseBuilder builder(A.rows(), A.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p)
      builder.add(i, A.col_indices()[p], alpha * A.values()[p]);
    for (Index p = B.row_offsets()[i]; p < B.row_offsets()[i + 1]; ++p)
      builder.add(i, B.col_indices()[p], beta * B.values()[p]);
  }
  return builder.build();
}

}  // namespace helmlab::linalg

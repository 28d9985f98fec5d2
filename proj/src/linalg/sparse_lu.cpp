#include "helmlab/linalg/sparse_lu.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

std::vector<Index> rcm_ordering(const SparseMatrix& A) {
  const Index n = A.rows();
  // Symmetrized adjacency (self-loops dropped).
  std::vector<std::vector<Index>> adj(n);
  for (Index i = 0; i < n; ++i)
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p) {
      Index j = A.col_indices()[p];
      if (i == j) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  std::vector<Index> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);
  auto degree = [&](Index v) { return adj[v].size(); };

  for (;;) {
    // Start each component from a minimum-degree vertex.
    Index start = npos;
    for (Index v = 0; v < n; ++v)
      if (!visited[v] && (start == npos || degree(v) < degree(start))) start = v;
    if (start == npos) break;

    std::queue<Index> q;
    q.push(start);
    visited[start] = 1;
    std::vector<Index> nbrs;
    while (!q.empty()) {
      Index v = q.front();
      q.pop();
      order.push_back(v);
      nbrs.clear();
      for (Index w : adj[v])
        if (!visited[w]) nbrs.push_back(w);
      std::sort(nbrs.begin(), nbrs.end(), [&](Index a, Index b) {
        return degree(a) != degree(b) ? degree(a) < degree(b) : a < b;
      });
      for (Index w : nbrs) {
        visited[w] = 1;
        q.push(w);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

struct Csc {
  Index n = 0;
  std::vector<Index> col_ptr;
  std::vector<Index> row_ind;
  Vector values;
};

// CSC of A(order, order).
Csc permute_to_csc(const SparseMatrix& A, const std::vector<Index>& order) {
  const Index n = A.rows();
  std::vector<Index> inv(n);
  for (Index i = 0; i < n; ++i) inv[order[i]] = i;
  Csc C;
  C.n = n;
  C.col_ptr.assign(n + 1, 0);
  for (Index i = 0; i < n; ++i)
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p)
      ++C.col_ptr[inv[A.col_indices()[p]] + 1];
  for (Index j = 0; j < n; ++j) C.col_ptr[j + 1] += C.col_ptr[j];
  C.row_ind.resize(A.nnz());
  C.values.resize(A.nnz());
  std::vector<Index> next(C.col_ptr.begin(), C.col_ptr.end() - 1);
  for (Index inew = 0; inew < n; ++inew) {
    Index i = order[inew];
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p) {
      Index jnew = inv[A.col_indices()[p]];
      Index q = next[jnew]++;
      C.row_ind[q] = inew;
      C.values[q] = A.values()[p];
    }
  }
  return C;
}

}  // namespace

SparseLU::SparseLU(const SparseMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("SparseLU: matrix not square");
  n_ = A.rows();
  order_ = rcm_ordering(A);
  Csc Ap = permute_to_csc(A, order_);

  pivot_row_.assign(n_, npos);
  L_.col_ptr.assign(n_ + 1, 0);
  U_.col_ptr.assign(n_ + 1, 0);

  Vector x(n_, 0.0);
  std::vector<Index> stack(n_), pstack(n_), topo(n_);
  std::vector<char> marked(n_, 0);

  for (Index k = 0; k < n_; ++k) {
    // Symbolic: rows reachable from the pattern of Ap(:,k) through the
    // columns of L already computed (topological order on the stack).
    Index top = n_;
    for (Index p = Ap.col_ptr[k]; p < Ap.col_ptr[k + 1]; ++p) {
      Index i = Ap.row_ind[p];
      if (marked[i]) continue;
      Index head = 0;
      stack[0] = i;
      while (head != npos) {
        Index v = stack[head];
        if (!marked[v]) {
          marked[v] = 1;
          pstack[head] = pivot_row_[v] == npos ? npos : L_.col_ptr[pivot_row_[v]];
        }
        bool descended = false;
        if (pivot_row_[v] != npos) {
          Index col = pivot_row_[v];
          Index pend = L_.col_ptr[col + 1];
          for (Index q = pstack[head]; q < pend; ++q) {
            Index w = L_.row_ind[q];
            if (!marked[w]) {
              pstack[head] = q;  // resume here after the child
              stack[++head] = w;
              descended = true;
              break;
            }
          }
        }
        if (!descended) {
          topo[--top] = v;
          head = head == 0 ? npos : head - 1;
        }
      }
    }

    // Numeric: scatter Ap(:,k), then eliminate in topological order.
    for (Index p = Ap.col_ptr[k]; p < Ap.col_ptr[k + 1]; ++p)
      x[Ap.row_ind[p]] = Ap.values[p];
    for (Index t = top; t < n_; ++t) {
      Index i = topo[t];
      Index col = pivot_row_[i];
      if (col == npos) continue;
      const Complex xi = x[i];
      if (xi != Complex(0.0)) {
        for (Index q = L_.col_ptr[col] + 1; q < L_.col_ptr[col + 1]; ++q)
          x[L_.row_ind[q]] -= L_.values[q] * xi;
      }
    }

    // Partial pivoting over the not-yet-pivotal rows.
    Index ipiv = npos;
    double amax = -1.0;
    for (Index t = top; t < n_; ++t) {
      Index i = topo[t];
      if (pivot_row_[i] != npos) continue;
      double a = std::abs(x[i]);
      if (a > amax) {
        amax = a;
        ipiv = i;
      }
    }
    if (ipiv == npos || amax < 1e-300)
      throw SingularMatrixError("SparseLU: zero pivot at column " +
                                std::to_string(k));
    const Complex pivot = x[ipiv];
    pivot_row_[ipiv] = k;

    // U column k: pivotal rows, diagonal last.
    for (Index t = top; t < n_; ++t) {
      Index i = topo[t];
      if (pivot_row_[i] != npos && i != ipiv && pivot_row_[i] < k) {
        U_.row_ind.push_back(pivot_row_[i]);
        U_.values.push_back(x[i]);
      }
    }
    U_.row_ind.push_back(k);
    U_.values.push_back(pivot);
    U_.col_ptr[k + 1] = U_.row_ind.size();

    // L column k: unit diagonal first, then the scaled remainder.
    L_.row_ind.push_back(ipiv);
    L_.values.push_back(1.0);
    for (Index t = top; t < n_; ++t) {
      Index i = topo[t];
      if (pivot_row_[i] == npos && x[i] != Complex(0.0)) {
        L_.row_ind.push_back(i);
        L_.values.push_back(x[i] / pivot);
      }
    }
    L_.col_ptr[k + 1] = L_.row_ind.size();

    for (Index t = top; t < n_; ++t) {
      x[topo[t]] = 0.0;
      marked[topo[t]] = 0;
    }
  }
}

Index SparseLU::nnz_factors() const {
  return L_.row_ind.size() + U_.row_ind.size();
}

Vector SparseLU::solve(const Vector& b) const {
  if (b.size() != n_) throw DimensionError("SparseLU::solve: size mismatch");
  // Permute into RCM order.
  Vector x(n_);
  for (Index i = 0; i < n_; ++i) x[i] = b[order_[i]];
  // Forward solve Ly = x, traversing columns; row indices of L are in the
  // unpivoted (permuted-A) numbering, resolved through pivot_row_.
  Vector y(n_);
  for (Index k = 0; k < n_; ++k) {
    Index ipiv = L_.row_ind[L_.col_ptr[k]];
    Complex v = x[ipiv];
    y[k] = v;
    if (v != Complex(0.0)) {
      for (Index q = L_.col_ptr[k] + 1; q < L_.col_ptr[k + 1]; ++q)
        x[L_.row_ind[q]] -= L_.values[q] * v;
    }
  }
  // Backward solve Uz = y.
  for (Index kk = n_; kk-- > 0;) {
    Index dq = U_.col_ptr[kk + 1] - 1;
    Complex v = y[kk] / U_.values[dq];
    y[kk] = v;
    if (v != Complex(0.0)) {
      for (Index q = U_.col_ptr[kk]; q < dq; ++q) y[U_.row_ind[q]] -= U_.values[q] * v;
    }
  }
  // Undo the RCM column permutation.
  Vector out(n_);
  for (Index k = 0; k < n_; ++k) out[order_[k]] = y[k];
  return out;
}

}  // namespace helmlab::linalg

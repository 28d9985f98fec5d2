#include "helmlab/linalg/matrix_market.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helmlab/errors.hpp"

namespace helmlab::linalg {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IOError("cannot open for writing: " + path);
  return os;
}

}  // namespace

void write_matrix_market(std::ostream& os, const SparseMatrix& A) {
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << A.rows() << " " << A.cols() << " " << A.nnz() << "\n";
  for (Index i = 0; i < A.rows(); ++i)
    for (Index p = A.row_offsets()[i]; p < A.row_offsets()[i + 1]; ++p)
      os << (i + 1) << " " << (A.col_indices()[p] + 1) << " "
         << fmt17(A.values()[p].real()) << " " << fmt17(A.values()[p].imag())
         << "\n";
}

void write_matrix_market_file(const std::string& path, const SparseMatrix& A) {
  auto os = open_out(path);
  write_matrix_market(os, A);
}

SparseMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IOError("matrix market: empty stream");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || object != "matrix")
    throw IOError("matrix market: bad banner");
  if (format != "coordinate")
    throw IOError("matrix market: only coordinate format supported");
  const bool complex_field = field == "complex";
  if (!complex_field && field != "real")
    throw IOError("matrix market: unsupported field " + field);
  if (symmetry != "general")
    throw IOError("matrix market: only general symmetry supported");

  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream dims(line);
  Index nrows = 0, ncols = 0, nnz = 0;
  if (!(dims >> nrows >> ncols >> nnz))
    throw IOError("matrix market: bad size line");

  SparseBuilder builder(nrows, ncols);
  for (Index e = 0; e < nnz; ++e) {
    Index i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(is >> i >> j >> re)) throw IOError("matrix market: truncated entries");
    if (complex_field && !(is >> im))
      throw IOError("matrix market: truncated complex entry");
    if (i < 1 || i > nrows || j < 1 || j > ncols)
      throw IOError("matrix market: index out of range");
    builder.add(i - 1, j - 1, Complex(re, im));
  }
  return builder.build();
}

SparseMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IOError("cannot open for reading: " + path);
  return read_matrix_market(is);
}

void write_matrix_market_dense(std::ostream& os, const DenseMatrix& A) {
  os << "%%MatrixMarket matrix array complex general\n";
  os << A.rows() << " " << A.cols() << "\n";
  for (Index j = 0; j < A.cols(); ++j)
    for (Index i = 0; i < A.rows(); ++i)
      os << fmt17(A(i, j).real()) << " " << fmt17(A(i, j).imag()) << "\n";
}

void write_matrix_market_dense_file(const std::string& path, const DenseMatrix& A) {
  auto os = open_out(path);
  write_matrix_market_dense(os, A);
}

void write_matrix_market_vector_file(const std::string& path, const Vector& b) {
  DenseMatrix col(b.size(), 1);
  for (Index i = 0; i < b.size(); ++i) col(i, 0) = b[i];
  write_matrix_market_dense_file(path, col);
}

}  // namespace helmlab::linalg

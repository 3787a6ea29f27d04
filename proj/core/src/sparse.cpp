#include "qcspec/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "qcspec/error.hpp"

namespace qcspec {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidDimensions, "negative matrix dimension");
  for (const Triplet& t : triplets)
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw Error(ErrorKind::InvalidDimensions, "triplet index out of range");

  // Stable sort keeps the accumulation order of duplicates fixed.
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_offsets_.assign(static_cast<std::size_t>(rows) + 1, 0);
  std::size_t k = 0;
  while (k < triplets.size()) {
    const int r = triplets[k].row, c = triplets[k].col;
    double v = 0.0;
    for (; k < triplets.size() && triplets[k].row == r && triplets[k].col == c; ++k) v += triplets[k].value;
    if (v == 0.0) continue;
    m.col_indices_.push_back(c);
    m.values_.push_back(v);
    ++m.row_offsets_[r + 1];
  }
  for (int r = 0; r < rows; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
  return m;
}

double SparseMatrix::at(int i, int j) const {
  const auto begin = col_indices_.begin() + row_offsets_[i];
  const auto end = col_indices_.begin() + row_offsets_[i + 1];
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != static_cast<std::size_t>(cols_) || y.size() != static_cast<std::size_t>(rows_))
    throw Error(ErrorKind::InvalidDimensions, "matrix-vector size mismatch");
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) s += values_[k] * x[col_indices_[k]];
    y[r] = s;
  }
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(rows_));
  multiply(x, y);
  return y;
}

double SparseMatrix::asymmetry() const {
  double scale = 0.0, diff = 0.0;
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      scale = std::max(scale, std::abs(values_[k]));
      diff = std::max(diff, std::abs(values_[k] - at(col_indices_[k], r)));
    }
  }
  return scale > 0.0 ? diff / scale : 0.0;
}

double SparseMatrix::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

CgResult conjugate_gradient(const SparseMatrix& a, std::span<const double> b, std::span<double> x,
                            double rel_tol, int max_iterations) {
  const std::size_t n = b.size();
  std::vector<double> r(n), p(n), ap(n);
  a.multiply(x, ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  const double b_norm = norm2(b);
  CgResult res;
  if (b_norm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    res.converged = true;
    return res;
  }
  p = r;
  double rr = dot(r, r);
  const double target = rel_tol * b_norm;
  for (res.iterations = 0; res.iterations < max_iterations; ++res.iterations) {
    if (std::sqrt(rr) <= target) {
      res.converged = true;
      break;
    }
    a.multiply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0)) throw Error(ErrorKind::SingularSystem, "CG breakdown: p^T A p <= 0");
    const double alpha = rr / pap;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    const double rr_new = dot(r, r);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  if (!res.converged && std::sqrt(rr) <= target) res.converged = true;
  res.relative_residual = std::sqrt(rr) / b_norm;
  return res;
}

}  // namespace qcspec

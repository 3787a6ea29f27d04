#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qcspec {

struct Triplet {
  int row;
  int col;
  double value;
};

/// Compressed-row matrix. Column indices increase strictly within a row and no
/// explicit zeros are stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Sums duplicates; entries that sum to exactly zero are dropped.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }

  std::span<const int> row_offsets() const { return row_offsets_; }
  std::span<const int> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

  /// Entry (i, j), zero when not stored.
  double at(int i, int j) const;

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  /// max |a_ij - a_ji| / max |a_ij|
  double asymmetry() const;

  double sum() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_offsets_{0};
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

struct CgResult {
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// Conjugate gradients for SPD A; x holds the initial guess on entry.
/// Stops when ||b - A x|| <= rel_tol ||b||.
CgResult conjugate_gradient(const SparseMatrix& a, std::span<const double> b, std::span<double> x,
                            double rel_tol, int max_iterations);

}  // namespace qcspec

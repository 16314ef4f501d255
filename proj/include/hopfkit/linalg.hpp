#pragma once

// Exact sparse linear algebra over cyclotomic fields: kernels, rank, linear
// solves, inverses and rank factorizations.  Everything is plain Gaussian
// elimination with exact field division; no rounding anywhere.

#include <map>
#include <optional>
#include <vector>

#include "hopfkit/cyclotomic.hpp"

namespace hopfkit {

using SparseVec = std::map<long, FieldElement>;  // index -> nonzero coefficient

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  void set(long r, long c, const FieldElement& v);
  FieldElement get(long r, long c) const;
  const SparseVec& row(long r) const { return data_[static_cast<size_t>(r)]; }
  SparseVec& row(long r) { return data_[static_cast<size_t>(r)]; }
  void add_row(const SparseVec& r);  // grows rows()

  static ExactMatrix identity(long n);
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  SparseVec apply(const SparseVec& v) const;  // matrix * column vector
  bool operator==(const ExactMatrix& o) const;

 private:
  long rows_, cols_;
  std::vector<SparseVec> data_;
};

// Exact basis of the right null space of A; size = cols - rank.
std::vector<SparseVec> kernel(const ExactMatrix& A);

long rank(const ExactMatrix& A);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<SparseVec> solve(const ExactMatrix& A, const SparseVec& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& A);

// A = C * R with C (rows x rank) and R (rank x cols), both full rank.
std::pair<ExactMatrix, ExactMatrix> rank_factorization(const ExactMatrix& A);

// Row-span utilities used by the subalgebra-closure and membership checks.
// Maintains a basis in reduced row-echelon form.
class RowSpan {
 public:
  explicit RowSpan(long width) : width_(width) {}
  long dim() const { return static_cast<long>(basis_.size()); }
  long width() const { return width_; }
  // Reduces v by the current basis; if a nonzero remainder survives it is
  // normalized and inserted.  Returns true on growth.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const;
  // Coordinates of v in the *original insertion order* are not tracked;
  // this exposes only the echelon basis.
  const std::vector<SparseVec>& basis() const { return basis_; }

 private:
  long width_;
  std::vector<SparseVec> basis_;          // RREF rows
  std::map<long, size_t> pivot_of_col_;   // leading column -> basis row
  SparseVec reduce(SparseVec v) const;
};

}  // namespace hopfkit

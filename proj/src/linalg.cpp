#include "hopfkit/linalg.hpp"

#include <cassert>

namespace hopfkit {

namespace {

void vec_axpy(SparseVec& target, const FieldElement& f, const SparseVec& src) {
  if (f.is_zero()) return;
  for (const auto& [c, v] : src) {
    auto it = target.find(c);
    if (it == target.end()) {
      target.emplace(c, f * v);
    } else {
      it->second += f * v;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

void vec_scale(SparseVec& v, const FieldElement& f) {
  for (auto& [c, val] : v) val *= f;
}

}  // namespace

void ExactMatrix::set(long r, long c, const FieldElement& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (v.is_zero())
    data_[static_cast<size_t>(r)].erase(c);
  else
    data_[static_cast<size_t>(r)][c] = v;
}

FieldElement ExactMatrix::get(long r, long c) const {
  const auto& row = data_[static_cast<size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? FieldElement::zero() : it->second;
}

void ExactMatrix::add_row(const SparseVec& r) {
  data_.push_back(r);
  ++rows_;
}

ExactMatrix ExactMatrix::identity(long n) {
  ExactMatrix I(n, n);
  for (long i = 0; i < n; ++i) I.set(i, i, FieldElement::one());
  return I;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix T(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<size_t>(r)]) T.set(c, r, v);
  return T;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  assert(cols_ == o.rows_);
  ExactMatrix out(rows_, o.cols_);
  for (long r = 0; r < rows_; ++r) {
    SparseVec acc;
    for (const auto& [k, v] : data_[static_cast<size_t>(r)]) vec_axpy(acc, v, o.data_[static_cast<size_t>(k)]);
    out.data_[static_cast<size_t>(r)] = std::move(acc);
  }
  return out;
}

SparseVec ExactMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (long r = 0; r < rows_; ++r) {
    FieldElement acc = FieldElement::zero();
    const auto& row = data_[static_cast<size_t>(r)];
    // iterate over the sparser of the two
    for (const auto& [c, rv] : row) {
      auto it = v.find(c);
      if (it != v.end()) acc += rv * it->second;
    }
    if (!acc.is_zero()) out[r] = acc;
  }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (long r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[static_cast<size_t>(r)])
      if (o.get(r, c) != v) return false;
    for (const auto& [c, v] : o.data_[static_cast<size_t>(r)])
      if (get(r, c) != v) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form; returns pivot columns (in order) and leaves the
// nonzero normalized rows in `rows`.
std::vector<long> rref(std::vector<SparseVec>& rows) {
  std::vector<SparseVec> basis;
  std::map<long, size_t> pivot_of_col;
  for (auto& r : rows) {
    SparseVec cur = std::move(r);
    // forward reduce
    while (!cur.empty()) {
      long lead = cur.begin()->first;
      auto it = pivot_of_col.find(lead);
      if (it == pivot_of_col.end()) break;
      FieldElement f = -cur.begin()->second;
      vec_axpy(cur, f, basis[it->second]);
    }
    if (cur.empty()) continue;
    FieldElement inv = cur.begin()->second.inverse();
    vec_scale(cur, inv);
    long lead = cur.begin()->first;
    // clean non-leading entries that sit in existing pivot columns
    for (auto it = std::next(cur.begin()); it != cur.end();) {
      auto p = pivot_of_col.find(it->first);
      if (p != pivot_of_col.end()) {
        FieldElement f = -it->second;
        long col = it->first;
        vec_axpy(cur, f, basis[p->second]);
        it = cur.upper_bound(col);
      } else {
        ++it;
      }
    }
    // back-substitute into existing rows
    for (auto& b : basis) {
      auto it = b.find(lead);
      if (it != b.end()) {
        FieldElement f = -it->second;
        vec_axpy(b, f, cur);
      }
    }
    pivot_of_col[lead] = basis.size();
    basis.push_back(std::move(cur));
  }
  // order rows by pivot column
  std::vector<long> pivots;
  std::vector<SparseVec> ordered;
  for (const auto& [col, idx] : pivot_of_col) {
    pivots.push_back(col);
    ordered.push_back(std::move(basis[idx]));
  }
  rows = std::move(ordered);
  return pivots;
}

}  // namespace

std::vector<SparseVec> kernel(const ExactMatrix& A) {
  std::vector<SparseVec> rows;
  rows.reserve(static_cast<size_t>(A.rows()));
  for (long r = 0; r < A.rows(); ++r) rows.push_back(A.row(r));
  std::vector<long> pivots = rref(rows);

  std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
  for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  std::vector<SparseVec> null_basis;
  for (long f = 0; f < A.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    SparseVec v;
    v[f] = FieldElement::one();
    for (size_t i = 0; i < pivots.size(); ++i) {
      auto it = rows[i].find(f);
      if (it != rows[i].end()) v[pivots[i]] = -it->second;
    }
    null_basis.push_back(std::move(v));
  }
  return null_basis;
}

long rank(const ExactMatrix& A) {
  std::vector<SparseVec> rows;
  rows.reserve(static_cast<size_t>(A.rows()));
  for (long r = 0; r < A.rows(); ++r) rows.push_back(A.row(r));
  return static_cast<long>(rref(rows).size());
}

std::optional<SparseVec> solve(const ExactMatrix& A, const SparseVec& b) {
  // Eliminate on [A | b] with the RHS carried in column cols().
  long bc = A.cols();
  std::vector<SparseVec> rows;
  rows.reserve(static_cast<size_t>(A.rows()));
  for (long r = 0; r < A.rows(); ++r) {
    SparseVec row = A.row(r);
    auto it = b.find(r);
    if (it != b.end()) row[bc] = it->second;
    rows.push_back(std::move(row));
  }
  std::vector<long> pivots = rref(rows);
  SparseVec x;
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == bc) return std::nullopt;  // inconsistent
    auto it = rows[i].find(bc);
    if (it != rows[i].end()) x[pivots[i]] = it->second;
  }
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& A) {
  assert(A.rows() == A.cols());
  long n = A.rows();
  std::vector<SparseVec> rows;
  for (long r = 0; r < n; ++r) {
    SparseVec row = A.row(r);
    row[n + r] = FieldElement::one();
    rows.push_back(std::move(row));
  }
  std::vector<long> pivots = rref(rows);
  if (static_cast<long>(pivots.size()) < n) return std::nullopt;
  for (long i = 0; i < n; ++i)
    if (pivots[static_cast<size_t>(i)] != i) return std::nullopt;
  ExactMatrix inv(n, n);
  for (long r = 0; r < n; ++r)
    for (const auto& [c, v] : rows[static_cast<size_t>(r)])
      if (c >= n) inv.set(r, c - n, v);
  return inv;
}

std::pair<ExactMatrix, ExactMatrix> rank_factorization(const ExactMatrix& A) {
  std::vector<SparseVec> rows;
  for (long r = 0; r < A.rows(); ++r) rows.push_back(A.row(r));
  std::vector<long> pivots = rref(rows);
  long rk = static_cast<long>(pivots.size());
  ExactMatrix R(rk, A.cols());
  for (long i = 0; i < rk; ++i) R.row(i) = rows[static_cast<size_t>(i)];
  ExactMatrix C(A.rows(), rk);
  for (long r = 0; r < A.rows(); ++r)
    for (long i = 0; i < rk; ++i) {
      FieldElement v = A.get(r, pivots[static_cast<size_t>(i)]);
      if (!v.is_zero()) C.set(r, i, v);
    }
  return {C, R};
}

SparseVec RowSpan::reduce(SparseVec v) const {
  while (!v.empty()) {
    long lead = v.begin()->first;
    auto it = pivot_of_col_.find(lead);
    if (it == pivot_of_col_.end()) break;
    FieldElement f = -v.begin()->second;
    vec_axpy(v, f, basis_[it->second]);
  }
  return v;
}

bool RowSpan::insert(SparseVec v) {
  // fully reduce (not just the leading entry) so the basis stays RREF
  SparseVec cur = reduce(std::move(v));
  if (cur.empty()) return false;
  FieldElement inv = cur.begin()->second.inverse();
  vec_scale(cur, inv);
  // clean lower terms against existing pivots
  for (auto it = std::next(cur.begin()); it != cur.end();) {
    auto p = pivot_of_col_.find(it->first);
    if (p != pivot_of_col_.end()) {
      FieldElement f = -it->second;
      long col = it->first;
      vec_axpy(cur, f, basis_[p->second]);
      it = cur.lower_bound(col);
    } else {
      ++it;
    }
  }
  long lead = cur.begin()->first;
  for (auto& b : basis_) {
    auto it = b.find(lead);
    if (it != b.end()) {
      FieldElement f = -it->second;
      vec_axpy(b, f, cur);
    }
  }
  pivot_of_col_[lead] = basis_.size();
  basis_.push_back(std::move(cur));
  return true;
}

bool RowSpan::contains(SparseVec v) const {
  // The basis is kept in reduced echelon form, so full reduction stops as
  // soon as the leading column is not a pivot.
  return reduce(std::move(v)).empty();
}

}  // namespace hopfkit

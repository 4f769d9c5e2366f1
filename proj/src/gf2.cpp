#include "qbool/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbool/error.hpp"

namespace qbool::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<BitVector> data;
  data.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    data.push_back(BitVector::from_bits(std::span<const int>(r)));
  }
  return from_rows(std::move(data), cols);
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: row length mismatch");
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].set(i);
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].get(c)) v.set(r);
  return v;
}

BitVector BitMatrix::apply(const BitVector& x) const {
  if (x.size() != cols_) throw DomainError("dimension_mismatch", "BitMatrix::apply: vector length differs from column count");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : data_[r].support()) t.data_[c].set(r);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("dimension_mismatch", "BitMatrix product: inner dimensions differ");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k : data_[r].support()) out.data_[r] ^= other.data_[k];
  return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<BitVector>& vectors) {
  Echelon e(ambient_dim);
  for (const auto& v : vectors) e.insert(v);
  std::vector<BitVector> rows = e.rows();
  std::sort(rows.begin(), rows.end(),
            [](const BitVector& a, const BitVector& b) { return a.lowest_set() < b.lowest_set(); });
  // back-substitution: clear each pivot from the rows above it
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t p = rows[i].lowest_set();
    for (std::size_t j = 0; j < i; ++j)
      if (rows[j].get(p)) rows[j].xor_tail(rows[i], p / BitVector::word_bits);
  }
  Subspace s(ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) s.basis_.push_back(BitVector::unit(n, i));
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.lowest_set());
  return out;
}

std::optional<BitVector> Subspace::coordinates(const BitVector& v) const {
  if (v.size() != ambient_) throw DomainError("dimension_mismatch", "Subspace::coordinates: wrong ambient dimension");
  BitVector coords(basis_.size());
  BitVector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(basis_[i].lowest_set())) {
      coords.set(i);
      rest ^= basis_[i];
    }
  }
  if (rest.any()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const BitVector& v) const { return coordinates(v).has_value(); }

// ---------------------------------------------------------------------------

Echelon::Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

Echelon::Echelon(std::size_t dim, std::vector<BitVector> rows) : dim_(dim), pivot_row_(dim, -1) {
  for (auto& r : rows) {
    const std::size_t p = r.lowest_set();
    if (r.size() != dim || p == BitVector::npos || pivot_row_[p] >= 0)
      throw std::invalid_argument("Echelon: rows must be nonzero with distinct pivots");
    pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
  }
}

BitVector Echelon::reduce(BitVector v) const {
  if (v.size() != dim_) throw DomainError("dimension_mismatch", "Echelon::reduce: wrong vector length");
  for (std::size_t p = v.lowest_set(); p != BitVector::npos; p = v.lowest_set(p + 1)) {
    const auto r = pivot_row_[p];
    if (r >= 0) v.xor_tail(rows_[static_cast<std::size_t>(r)], p / BitVector::word_bits);
  }
  return v;
}

bool Echelon::insert(BitVector v) {
  v = reduce(std::move(v));
  const std::size_t p = v.lowest_set();
  if (p == BitVector::npos) return false;
  pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

Subspace Echelon::to_subspace() const { return Subspace::span(dim_, rows_); }

// ---------------------------------------------------------------------------

TrackedEchelon::TrackedEchelon(std::size_t dim, std::size_t max_generators)
    : dim_(dim), max_gens_(max_generators), pivot_row_(dim, -1) {}

TrackedEchelon::Reduction TrackedEchelon::reduce(BitVector v) const {
  if (v.size() != dim_) throw DomainError("dimension_mismatch", "TrackedEchelon::reduce: wrong vector length");
  BitVector tag(max_gens_);
  for (std::size_t p = v.lowest_set(); p != BitVector::npos; p = v.lowest_set(p + 1)) {
    const auto r = pivot_row_[p];
    if (r >= 0) {
      v.xor_tail(rows_[static_cast<std::size_t>(r)], p / BitVector::word_bits);
      tag ^= tags_[static_cast<std::size_t>(r)];
    }
  }
  return {std::move(v), std::move(tag)};
}

std::optional<BitVector> TrackedEchelon::insert(BitVector v) {
  if (inserted_ >= max_gens_) throw std::logic_error("TrackedEchelon: generator capacity exhausted");
  auto [rem, tag] = reduce(std::move(v));
  const std::size_t self = inserted_++;
  const std::size_t p = rem.lowest_set();
  if (p == BitVector::npos) return tag;
  tag.set(self);
  pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(rem));
  tags_.push_back(std::move(tag));
  return std::nullopt;
}

Echelon TrackedEchelon::take_echelon() {
  Echelon e(dim_, std::move(rows_));
  rows_.clear();
  tags_.clear();
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  return e;
}

// ---------------------------------------------------------------------------

SolveResult rank_and_solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows())
    throw DomainError("dimension_mismatch", "rank_and_solve: right-hand side length differs from row count",
                      {{"rows", m.rows()}, {"rhs", b.size()}});
  // Columns are inserted in index order, so the independent ones are exactly
  // the least-index pivot columns of the reduced row-echelon form.
  const BitMatrix t = m.transpose();
  TrackedEchelon cols(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.insert(t.row(c));
  SolveResult out;
  out.rank = cols.rank();
  auto red = cols.reduce(b);
  if (red.remainder.none()) out.solution = std::move(red.combination);
  return out;
}

std::size_t rank(const BitMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

Subspace kernel_basis(const BitMatrix& m) {
  const BitMatrix t = m.transpose();
  TrackedEchelon cols(m.rows(), m.cols());
  std::vector<BitVector> kernel;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (auto dep = cols.insert(t.row(c))) {
      dep->set(c);
      kernel.push_back(std::move(*dep));
    }
  }
  return Subspace::span(m.cols(), kernel);
}

Subspace complement(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (std::size_t p : u.pivots()) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t i = 0; i < u.ambient_dim(); ++i)
    if (!is_pivot[i]) basis.push_back(BitVector::unit(u.ambient_dim(), i));
  return Subspace::span(u.ambient_dim(), basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("dimension_mismatch", "intersect: ambient dimensions differ");
  const std::size_t nb = b.dim();
  TrackedEchelon e(a.ambient_dim(), nb + a.dim());
  for (const auto& v : b.basis()) e.insert(v);
  std::vector<BitVector> common;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto dep = e.insert(a.basis()[i])) {
      // a_i + (a-part of dep) lies in span(b)
      BitVector v = a.basis()[i];
      for (std::size_t j = 0; j < i; ++j)
        if (dep->get(nb + j)) v ^= a.basis()[j];
      common.push_back(std::move(v));
    }
  }
  return Subspace::span(a.ambient_dim(), common);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("dimension_mismatch", "sum: ambient dimensions differ");
  std::vector<BitVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("dimension_mismatch", "inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<BitVector> a, inv;
  for (std::size_t r = 0; r < n; ++r) {
    a.push_back(m.row(r));
    inv.push_back(BitVector::unit(n, r));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a[p].get(c)) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a[r].get(c)) {
        a[r] ^= a[c];
        inv[r] ^= inv[c];
      }
  }
  return BitMatrix::from_rows(std::move(inv), n);
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1U) v.set(i);
  return v;
}

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(n, rng));
    BitMatrix m = BitMatrix::from_rows(std::move(rows), n);
    if (rank(m) == n) return m;
  }
}

}  // namespace qbool::gf2

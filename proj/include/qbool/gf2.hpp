#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qbool/bits.hpp"

namespace qbool::gf2 {

/// Dense matrix over F2 stored as bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Rows given as 0/1 lists; all rows must have equal length.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].assign(c, v); }
  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  BitVector column(std::size_t c) const;

  BitVector apply(const BitVector& x) const;  // M * x
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& other) const;
  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Subspace of F2^n in its unique reduced row-echelon form: pivots (lowest
/// set bit of each basis vector) strictly increasing, and each pivot column
/// zero in every other basis vector.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  /// Span of arbitrary vectors, canonicalised.
  static Subspace span(std::size_t ambient_dim, const std::vector<BitVector>& vectors);
  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;
  bool contains(const BitVector& v) const;
  /// Coordinates of v in the canonical basis; nullopt if v is not in the span.
  std::optional<BitVector> coordinates(const BitVector& v) const;
  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_;
  std::vector<BitVector> basis_;
};

/// Incremental echelon basis with least-index (lowest set bit) pivots.
///
/// Rows are kept semi-reduced: each row's lowest set bit is its pivot and no
/// two rows share a pivot. reduce() maps a vector to the unique element of its
/// coset that vanishes on every pivot, so it is a canonical normal form modulo
/// the span regardless of insertion order.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0);
  /// Adopts rows whose lowest set bits are pairwise distinct.
  Echelon(std::size_t dim, std::vector<BitVector> rows);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }
  Subspace to_subspace() const;

 private:
  std::size_t dim_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;
};

/// Echelon basis that remembers, for every row, which inserted generators
/// were combined to produce it. Generators are numbered by insertion order.
class TrackedEchelon {
 public:
  TrackedEchelon(std::size_t dim, std::size_t max_generators);

  std::size_t rank() const { return rows_.size(); }
  std::size_t generators() const { return inserted_; }
  /// Inserts the next generator. Returns nullopt if it was independent;
  /// otherwise the dependency: the set of earlier generators summing to it.
  std::optional<BitVector> insert(BitVector v);
  struct Reduction {
    BitVector remainder;
    BitVector combination;  // generators whose sum is (v - remainder)
  };
  Reduction reduce(BitVector v) const;
  /// The echelon basis of the span, leaving this object empty.
  Echelon take_echelon();

 private:
  std::size_t dim_;
  std::size_t max_gens_;
  std::size_t inserted_ = 0;
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
  std::vector<std::int64_t> pivot_row_;
};

struct SolveResult {
  std::size_t rank = 0;
  std::optional<BitVector> solution;
};

/// Rank of M and, when b lies in the column space, the solution of M x = b
/// whose free variables (non-pivot columns) are zero.
SolveResult rank_and_solve(const BitMatrix& m, const BitVector& b);
std::size_t rank(const BitMatrix& m);
/// {x : M x = 0} in canonical form.
Subspace kernel_basis(const BitMatrix& m);
/// Span of the standard basis vectors at the non-pivot coordinates of U.
Subspace complement(const Subspace& u);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);
/// Uniformly random invertible n×n matrix (rejection sampling).
BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng);
BitVector random_vector(std::size_t n, std::mt19937_64& rng);

}  // namespace qbool::gf2

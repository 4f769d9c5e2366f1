#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "qbool/bits.hpp"
#include "qbool/gf2.hpp"

namespace qbool::graded {

/// Graded F2-algebra truncated at degree top(). Degree 0 is spanned by the
/// unit. products(i, j)[a * dim(j) + b] is the product of basis element a of
/// degree i with basis element b of degree j, for i + j ≤ top().
class GradedAlgebra {
 public:
  using Table = std::vector<std::vector<std::vector<BitVector>>>;

  GradedAlgebra() = default;
  /// Checks shapes only; call validate() for the algebra axioms.
  GradedAlgebra(std::vector<std::size_t> dims, Table products);

  std::size_t top() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Table& table() const { return products_; }
  const BitVector& basis_product(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
    return products_[i][j][a * dims_[j] + b];
  }
  BitVector mul(std::size_t i, const BitVector& x, std::size_t j, const BitVector& y) const;
  /// x^k for x of degree i, valid while k*i ≤ top().
  BitVector power(std::size_t i, const BitVector& x, std::size_t k) const;
  BitVector unit() const { return BitVector::unit(1, 0); }

  /// Unit law, graded commutativity and associativity on basis elements.
  /// Throws DomainError "not_graded_algebra" naming the failing identity.
  void validate() const;
  /// Same algebra in new bases: row r of p[i] is new basis vector r of degree
  /// i in old coordinates. p[0] must be the 1×1 identity.
  GradedAlgebra change_basis(const std::vector<gf2::BitMatrix>& p) const;
  GradedAlgebra random_automorphic_copy(std::mt19937_64& rng) const;
  /// Truncation to degrees ≤ top.
  GradedAlgebra truncate(std::size_t top) const;
  bool operator==(const GradedAlgebra&) const = default;

 private:
  std::vector<std::size_t> dims_;
  Table products_;
};

/// Whether the degreewise maps f[i] (images of basis vectors as rows) form
/// a graded algebra isomorphism a → b.
bool is_isomorphism(const GradedAlgebra& a, const GradedAlgebra& b, const std::vector<gf2::BitMatrix>& f);
/// Whether the maps form a graded ring homomorphism (not necessarily bijective).
bool is_ring_hom(const GradedAlgebra& a, const GradedAlgebra& b, const std::vector<gf2::BitMatrix>& f);
/// Image of x (degree i) under f[i].
BitVector apply_degree(const gf2::BitMatrix& fi, const BitVector& x);

}  // namespace qbool::graded

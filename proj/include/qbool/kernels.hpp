#pragma once

#include <cstddef>
#include <vector>

#include "qbool/bits.hpp"
#include "qbool/groups.hpp"

namespace qbool::kernels {

/// Indexing of normalized bar tuples (g_1, ..., g_n), all g_i non-identity.
/// With m = |G| - 1 the tuple sits at sum (g_i - 1) * m^(n-i).
class TupleCodec {
 public:
  TupleCodec(std::size_t group_order, std::size_t degree);

  std::size_t m() const { return m_; }
  std::size_t degree() const { return n_; }
  std::size_t size() const { return size_; }
  /// Elements (not digits) of the tuple at `index`.
  void decode(std::size_t index, std::vector<Elem>& out) const;
  /// Index of a tuple of non-identity elements.
  std::size_t encode(const std::vector<Elem>& tuple) const;
  std::size_t encode(const Elem* tuple, std::size_t len) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t size_;
};

/// m^n, or SIZE_MAX on overflow.
std::size_t cochain_dim(std::size_t group_order, std::size_t degree);

// Images d^n(e_t) of the basis cochains of C^n, one BitVector in C^(n+1)
// per column t.
std::vector<BitVector> coboundary_columns(const FiniteGroup& g, std::size_t n);
std::vector<BitVector> coboundary_columns_serial(const FiniteGroup& g, std::size_t n);

// d^n f for f in C^n.
BitVector apply_coboundary(const FiniteGroup& g, std::size_t n, const BitVector& f);
BitVector apply_coboundary_serial(const FiniteGroup& g, std::size_t n, const BitVector& f);

// (c ∪ d)(g_1..g_{p+q}) = c(g_1..g_p) d(g_{p+1}..g_{p+q}).
BitVector cup(std::size_t group_order, std::size_t p, std::size_t q, const BitVector& c, const BitVector& d);
BitVector cup_serial(std::size_t group_order, std::size_t p, std::size_t q, const BitVector& c, const BitVector& d);

// (h^* f)(x_1..x_n) = f(h x_1, ..., h x_n), zero when some h x_i is trivial.
BitVector pullback(const GroupHom& h, std::size_t n, const BitVector& f);
BitVector pullback_serial(const GroupHom& h, std::size_t n, const BitVector& f);

}  // namespace qbool::kernels

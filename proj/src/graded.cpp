#include "qbool/graded.hpp"

#include "qbool/error.hpp"

namespace qbool::graded {

GradedAlgebra::GradedAlgebra(std::vector<std::size_t> dims, Table products)
    : dims_(std::move(dims)), products_(std::move(products)) {
  if (dims_.empty()) throw ValidationError("graded algebra needs at least degree 0");
  if (dims_[0] != 1) throw ValidationError("degree 0 must be one-dimensional");
  const std::size_t n = top();
  if (products_.size() != n + 1) throw ValidationError("product table has wrong number of degrees");
  for (std::size_t i = 0; i <= n; ++i) {
    if (products_[i].size() != n + 1 - i) throw ValidationError("product table row has wrong length");
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (products_[i][j].size() != dims_[i] * dims_[j]) throw ValidationError("product table block has wrong size");
      for (const auto& v : products_[i][j])
        if (v.size() != dims_[i + j]) throw ValidationError("product has wrong length");
    }
  }
}

BitVector GradedAlgebra::mul(std::size_t i, const BitVector& x, std::size_t j, const BitVector& y) const {
  if (i + j > top()) throw DomainError("degree_cap", "product degree exceeds the truncation", {{"degree", i + j}});
  if (x.size() != dim(i) || y.size() != dim(j)) throw DomainError("dimension_mismatch", "element has wrong length");
  BitVector out(dim(i + j));
  for (std::size_t a : x.support())
    for (std::size_t b : y.support()) out ^= basis_product(i, j, a, b);
  return out;
}

BitVector GradedAlgebra::power(std::size_t i, const BitVector& x, std::size_t k) const {
  BitVector acc = unit();
  std::size_t deg = 0;
  for (std::size_t s = 0; s < k; ++s) {
    acc = mul(deg, acc, i, x);
    deg += i;
  }
  return acc;
}

void GradedAlgebra::validate() const {
  const std::size_t n = top();
  auto fail = [](const std::string& what, nlohmann::json witness) {
    throw DomainError("not_graded_algebra", what, std::move(witness));
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t a = 0; a < dim(i); ++a) {
      const BitVector e = BitVector::unit(dim(i), a);
      if (basis_product(0, i, 0, a) != e || basis_product(i, 0, a, 0) != e)
        fail("unit does not act as identity", {{"degree", i}, {"index", a}});
    }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      for (std::size_t a = 0; a < dim(i); ++a)
        for (std::size_t b = 0; b < dim(j); ++b)
          if (basis_product(i, j, a, b) != basis_product(j, i, b, a))
            fail("multiplication is not commutative", {{"degrees", {i, j}}, {"indices", {a, b}}});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j)
      for (std::size_t k = 1; i + j + k <= n; ++k)
        for (std::size_t a = 0; a < dim(i); ++a)
          for (std::size_t b = 0; b < dim(j); ++b)
            for (std::size_t c = 0; c < dim(k); ++c) {
              const BitVector ec = BitVector::unit(dim(k), c);
              const BitVector left = mul(i + j, basis_product(i, j, a, b), k, ec);
              const BitVector right = mul(i, BitVector::unit(dim(i), a), j + k, basis_product(j, k, b, c));
              if (left != right)
                fail("multiplication is not associative", {{"degrees", {i, j, k}}, {"indices", {a, b, c}}});
            }
}

BitVector apply_degree(const gf2::BitMatrix& fi, const BitVector& x) {
  BitVector out(fi.cols());
  for (std::size_t r : x.support()) out ^= fi.row(r);
  return out;
}

GradedAlgebra GradedAlgebra::change_basis(const std::vector<gf2::BitMatrix>& p) const {
  const std::size_t n = top();
  if (p.size() != n + 1) throw DomainError("dimension_mismatch", "change_basis: one matrix per degree required");
  std::vector<gf2::BitMatrix> inv;
  for (std::size_t i = 0; i <= n; ++i) {
    if (p[i].rows() != dim(i) || p[i].cols() != dim(i)) throw DomainError("dimension_mismatch", "change_basis: wrong matrix shape");
    auto q = gf2::inverse(p[i]);
    if (!q) throw DomainError("singular", "change_basis: matrix is not invertible", {{"degree", i}});
    inv.push_back(std::move(*q));
  }
  if (!(p[0] == gf2::BitMatrix::identity(1))) throw DomainError("not_graded_algebra", "change_basis must fix the unit");
  Table t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i].resize(n + 1 - i);
    for (std::size_t j = 0; i + j <= n; ++j)
      for (std::size_t a = 0; a < dim(i); ++a)
        for (std::size_t b = 0; b < dim(j); ++b)
          t[i][j].push_back(apply_degree(inv[i + j], mul(i, p[i].row(a), j, p[j].row(b))));
  }
  return GradedAlgebra(dims_, std::move(t));
}

GradedAlgebra GradedAlgebra::random_automorphic_copy(std::mt19937_64& rng) const {
  std::vector<gf2::BitMatrix> p{gf2::BitMatrix::identity(1)};
  for (std::size_t i = 1; i <= top(); ++i) p.push_back(gf2::random_invertible(dim(i), rng));
  return change_basis(p);
}

GradedAlgebra GradedAlgebra::truncate(std::size_t new_top) const {
  if (new_top >= top()) return *this;
  std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(new_top + 1));
  Table t(new_top + 1);
  for (std::size_t i = 0; i <= new_top; ++i)
    for (std::size_t j = 0; i + j <= new_top; ++j) t[i].push_back(products_[i][j]);
  return GradedAlgebra(std::move(dims), std::move(t));
}

bool is_ring_hom(const GradedAlgebra& a, const GradedAlgebra& b, const std::vector<gf2::BitMatrix>& f) {
  const std::size_t n = std::min(a.top(), b.top());
  if (f.size() < n + 1) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (f[i].rows() != a.dim(i) || f[i].cols() != b.dim(i)) return false;
  if (apply_degree(f[0], a.unit()) != b.unit()) return false;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j)
      for (std::size_t x = 0; x < a.dim(i); ++x)
        for (std::size_t y = 0; y < a.dim(j); ++y)
          if (apply_degree(f[i + j], a.basis_product(i, j, x, y)) != b.mul(i, f[i].row(x), j, f[j].row(y)))
            return false;
  return true;
}

bool is_isomorphism(const GradedAlgebra& a, const GradedAlgebra& b, const std::vector<gf2::BitMatrix>& f) {
  if (a.dims() != b.dims() || f.size() != a.top() + 1) return false;
  for (std::size_t i = 0; i <= a.top(); ++i)
    if (f[i].rows() != a.dim(i) || f[i].cols() != b.dim(i) || gf2::rank(f[i]) != a.dim(i)) return false;
  return is_ring_hom(a, b, f);
}

}  // namespace qbool::graded

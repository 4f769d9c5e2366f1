#include "qbool/error.hpp"
#include "qbool/reconstruct.hpp"

namespace qbool::coh {

FIsoReport f_isomorphism_check(const graded::GradedAlgebra& a, const graded::GradedAlgebra& b,
                               const std::vector<gf2::BitMatrix>& f, std::size_t nilbound, std::size_t powbound) {
  const std::size_t top = a.top();
  if (b.top() != top || f.size() != top + 1) throw DomainError("degree_mismatch", "map and algebras cover different degrees");
  for (std::size_t i = 0; i <= top; ++i)
    if (f[i].rows() != a.dim(i) || f[i].cols() != b.dim(i))
      throw DomainError("degree_mismatch", "matrix shape does not match the degree dimensions", {{"degree", i}});
  if (!graded::is_ring_hom(a, b, f)) throw DomainError("not_ring_hom", "map is not a graded ring homomorphism");

  FIsoReport rep;
  for (std::size_t i = 1; i <= top; ++i) {
    const gf2::Subspace kernel = gf2::kernel_basis(f[i].transpose());
    for (const auto& x : kernel.basis()) {
      if (nilbound <= 1) {
        rep.nil_violations.emplace_back(i, x);
        continue;
      }
      bool decided = false;
      for (std::size_t p = 2; p <= nilbound && p * i <= top; ++p) {
        if (a.power(i, x, p).none()) {
          decided = true;
          break;
        }
        if (p == nilbound) {
          rep.nil_violations.emplace_back(i, x);
          decided = true;
        }
      }
      if (!decided) rep.nil_undecided.emplace_back(i, x);
    }
  }
  std::vector<gf2::Subspace> image;
  for (std::size_t i = 0; i <= top; ++i) {
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < f[i].rows(); ++r) rows.push_back(f[i].row(r));
    image.push_back(gf2::Subspace::span(b.dim(i), rows));
  }
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t y = 0; y < b.dim(i); ++y) {
      const BitVector e = BitVector::unit(b.dim(i), y);
      bool found = false, exhausted = true;
      for (std::size_t k = 0, e2 = 1; k <= powbound; ++k, e2 *= 2) {
        if (e2 * i > top) {
          exhausted = false;
          break;
        }
        if (image[e2 * i].contains(b.power(i, e, e2))) {
          found = true;
          break;
        }
      }
      if (!found) (exhausted ? rep.power_violations : rep.power_undecided).emplace_back(i, e);
    }

  rep.both_boolean = reconstruct::classify(a) == reconstruct::Kind::boolean &&
                     reconstruct::classify(b) == reconstruct::Kind::boolean;
  if (rep.both_boolean && rep.clean()) {
    bool bij = true;
    for (std::size_t i = 0; i <= top; ++i) bij = bij && a.dim(i) == b.dim(i) && gf2::rank(f[i]) == a.dim(i);
    rep.bijective = bij;
  }
  return rep;
}

}  // namespace qbool::coh

#include "qbool/reconstruct.hpp"

#include <stdexcept>

#include "qbool/error.hpp"
#include "qbool/freeprod.hpp"

namespace qbool::reconstruct {

namespace {

[[noreturn]] void fail(const std::string& what, nlohmann::json witness = nullptr) {
  throw DomainError("not_connected_sum", what, std::move(witness));
}

nlohmann::json bits(const BitVector& v) { return v.to_vector(); }

}  // namespace

GradedAlgebra build_connected_sum(std::size_t d1, const stone::BooleanRing& b, std::size_t top) {
  if (top < 2) throw DomainError("too_short", "connected sums need degrees up to at least 2", {{"top", top}});
  const std::size_t nb = b.dim();
  std::vector<std::size_t> dims{1, d1 + nb};
  for (std::size_t i = 2; i <= top; ++i) dims.push_back(nb);
  auto offset = [&](std::size_t deg) { return deg == 1 ? d1 : 0; };
  GradedAlgebra::Table t(top + 1);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j) {
      std::vector<BitVector> block(dims[i] * dims[j], BitVector(dims[i + j]));
      for (std::size_t a = 0; a < dims[i]; ++a)
        for (std::size_t c = 0; c < dims[j]; ++c) {
          BitVector& out = block[a * dims[j] + c];
          if (i == 0) {
            out.set(c);
          } else if (j == 0) {
            out.set(a);
          } else if (a >= offset(i) && c >= offset(j)) {
            for (std::size_t s : b.basis_product(a - offset(i), c - offset(j)).support()) out.set(s);
          }
        }
      t[i].push_back(std::move(block));
    }
  GradedAlgebra out(std::move(dims), std::move(t));
  out.validate();
  return out;
}

std::vector<BitVector> Decomposition::coset() const {
  if (d1.dim() > 20) throw CapExceeded("coset too large to enumerate", {{"dim", d1.dim()}});
  std::vector<BitVector> out;
  for (std::size_t m = 0; m < (std::size_t{1} << d1.dim()); ++m) {
    BitVector v = k;
    for (std::size_t i = 0; i < d1.dim(); ++i)
      if ((m >> i) & 1U) v ^= d1.basis()[i];
    out.push_back(std::move(v));
  }
  return out;
}

Decomposition decompose(const GradedAlgebra& a) {
  const std::size_t top = a.top();
  if (top < 2) throw DomainError("too_short", "decomposition needs degrees up to at least 2", {{"top", top}});
  a.validate();
  const std::size_t n1 = a.dim(1), n2 = a.dim(2);

  // squaring is additive: cross terms cancel in pairs
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = x + 1; y < n1; ++y)
      if (a.basis_product(1, 1, x, y) != a.basis_product(1, 1, y, x)) fail("squaring on A^1 is not additive", {{"i", x}, {"j", y}});
  std::vector<BitVector> sq;
  for (std::size_t x = 0; x < n1; ++x) sq.push_back(a.basis_product(1, 1, x, x));
  Decomposition d;
  d.d1 = gf2::kernel_basis(gf2::BitMatrix::from_rows(sq, n2).transpose());
  for (const auto& v : d.d1.basis())
    for (std::size_t j = 1; j < top; ++j)
      for (std::size_t y = 0; y < a.dim(j); ++y)
        if (a.mul(1, v, j, BitVector::unit(a.dim(j), y)).any())
          fail("D1 does not annihilate A^{>=1}", {{"element", bits(v)}, {"degree", j}, {"index", y}});
  d.complement = gf2::complement(d.d1);
  d.identifications.push_back(gf2::BitMatrix::identity(1));

  d.degenerate = true;
  for (std::size_t i = 2; i <= top; ++i) d.degenerate = d.degenerate && a.dim(i) == 0;
  if (d.degenerate) {
    if (d.complement.dim() != 0) fail("A^1 is not annihilated by squaring");
    d.ring = stone::BooleanRing({}, BitVector(0), {});
    d.k = BitVector(n1);
    for (std::size_t i = 1; i <= top; ++i) d.identifications.emplace_back(0, a.dim(i));
    return d;
  }

  // k with c·k = c·c for every c in A^1
  gf2::BitMatrix sys(n1 * n2, n1);
  BitVector rhs(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t s = 0; s < n2; ++s) {
      rhs.assign(x * n2 + s, sq[x].get(s));
      for (std::size_t y = 0; y < n1; ++y) sys.set(x * n2 + s, y, a.basis_product(1, 1, x, y).get(s));
    }
  auto sol = gf2::rank_and_solve(sys, rhs);
  if (!sol.solution) fail("no degree-1 element k with c^2 = c k for all c");
  d.k = std::move(*sol.solution);
  if (gf2::kernel_basis(sys) != d.d1) fail("solutions of c k = 0 differ from D1");

  const auto& w = d.complement.basis();
  const std::size_t r = w.size();
  std::vector<BitVector> mu;
  for (const auto& v : w) mu.push_back(a.mul(1, v, 1, d.k));
  const auto mu_m = gf2::BitMatrix::from_rows(mu, n2);
  const auto mu_inv = r == n2 ? gf2::inverse(mu_m) : std::nullopt;
  if (!mu_inv) fail("multiplication by k is not an isomorphism A^1/D1 -> A^2", {{"rank", gf2::rank(mu_m)}, {"dim", n2}});

  std::vector<std::vector<BitVector>> mult(r, std::vector<BitVector>(r));
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) mult[x][y] = graded::apply_degree(*mu_inv, a.mul(1, w[x], 1, w[y]));
  const auto k_w = d.complement.coordinates(gf2::Echelon(n1, d.d1.basis()).reduce(d.k));
  if (!k_w) throw std::logic_error("decompose: projection of k is outside the complement");
  try {
    d.ring = stone::BooleanRing({}, *k_w, std::move(mult));
  } catch (const DomainError& e) {
    fail(std::string("induced ring is not Boolean: ") + e.what(), e.witness());
  }

  d.identifications.push_back(gf2::BitMatrix::from_rows(w, n1));
  for (std::size_t i = 2; i <= top; ++i) {
    std::vector<BitVector> rows;
    for (std::size_t x = 0; x < r; ++x) rows.push_back(a.mul(i - 1, d.identifications[i - 1].row(x), 1, d.k));
    auto m = gf2::BitMatrix::from_rows(rows, a.dim(i));
    if (a.dim(i) != r || gf2::rank(m) != r) fail("multiplication by k is not an isomorphism onto A^i", {{"degree", i}});
    d.identifications.push_back(std::move(m));
  }
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t j = 1; i + j <= top; ++j)
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
          if (a.mul(i, d.identifications[i].row(x), j, d.identifications[j].row(y)) !=
              graded::apply_degree(d.identifications[i + j], d.ring.basis_product(x, y)))
            fail("identifications do not intertwine products", {{"i", i}, {"j", j}, {"x", x}, {"y", y}});
  for (std::size_t n = 1; 2 * n <= top; ++n) {
    const BitVector kn = a.power(1, d.k, n);
    for (std::size_t x = 0; x < a.dim(n); ++x) {
      const BitVector c = BitVector::unit(a.dim(n), x);
      if (a.mul(n, c, n, c) != a.mul(n, c, n, kn)) fail("c^2 != c k^n", {{"degree", n}, {"index", x}});
    }
  }
  return d;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::boolean: return "boolean";
    case Kind::quasi_boolean: return "quasi_boolean";
    case Kind::neither: return "neither";
  }
  return "";
}

Kind classify(const GradedAlgebra& a) {
  try {
    return decompose(a).d1.dim() == 0 ? Kind::boolean : Kind::quasi_boolean;
  } catch (const DomainError&) {
    return Kind::neither;
  }
}

PresentationOut reconstruct_presentation(const GradedAlgebra& a) {
  const auto d = decompose(a);
  return PresentationOut{d.d1.dim(), stone::spectrum(d.ring).space};
}

bool VerifyReport::ok() const {
  for (const auto& d : degrees)
    if (!d.match) return false;
  return products_match;
}

VerifyReport verify_reconstruction(const PresentationOut& p, const GradedAlgebra& a, std::size_t depth,
                                   std::size_t degree_bound, const coh::Options& opt) {
  const std::size_t ny = p.y_count, nx = p.x.points();
  const bool cofinal = (ny == 0 && nx <= 2) || (ny == 1 && nx == 0);
  if (!cofinal) throw DomainError("unsupported_shape", "no cofinal curated tower for this presentation", {{"free_rank", ny}, {"X_points", nx}});
  if (degree_bound > a.top()) throw DomainError("degree_cap", "degree bound exceeds the algebra", {{"bound", degree_bound}, {"top", a.top()}});
  freeprod::Presentation pres;
  for (std::size_t i = 0; i < ny; ++i) pres.Y.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nx; ++i) pres.X.push_back("x" + std::to_string(i + 1));
  const auto tower = freeprod::quotient_tower(pres, depth);
  const auto tc = coh::tower_colimit(tower, degree_bound, opt);
  VerifyReport rep;
  rep.tower = tower.kind;
  bool dims_ok = true;
  for (std::size_t n = 0; n <= degree_bound; ++n) {
    DegreeMatch m{n, a.dim(n), tc.snapshot.dim(n), a.dim(n) == tc.snapshot.dim(n)};
    dims_ok = dims_ok && m.match;
    rep.degrees.push_back(m);
  }
  if (degree_bound < 2) {
    rep.products_match = dims_ok;
    return rep;
  }
  try {
    const auto da = decompose(a.truncate(degree_bound));
    const auto ds = decompose(tc.snapshot);
    rep.products_match = da.d1.dim() == ds.d1.dim() &&
                         stone::atoms(da.ring).size() == stone::atoms(ds.ring).size() && da.degenerate == ds.degenerate;
  } catch (const DomainError&) {
    rep.products_match = false;
  }
  return rep;
}

RoundtripResult roundtrip(std::size_t d1, const stone::BooleanRing& b, std::size_t top, std::mt19937_64* rng) {
  const GradedAlgebra base = build_connected_sum(d1, b, top);
  const GradedAlgebra a = rng ? base.random_automorphic_copy(*rng) : base;
  const auto d = decompose(a);
  const GradedAlgebra rebuilt = build_connected_sum(d.d1.dim(), d.ring, top);
  std::vector<gf2::BitMatrix> f{gf2::BitMatrix::identity(1)};
  std::vector<BitVector> deg1 = d.d1.basis();
  for (std::size_t x = 0; x < d.identifications[1].rows(); ++x) deg1.push_back(d.identifications[1].row(x));
  f.push_back(gf2::BitMatrix::from_rows(deg1, a.dim(1)));
  for (std::size_t i = 2; i <= top; ++i) f.push_back(d.identifications[i]);
  RoundtripResult r;
  r.isomorphic = graded::is_isomorphism(rebuilt, a, f);
  r.y_count = d.d1.dim();
  r.x_points = stone::atoms(d.ring).size();
  r.invariants_preserved = r.y_count == d1 && r.x_points == stone::atoms(b).size();
  return r;
}

}  // namespace qbool::reconstruct

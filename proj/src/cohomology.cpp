#include "qbool/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbool/error.hpp"
#include "qbool/kernels.hpp"

namespace qbool::coh {

Cohomology::Cohomology(GroupPtr g, Options opt) : g_(std::move(g)), opt_(opt), b0_(1) {
  if (g_->order() > opt_.order_cap)
    throw CapExceeded("group order exceeds the cohomology cap", {{"order", g_->order()}, {"cap", opt_.order_cap}});
}

std::size_t Cohomology::cochain_dim(std::size_t n) const {
  const std::size_t d = kernels::cochain_dim(g_->order(), n);
  if (d > opt_.cochain_cap)
    throw CapExceeded("cochain space exceeds the cap", {{"order", g_->order()}, {"degree", n}, {"cap", opt_.cochain_cap}});
  return d;
}

bool Cohomology::coboundaries_available(std::size_t n) const {
  return n <= opt_.nmax && kernels::cochain_dim(g_->order(), n) <= opt_.cochain_cap;
}

bool Cohomology::cohomology_available(std::size_t n) const {
  return n <= opt_.nmax && kernels::cochain_dim(g_->order(), n + 1) <= opt_.cochain_cap;
}

const Cohomology::Level& Cohomology::level(std::size_t k) const {
  std::lock_guard lock(mu_);
  if (auto it = levels_.find(k); it != levels_.end()) return *it->second;
  if (k > opt_.nmax) throw CapExceeded("degree exceeds nmax", {{"degree", k}, {"nmax", opt_.nmax}});
  const std::size_t rows = cochain_dim(k + 1);
  const std::vector<BitVector> cols = kernels::coboundary_columns(*g_, k);
  // independent columns span B^(k+1); each dependency is a cocycle
  gf2::TrackedEchelon te(rows, cols.size());
  auto lv = std::make_unique<Level>();
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (auto dep = te.insert(cols[c])) {
      dep->set(c);
      lv->kernel.push_back(std::move(*dep));
    }
  lv->image = te.take_echelon();
  return *levels_.emplace(k, std::move(lv)).first->second;
}

const gf2::Echelon& Cohomology::coboundaries(std::size_t n) const {
  if (n > opt_.nmax) throw CapExceeded("degree exceeds nmax", {{"degree", n}, {"nmax", opt_.nmax}});
  if (n == 0) return b0_;
  return level(n - 1).image;
}

const std::vector<BitVector>& Cohomology::cocycles(std::size_t n) const { return level(n).kernel; }

const Cohomology::Degree& Cohomology::degree_data(std::size_t n) const {
  std::lock_guard lock(mu_);
  if (auto it = degrees_.find(n); it != degrees_.end()) return *it->second;
  const auto& z = cocycles(n);
  const auto& b = coboundaries(n);
  std::vector<BitVector> reduced;
  reduced.reserve(z.size());
  for (const auto& v : z) reduced.push_back(b.reduce(v));
  auto d = std::make_unique<Degree>();
  d->reps = gf2::Subspace::span(cochain_dim(n), reduced);
  if (d->reps.dim() + b.rank() != z.size()) throw std::logic_error("cohomology: B^n is not contained in Z^n");
  for (const auto& r : d->reps.basis())
    if (kernels::apply_coboundary(*g_, n, r).any()) throw std::logic_error("cohomology: representative is not a cocycle");
  return *degrees_.emplace(n, std::move(d)).first->second;
}

std::size_t Cohomology::dim(std::size_t n) const { return degree_data(n).reps.dim(); }

const gf2::Subspace& Cohomology::representatives(std::size_t n) const { return degree_data(n).reps; }

std::vector<CohomClass> Cohomology::basis(std::size_t n) const {
  std::vector<CohomClass> out;
  for (std::size_t i = 0; i < dim(n); ++i) out.push_back(basis_class(n, i));
  return out;
}

CohomClass Cohomology::basis_class(std::size_t n, std::size_t i) const {
  const auto& reps = representatives(n);
  return CohomClass{g_, n, reps.basis().at(i), BitVector::unit(reps.dim(), i)};
}

CohomClass Cohomology::zero(std::size_t n) const {
  return CohomClass{g_, n, BitVector(cochain_dim(n)), BitVector(dim(n))};
}

CohomClass Cohomology::unit() const { return basis_class(0, 0); }

CohomClass Cohomology::from_coords(std::size_t n, const BitVector& coords) const {
  const auto& reps = representatives(n);
  if (coords.size() != reps.dim()) throw DomainError("dimension_mismatch", "class coordinates have wrong length");
  BitVector z(cochain_dim(n));
  for (std::size_t i : coords.support()) z ^= reps.basis()[i];
  return CohomClass{g_, n, std::move(z), coords};
}

CohomClass Cohomology::from_cocycle(std::size_t n, const BitVector& z) const {
  if (z.size() != cochain_dim(n)) throw DomainError("dimension_mismatch", "cochain has wrong length");
  const auto& reps = representatives(n);
  if (kernels::apply_coboundary(*g_, n, z).any()) throw DomainError("not_cocycle", "cochain is not a cocycle", {{"degree", n}});
  BitVector r = coboundaries(n).reduce(z);
  auto c = reps.coordinates(r);
  if (!c) throw std::logic_error("cohomology: reduced cocycle outside the representative span");
  return CohomClass{g_, n, std::move(r), std::move(*c)};
}

BitVector Cohomology::reduce(std::size_t n, const BitVector& cochain) const {
  if (cochain.size() != cochain_dim(n)) throw DomainError("dimension_mismatch", "cochain has wrong length");
  return coboundaries(n).reduce(cochain);
}

bool Cohomology::is_coboundary(std::size_t n, const BitVector& cochain) const { return reduce(n, cochain).none(); }

// ---------------------------------------------------------------------------

CohomClass add(const CohomClass& a, const CohomClass& b) {
  if (a.degree != b.degree || a.coords.size() != b.coords.size())
    throw DomainError("dimension_mismatch", "adding classes of different degrees");
  return CohomClass{a.group, a.degree, a.cocycle ^ b.cocycle, a.coords ^ b.coords};
}

BitVector cup_cochain(const CohomClass& c, const CohomClass& d) {
  return kernels::cup(c.group->order(), c.degree, d.degree, c.cocycle, d.cocycle);
}

CohomClass cup(const Cohomology& h, const CohomClass& c, const CohomClass& d) {
  const std::size_t n = c.degree + d.degree;
  if (n > h.options().nmax) throw CapExceeded("cup product degree exceeds nmax", {{"degree", n}});
  h.cochain_dim(n);
  return h.from_cocycle(n, cup_cochain(c, d));
}

BitVector power_cochain(const CohomClass& c, std::size_t k) {
  BitVector acc = BitVector::unit(1, 0);
  for (std::size_t i = 0; i < k; ++i) acc = kernels::cup(c.group->order(), i * c.degree, c.degree, acc, c.cocycle);
  return acc;
}

CohomClass induced_map(const Cohomology& source, const GroupHom& h, const CohomClass& c) {
  if (h.source->order() != source.group()->order() || h.target->order() != c.group->order())
    throw DomainError("dimension_mismatch", "homomorphism does not match the groups");
  return source.from_cocycle(c.degree, kernels::pullback(h, c.degree, c.cocycle));
}

gf2::BitMatrix induced_matrix(const Cohomology& source, const Cohomology& target, const GroupHom& h, std::size_t n) {
  std::vector<BitVector> rows;
  for (const auto& c : target.basis(n)) rows.push_back(induced_map(source, h, c).coords);
  return gf2::BitMatrix::from_rows(std::move(rows), source.dim(n));
}

std::vector<CohomClass> module_generators_over_image(const Cohomology& g, const Cohomology& h,
                                                     const GroupHom& inclusion, std::size_t bound) {
  std::vector<std::vector<CohomClass>> restricted(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k)
    for (const auto& c : g.basis(k)) restricted[k].push_back(induced_map(h, inclusion, c));
  std::vector<CohomClass> gens;
  for (std::size_t n = 0; n <= bound; ++n) {
    gf2::Echelon span(h.dim(n));
    for (const auto& gen : gens)
      for (const auto& r : restricted[n - gen.degree]) span.insert(cup(h, r, gen).coords);
    for (const auto& b : h.basis(n))
      if (span.insert(b.coords)) gens.push_back(b);
  }
  return gens;
}

// ---------------------------------------------------------------------------

std::vector<bool> involution_profile(const FiniteGroup& g, std::size_t n, const BitVector& cocycle) {
  if (n == 0) throw DomainError("degree_zero", "involution profile needs positive degree");
  const kernels::TupleCodec codec(g.order(), n);
  if (cocycle.size() != codec.size()) throw DomainError("dimension_mismatch", "cochain has wrong length");
  const InvolutionData data = groups::involution_data(g);
  std::vector<bool> out;
  for (const auto& cls : data.classes) {
    auto value = [&](Elem x) { return cocycle.get(codec.encode(std::vector<Elem>(n, x))); };
    const bool v = value(cls.representative);
    for (Elem x : cls.elements)
      if (value(x) != v) throw std::logic_error("involution_profile: value depends on the class representative");
    out.push_back(v);
  }
  return out;
}

std::vector<bool> involution_profile(const CohomClass& c) { return involution_profile(*c.group, c.degree, c.cocycle); }

// ---------------------------------------------------------------------------
// Quillen

namespace {

struct QuillenObjects {
  groups::ElementaryAbelianCategory cat;
  std::vector<GroupHom> inclusions;
  std::vector<std::unique_ptr<Cohomology>> coh;
  std::vector<GroupHom> morphisms;  // objects[from] → objects[to] as standalone groups

  QuillenObjects(const Cohomology& hg) : cat(groups::elementary_abelian_category(*hg.group())) {
    for (const auto& obj : cat.objects) {
      auto [grp, inc] = groups::subgroup_as_group(hg.group(), obj);
      inclusions.push_back(inc);
      coh.push_back(std::make_unique<Cohomology>(grp, hg.options()));
    }
    for (const auto& m : cat.morphisms) {
      const auto& to = cat.objects[m.to].elements;
      std::vector<Elem> map;
      for (Elem y : m.map) map.push_back(static_cast<Elem>(std::lower_bound(to.begin(), to.end(), y) - to.begin()));
      morphisms.push_back(GroupHom{coh[m.from]->group(), coh[m.to]->group(), std::move(map)});
    }
  }

  bool available(std::size_t d) const {
    return std::all_of(coh.begin(), coh.end(), [d](const auto& c) { return c->cohomology_available(d); });
  }

  std::vector<std::size_t> offsets(std::size_t d) const {
    std::vector<std::size_t> off{0};
    for (const auto& c : coh) off.push_back(off.back() + c->dim(d));
    return off;
  }

  gf2::Subspace limit(std::size_t d) const {
    const auto off = offsets(d);
    std::vector<BitVector> rows;
    for (std::size_t k = 0; k < morphisms.size(); ++k) {
      const auto& m = cat.morphisms[k];
      const gf2::BitMatrix pull = induced_matrix(*coh[m.from], *coh[m.to], morphisms[k], d);
      for (std::size_t r = 0; r < coh[m.from]->dim(d); ++r) {
        BitVector f(off.back());
        f.flip(off[m.from] + r);
        for (std::size_t s = 0; s < pull.rows(); ++s)
          if (pull.get(s, r)) f.flip(off[m.to] + s);
        rows.push_back(std::move(f));
      }
    }
    return gf2::kernel_basis(gf2::BitMatrix::from_rows(std::move(rows), off.back()));
  }

  // q_G on each basis class of H^d(G), as vectors of the product space
  std::vector<BitVector> restrictions(const Cohomology& hg, std::size_t d) const {
    const auto off = offsets(d);
    std::vector<BitVector> out;
    for (const auto& c : hg.basis(d)) {
      BitVector v(off.back());
      for (std::size_t i = 0; i < coh.size(); ++i) {
        const BitVector r = induced_map(*coh[i], inclusions[i], c).coords;
        for (std::size_t b : r.support()) v.set(off[i] + b);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  BitVector square(const BitVector& v, std::size_t d) const {
    const auto off = offsets(d);
    const auto off2 = offsets(2 * d);
    BitVector out(off2.back());
    for (std::size_t i = 0; i < coh.size(); ++i) {
      BitVector x(coh[i]->dim(d));
      for (std::size_t b = 0; b < x.size(); ++b)
        if (v.get(off[i] + b)) x.set(b);
      const CohomClass c = coh[i]->from_coords(d, x);
      const CohomClass sq = cup(*coh[i], c, c);
      for (std::size_t b : sq.coords.support()) out.set(off2[i] + b);
    }
    return out;
  }
};

}  // namespace

QuillenReport quillen_map(const Cohomology& hg, std::size_t n, std::size_t nilbound, std::size_t powbound) {
  if (!hg.group()->is_two_group()) throw DomainError("not_two_group", "Quillen map is implemented for 2-groups");
  const QuillenObjects q(hg);
  QuillenReport rep;
  rep.degree = n;
  rep.h_dim = hg.dim(n);
  const gf2::Subspace lim = q.limit(n);
  rep.limit_dim = lim.dim();
  std::vector<BitVector> rows;
  for (const auto& v : q.restrictions(hg, n)) {
    auto c = lim.coordinates(v);
    if (!c) throw std::logic_error("quillen_map: restriction family is not compatible");
    rows.push_back(std::move(*c));
  }
  rep.map = gf2::BitMatrix::from_rows(rows, lim.dim());
  rep.image_dim = gf2::rank(rep.map);
  const gf2::Subspace ker = gf2::kernel_basis(rep.map.transpose());
  rep.kernel_dim = ker.dim();

  for (const auto& x : ker.basis()) {
    if (nilbound <= 1) {
      rep.nil_violations.push_back(x);
      continue;
    }
    const CohomClass c = hg.from_coords(n, x);
    bool decided = false;
    for (std::size_t p = 2; p <= nilbound; ++p) {
      const std::size_t deg = p * n;
      if (!hg.coboundaries_available(deg)) break;
      if (hg.is_coboundary(deg, power_cochain(c, p))) {
        decided = true;
        break;
      }
      if (p >= nilbound) {
        rep.nil_violations.push_back(x);
        decided = true;
        break;
      }
    }
    if (!decided) rep.nil_undecided.push_back(x);
  }

  // image of q_G by degree, in product-space coordinates
  std::map<std::size_t, gf2::Echelon> images;
  auto image = [&](std::size_t d) -> const gf2::Echelon& {
    auto it = images.find(d);
    if (it != images.end()) return it->second;
    gf2::Echelon e(q.offsets(d).back());
    for (const auto& v : q.restrictions(hg, d)) e.insert(v);
    return images.emplace(d, std::move(e)).first->second;
  };
  for (const auto& z : lim.basis()) {
    BitVector cur = z;
    std::size_t deg = n;
    bool decided = false;
    for (std::size_t k = 0; k <= powbound; ++k) {
      if (k > 0) {
        if (!q.available(2 * deg) || !hg.cohomology_available(2 * deg)) break;
        cur = q.square(cur, deg);
        deg *= 2;
      }
      if (image(deg).contains(cur)) {
        decided = true;
        break;
      }
      if (k == powbound) {
        rep.power_violations.push_back(z);
        decided = true;
      }
    }
    if (!decided) rep.power_undecided.push_back(z);
  }
  return rep;
}

// ---------------------------------------------------------------------------

graded::GradedAlgebra snapshot(const Cohomology& h, std::size_t top) {
  std::vector<std::size_t> dims;
  std::vector<std::vector<CohomClass>> basis;
  for (std::size_t i = 0; i <= top; ++i) {
    basis.push_back(h.basis(i));
    dims.push_back(basis.back().size());
  }
  graded::GradedAlgebra::Table t(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    t[i].resize(top + 1 - i);
    for (std::size_t j = 0; i + j <= top; ++j)
      for (const auto& a : basis[i])
        for (const auto& b : basis[j]) t[i][j].push_back(cup(h, a, b).coords);
  }
  return graded::GradedAlgebra(std::move(dims), std::move(t));
}

TowerColimit tower_colimit(const freeprod::Tower& t, std::size_t max_degree, const Options& opt) {
  if (t.groups.empty()) throw DomainError("empty_tower", "tower has no stages");
  const std::size_t last = t.groups.size() - 1;
  std::vector<std::unique_ptr<Cohomology>> coh;
  for (const auto& g : t.groups) coh.push_back(std::make_unique<Cohomology>(g, opt));
  std::vector<GroupHom> comp(t.groups.size(), GroupHom::identity(t.groups[last]));
  for (std::size_t k = last; k-- > 0;) comp[k] = t.maps[k].compose_after(comp[k + 1]);

  const Cohomology& hl = *coh[last];
  TowerColimit out;
  out.last = t.groups[last];
  for (std::size_t n = 0; n <= max_degree; ++n) {
    TowerDegree td;
    td.degree = n;
    const std::size_t dim_c = hl.cochain_dim(n);
    for (std::size_t k = 0; k < last; ++k) {
      td.stage_dims.push_back(coh[k]->dim(n));
      std::vector<BitVector> inflated;
      for (const auto& c : coh[k]->basis(n)) inflated.push_back(hl.reduce(n, kernels::pullback(comp[k], n, c.cocycle)));
      const gf2::Subspace span = gf2::Subspace::span(dim_c, inflated);
      td.ranks_to_last.push_back(span.dim());
      if (k == 0) td.stable = span;
    }
    if (last == 0) td.stable = hl.representatives(n);
    td.stable_rank = td.stable.dim();
    out.degrees.push_back(std::move(td));
  }

  std::vector<std::size_t> dims;
  for (const auto& td : out.degrees) dims.push_back(td.stable_rank);
  graded::GradedAlgebra::Table table(max_degree + 1);
  const std::size_t order = out.last->order();
  for (std::size_t i = 0; i <= max_degree; ++i) {
    table[i].resize(max_degree + 1 - i);
    for (std::size_t j = 0; i + j <= max_degree; ++j) {
      const auto& si = out.degrees[i].stable;
      const auto& sj = out.degrees[j].stable;
      for (const auto& a : si.basis())
        for (const auto& b : sj.basis()) {
          const BitVector r = hl.reduce(i + j, kernels::cup(order, i, j, a, b));
          auto c = out.degrees[i + j].stable.coordinates(r);
          if (!c) throw std::logic_error("tower_colimit: stable classes are not closed under cup");
          table[i][j].push_back(std::move(*c));
        }
    }
  }
  out.snapshot = graded::GradedAlgebra(std::move(dims), std::move(table));
  return out;
}

}  // namespace qbool::coh

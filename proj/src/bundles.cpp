#include "qbool/bundles.hpp"

#include "qbool/error.hpp"

namespace qbool::bundles {

void FiniteBundle::validate() const {
  const FiniteGroup& g = *group;
  if (proj.size() != total) throw ValidationError("bundle: projection length differs from |Y|");
  if (action.size() != g.order()) throw ValidationError("bundle: one action row per group element required");
  for (const auto& row : action) {
    if (row.size() != total) throw ValidationError("bundle: action row length differs from |Y|");
    for (std::size_t y : row)
      if (y >= total) throw ValidationError("bundle: action sends a point outside Y");
  }
  for (std::size_t x : proj)
    if (x >= base) throw ValidationError("bundle: projection sends a point outside X");
  for (std::size_t y = 0; y < total; ++y)
    if (action[0][y] != y) throw DomainError("not_action", "identity does not act trivially", {{"y", y}});
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem c = 0; c < g.order(); ++c)
      for (std::size_t y = 0; y < total; ++y)
        if (action[a][action[c][y]] != action[g.mul(a, c)][y])
          throw DomainError("not_action", "action is not compatible with multiplication", {{"g", a}, {"h", c}, {"y", y}});
  for (Elem a = 1; a < g.order(); ++a)
    for (std::size_t y = 0; y < total; ++y)
      if (action[a][y] == y) throw DomainError("not_free", "non-identity element fixes a point", {{"g", a}, {"y", y}});
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t y = 0; y < total; ++y)
      if (proj[action[a][y]] != proj[y])
        throw DomainError("not_invariant", "projection is not G-invariant", {{"g", a}, {"y", y}});
  std::vector<std::size_t> fibre(base, 0);
  for (std::size_t x : proj) ++fibre[x];
  for (std::size_t x = 0; x < base; ++x) {
    if (fibre[x] == 0) throw DomainError("not_surjective", "projection misses a base point", {{"x", x}});
    if (fibre[x] != g.order())
      throw DomainError("fibre_not_orbit", "fibre is not a single G-orbit", {{"x", x}, {"fibre_size", fibre[x]}});
  }
}

FiniteBundle FiniteBundle::trivial(GroupPtr g, std::size_t base) {
  FiniteBundle b;
  const std::size_t n = g->order();
  b.group = g;
  b.total = base * n;
  b.base = base;
  b.proj.resize(b.total);
  b.action.assign(n, std::vector<std::size_t>(b.total));
  for (std::size_t x = 0; x < base; ++x)
    for (Elem e = 0; e < n; ++e) {
      b.proj[x * n + e] = x;
      for (Elem h = 0; h < n; ++h) b.action[h][x * n + e] = x * n + g->mul(h, e);
    }
  return b;
}

std::vector<std::size_t> find_section(const FiniteBundle& b) {
  b.validate();
  std::vector<std::size_t> s(b.base, b.total);
  for (std::size_t y = b.total; y-- > 0;) s[b.proj[y]] = y;
  return s;
}

bool is_section(const FiniteBundle& b, const std::vector<std::size_t>& s) {
  if (s.size() != b.base) return false;
  for (std::size_t x = 0; x < b.base; ++x)
    if (s[x] >= b.total || b.proj[s[x]] != x) return false;
  return true;
}

QuotientBundle quotient_bundle(const FiniteBundle& b, const Subgroup& n) {
  b.validate();
  groups::Quotient q = groups::group_quotient(b.group, n);
  std::vector<std::size_t> orbit(b.total, b.total);
  std::vector<std::size_t> reps;
  for (std::size_t y = 0; y < b.total; ++y) {
    if (orbit[y] != b.total) continue;
    for (Elem m : n.elements) orbit[b.action[m][y]] = reps.size();
    reps.push_back(y);
  }
  FiniteBundle out;
  out.group = q.group;
  out.total = reps.size();
  out.base = b.base;
  for (std::size_t o = 0; o < reps.size(); ++o) out.proj.push_back(b.proj[reps[o]]);
  out.action.assign(q.group->order(), std::vector<std::size_t>(out.total));
  for (Elem a = 0; a < b.group->order(); ++a)
    for (std::size_t o = 0; o < reps.size(); ++o) {
      const std::size_t img = orbit[b.action[a][reps[o]]];
      auto& slot = out.action[q.map(a)][o];
      if (a == q.representatives[q.map(a)]) slot = img;
      else if (slot != img) throw std::logic_error("quotient_bundle: induced action is not well defined");
    }
  // cosets are visited after their representative because it is the least index
  out.validate();
  QuotientBundle qb{std::move(out), std::move(q), std::move(orbit), true};
  for (std::size_t y = 0; y < b.total; ++y)
    qb.commutes = qb.commutes && qb.bundle.proj[qb.orbit_map[y]] == b.proj[y];
  return qb;
}

}  // namespace qbool::bundles

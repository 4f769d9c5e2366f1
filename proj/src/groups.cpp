#include "qbool/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "qbool/error.hpp"
#include "qbool/gf2.hpp"

namespace qbool {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table, std::vector<std::string> labels,
                         std::size_t order_cap)
    : n_(table.size()) {
  if (n_ == 0) throw ValidationError("group table is empty");
  if (n_ > order_cap)
    throw CapExceeded("group order exceeds cap", {{"order", n_}, {"cap", order_cap}});
  table_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    if (table[a].size() != n_) throw ValidationError("group table is not square");
    for (std::size_t b = 0; b < n_; ++b) {
      if (table[a][b] >= n_) throw ValidationError("group table entry out of range");
      table_[a * n_ + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
    if (mul(0, static_cast<Elem>(a)) != a || mul(static_cast<Elem>(a), 0) != a)
      throw DomainError("not_group", "index 0 is not the identity", {{"element", a}});
  // Latin square
  for (std::size_t a = 0; a < n_; ++a) {
    std::vector<char> row_seen(n_, 0), col_seen(n_, 0);
    for (std::size_t b = 0; b < n_; ++b) {
      if (row_seen[table_[a * n_ + b]]++) throw DomainError("not_group", "table row repeats an entry", {{"row", a}});
      if (col_seen[table_[b * n_ + a]]++) throw DomainError("not_group", "table column repeats an entry", {{"column", a}});
    }
  }
  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a * n_ + b] == 0) inverse_[a] = static_cast<Elem>(b);
  for (std::size_t a = 0; a < n_; ++a)
    if (mul(inverse_[a], static_cast<Elem>(a)) != 0)
      throw DomainError("not_group", "element has no two-sided inverse", {{"element", a}});
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      const Elem ab = mul(a, b);
      for (Elem c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw DomainError("not_group", "multiplication is not associative", {{"a", a}, {"b", b}, {"c", c}});
    }
  if (labels.empty()) {
    labels.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n_) throw ValidationError("label count differs from group order");
  labels_ = std::move(labels);
}

Elem FiniteGroup::pow(Elem a, std::size_t k) const {
  Elem r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  return t;
}

bool FiniteGroup::is_two_group() const { return is_power_of_two(n_); }

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

GroupHom GroupHom::make(GroupPtr source, GroupPtr target, std::vector<Elem> map) {
  if (map.size() != source->order()) throw ValidationError("hom map length differs from source order");
  for (Elem y : map)
    if (y >= target->order()) throw ValidationError("hom map entry out of range");
  for (Elem a = 0; a < source->order(); ++a)
    for (Elem b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        throw DomainError("not_homomorphism", "map does not respect multiplication", {{"x", a}, {"y", b}});
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem y : map) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem y : map)
    if (hit[y]++) return false;
  return true;
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
  if (inner.target->order() != source->order()) throw DomainError("dimension_mismatch", "composition: groups do not match");
  std::vector<Elem> m(inner.source->order());
  for (Elem x = 0; x < m.size(); ++x) m[x] = map[inner.map[x]];
  return GroupHom{inner.source, target, std::move(m)};
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<Elem> m(g->order());
  std::iota(m.begin(), m.end(), Elem{0});
  return GroupHom{g, g, std::move(m)};
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::optional<std::size_t> InvolutionData::class_of(Elem x) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].elements.begin(), classes[i].elements.end(), x) != classes[i].elements.end()) return i;
  return std::nullopt;
}

namespace groups {

GroupPtr make_group(std::vector<std::vector<Elem>> table, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

GroupPtr trivial() { return make_group({{0}}, {"e"}); }

GroupPtr cyclic(std::size_t n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (Elem a1 = 0; a1 < ng; ++a1)
    for (Elem b1 = 0; b1 < nh; ++b1) {
      const std::size_t x = a1 * nh + b1;
      labels[x] = "(" + g.label(a1) + "," + h.label(b1) + ")";
      for (Elem a2 = 0; a2 < ng; ++a2)
        for (Elem b2 = 0; b2 < nh; ++b2)
          t[x][a2 * nh + b2] = static_cast<Elem>(g.mul(a1, a2) * nh + h.mul(b1, b2));
    }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr dihedral(std::size_t n) {
  // r^a s^e with index e*n + a; s r^a written as index n + a
  auto idx = [n](std::size_t rot, bool refl) { return static_cast<Elem>((refl ? n : 0) + rot % n); };
  std::vector<std::vector<Elem>> t(2 * n, std::vector<Elem>(2 * n));
  std::vector<std::string> labels(2 * n);
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const bool xs = x >= n;
    const std::size_t xa = x % n;
    const std::string rp = xa == 0 ? "" : (xa == 1 ? "r" : "r" + std::to_string(xa));
    labels[x] = xs ? "s" + rp : (xa == 0 ? "e" : rp);
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const bool ys = y >= n;
      const std::size_t ya = y % n;
      // elements are s^e r^a; r^a s = s r^-a
      if (!xs && !ys) t[x][y] = idx(xa + ya, false);
      else if (!xs && ys) t[x][y] = idx(ya + n - xa, true);
      else if (xs && !ys) t[x][y] = idx(xa + ya, true);
      else t[x][y] = idx(ya + n - xa, false);
    }
  }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr generalized_quaternion(std::size_t m) {
  const std::size_t h = 2 * m;  // order of x
  auto idx = [h](std::size_t a, bool withy) { return static_cast<Elem>((withy ? h : 0) + a % h); };
  std::vector<std::vector<Elem>> t(2 * h, std::vector<Elem>(2 * h));
  std::vector<std::string> labels(2 * h);
  for (std::size_t x = 0; x < 2 * h; ++x) {
    const bool xy = x >= h;
    const std::size_t xa = x % h;
    const std::string xp = xa == 0 ? "" : (xa == 1 ? "x" : "x" + std::to_string(xa));
    labels[x] = xy ? xp + "y" : (xa == 0 ? "1" : xp);
    for (std::size_t y = 0; y < 2 * h; ++y) {
      const bool yy = y >= h;
      const std::size_t ya = y % h;
      // x^a y x^b = x^(a-b) y ; y^2 = x^m
      if (!xy && !yy) t[x][y] = idx(xa + ya, false);
      else if (!xy && yy) t[x][y] = idx(xa + ya, true);
      else if (xy && !yy) t[x][y] = idx(xa + h - ya, true);
      else t[x][y] = idx(xa + h - ya + m, false);
    }
  }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr quaternion() { return generalized_quaternion(2); }

GroupPtr semidirect(const FiniteGroup& n, const FiniteGroup& h, const std::vector<std::vector<Elem>>& action) {
  const std::size_t nn = n.order(), nh = h.order(), total = nn * nh;
  if (action.size() != nh) throw ValidationError("semidirect: one automorphism per element of H required");
  for (const auto& a : action)
    if (a.size() != nn) throw ValidationError("semidirect: automorphism has wrong length");
  std::vector<std::vector<Elem>> t(total, std::vector<Elem>(total));
  std::vector<std::string> labels(total);
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem n1 = 0; n1 < nn; ++n1) {
      const std::size_t x = h1 * nn + n1;
      labels[x] = "(" + n.label(n1) + "," + h.label(h1) + ")";
      for (Elem h2 = 0; h2 < nh; ++h2)
        for (Elem n2 = 0; n2 < nn; ++n2)
          t[x][h2 * nn + n2] = static_cast<Elem>(h.mul(h1, h2) * nn + n.mul(n1, action[h1][n2]));
    }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr from_permutations(const std::vector<std::vector<std::size_t>>& elements, std::vector<std::string> labels) {
  std::map<std::vector<std::size_t>, Elem> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Elem>(i));
  if (index.size() != elements.size()) throw ValidationError("from_permutations: repeated permutation");
  const std::size_t n = elements.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(elements[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = elements[a][elements[b][i]];
      auto it = index.find(c);
      if (it == index.end()) throw DomainError("not_group", "permutation list is not closed under composition");
      t[a][b] = it->second;
    }
  return make_group(std::move(t), std::move(labels));
}

GroupPtr symmetric3() {
  return from_permutations({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}},
                           {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

GroupPtr elementary_abelian(std::size_t rank) {
  GroupPtr g = trivial();
  const GroupPtr z2 = cyclic(2);
  for (std::size_t i = 0; i < rank; ++i) g = direct_product(*g, *z2);
  return g;
}

// ---------------------------------------------------------------------------

Subgroup generated(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Elem s : gens) {
      const Elem y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems)};
}

Subgroup whole(const FiniteGroup& g) {
  std::vector<Elem> e(g.order());
  std::iota(e.begin(), e.end(), Elem{0});
  return Subgroup{std::move(e)};
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s{std::move(elements)};
  if (s.elements.empty() || s.elements.front() != 0)
    throw DomainError("not_subgroup", "subset does not contain the identity");
  for (Elem a : s.elements) {
    if (a >= g.order()) throw ValidationError("subgroup element out of range");
    for (Elem b : s.elements)
      if (!s.contains(g.mul(a, g.inv(b))))
        throw DomainError("not_subgroup", "subset is not closed", {{"a", a}, {"b", b}});
  }
  return s;
}

std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const Subgroup& s) {
  for (Elem n : s.elements)
    for (Elem x = 0; x < g.order(); ++x)
      if (!s.contains(g.conj(n, x))) return std::make_pair(n, x);
  return std::nullopt;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) { return !normality_witness(g, s).has_value(); }

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup{std::move(z)};
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ConjugacyClass> out;
  for (Elem a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    ConjugacyClass c{a, {}};
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem b = g.conj(a, x);
      if (!seen[b]) {
        seen[b] = 1;
        c.elements.push_back(b);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConjugacyClass> order_two_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> out;
  for (auto& c : conjugacy_classes(g))
    if (g.mul(c.representative, c.representative) == 0) out.push_back(std::move(c));
  return out;
}

InvolutionData involution_data(const FiniteGroup& g) {
  InvolutionData d;
  for (Elem a = 1; a < g.order(); ++a)
    if (g.mul(a, a) == 0) d.involutions.push_back(a);
  for (auto& c : conjugacy_classes(g))
    if (c.representative != 0 && g.mul(c.representative, c.representative) == 0) d.classes.push_back(std::move(c));
  return d;
}

std::pair<GroupPtr, GroupHom> subgroup_as_group(const GroupPtr& g, const Subgroup& s) {
  std::map<Elem, Elem> pos;
  for (std::size_t i = 0; i < s.elements.size(); ++i) pos[s.elements[i]] = static_cast<Elem>(i);
  const std::size_t n = s.elements.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = g->label(s.elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      auto it = pos.find(g->mul(s.elements[a], s.elements[b]));
      if (it == pos.end()) throw DomainError("not_subgroup", "subset is not closed");
      t[a][b] = it->second;
    }
  }
  GroupPtr sub = make_group(std::move(t), std::move(labels));
  GroupHom inc{sub, g, s.elements};
  return {sub, inc};
}

Subgroup image(const GroupHom& f) {
  std::vector<Elem> e = f.map;
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Subgroup{std::move(e)};
}

Subgroup kernel(const GroupHom& f) {
  std::vector<Elem> e;
  for (Elem x = 0; x < f.map.size(); ++x)
    if (f.map[x] == 0) e.push_back(x);
  return Subgroup{std::move(e)};
}

Subgroup preimage(const GroupHom& f, const Subgroup& s) {
  std::vector<Elem> e;
  for (Elem x = 0; x < f.map.size(); ++x)
    if (s.contains(f.map[x])) e.push_back(x);
  return Subgroup{std::move(e)};
}

Subgroup sylow2(const FiniteGroup& g) {
  std::size_t target = 1;
  while (g.order() % (target * 2) == 0) target *= 2;
  Subgroup p{{0}};
  while (p.order() < target) {
    bool grown = false;
    for (Elem x = 1; x < g.order() && !grown; ++x) {
      if (p.contains(x) || !is_power_of_two(g.element_order(x))) continue;
      std::vector<Elem> gens = p.elements;
      gens.push_back(x);
      Subgroup q = generated(g, gens);
      if (is_power_of_two(q.order())) {
        p = std::move(q);
        grown = true;
      }
    }
    if (!grown) throw std::logic_error("sylow2: could not extend a non-Sylow 2-subgroup");
  }
  return p;
}

std::vector<Elem> generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup s{{0}};
  for (Elem x = 1; x < g.order() && s.order() < g.order(); ++x) {
    if (s.contains(x)) continue;
    gens.push_back(x);
    s = generated(g, gens);
  }
  return gens;
}

std::vector<GroupHom> homomorphisms(const GroupPtr& g, const GroupPtr& h, std::size_t limit) {
  const std::vector<Elem> gens = generators(*g);
  const std::size_t k = gens.size();
  std::vector<GroupHom> out;
  std::vector<Elem> images(k, 0);
  std::vector<Elem> map(g->order());
  std::vector<char> known(g->order());
  while (true) {
    // extend along the Cayley graph; consistency on every edge makes it a hom
    std::fill(known.begin(), known.end(), 0);
    map[0] = 0;
    known[0] = 1;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const Elem x = queue[qi];
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Elem y = g->mul(x, gens[j]);
        const Elem fy = h->mul(map[x], images[j]);
        if (!known[y]) {
          known[y] = 1;
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          ok = false;
        }
      }
    }
    if (ok) {
      out.push_back(GroupHom{g, h, map});
      if (out.size() >= limit) break;
    }
    std::size_t j = 0;
    while (j < k && ++images[j] == h->order()) images[j++] = 0;
    if (j == k) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

Quotient group_quotient(const GroupPtr& g, const Subgroup& n) {
  if (auto w = normality_witness(*g, n))
    throw DomainError("not_normal", "subgroup is not normal", {{"element", w->first}, {"conjugator", w->second}});
  std::vector<std::int64_t> coset(g->order(), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset[x] >= 0) continue;
    for (Elem m : n.elements) coset[g->mul(x, m)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<Elem>> t(q, std::vector<Elem>(q));
  std::vector<std::string> labels(q);
  for (std::size_t a = 0; a < q; ++a) {
    labels[a] = g->label(reps[a]);
    for (std::size_t b = 0; b < q; ++b) t[a][b] = static_cast<Elem>(coset[g->mul(reps[a], reps[b])]);
  }
  GroupPtr qg = make_group(std::move(t), std::move(labels));
  std::vector<Elem> map(g->order());
  for (Elem x = 0; x < g->order(); ++x) map[x] = static_cast<Elem>(coset[x]);
  GroupHom qmap = GroupHom::make(g, qg, std::move(map));
  return Quotient{qg, std::move(qmap), std::move(reps)};
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) return false;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.mul(a, a) != 0) return false;
  return true;
}

ElementaryCoordinates elementary_coordinates(const FiniteGroup& q) {
  if (!is_elementary_abelian(q)) throw DomainError("not_elementary_abelian", "group is not elementary abelian");
  ElementaryCoordinates ec;
  Subgroup span{{0}};
  for (Elem x = 1; x < q.order() && span.order() < q.order(); ++x) {
    if (span.contains(x)) continue;
    ec.basis.push_back(x);
    span = generated(q, ec.basis);
  }
  const std::size_t r = ec.basis.size();
  ec.coords.assign(q.order(), BitVector(r));
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    Elem e = 0;
    BitVector c(r);
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1U) {
        e = q.mul(e, ec.basis[i]);
        c.set(i);
      }
    ec.coords[e] = c;
  }
  return ec;
}

AbelianQuotient abelian_2torsion_quotient(const GroupPtr& g) {
  std::vector<Elem> gens;
  for (Elem a = 0; a < g->order(); ++a) {
    gens.push_back(g->mul(a, a));
    for (Elem b = 0; b < g->order(); ++b) gens.push_back(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Quotient q = group_quotient(g, generated(*g, gens));
  if (!is_elementary_abelian(*q.group)) throw std::logic_error("abelian_2torsion_quotient: quotient not elementary abelian");
  const std::size_t rank = log2_exact(q.group->order());
  return AbelianQuotient{q.group, std::move(q.map), rank};
}

std::size_t hom_to_f2_dimension(const FiniteGroup& g) {
  const std::size_t n = g.order();
  gf2::BitMatrix m(n * n + 1, n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto& row = m.row(x * n + y);
      row.flip(x);
      row.flip(y);
      row.flip(g.mul(x, y));
    }
  m.set(n * n, 0, true);  // f(e) = 0
  return gf2::kernel_basis(m).dim();
}

SylowTransfer sylow_transfer(const GroupHom& f, Elem x) {
  const FiniteGroup& c = *f.source;
  if (!f.target->is_two_group())
    throw DomainError("not_two_group", "target of the homomorphism is not a 2-group", {{"order", f.target->order()}});
  if (!f.is_surjective()) throw DomainError("not_surjective", "homomorphism is not surjective");
  if (x >= c.order() || c.mul(x, x) != 0)
    throw DomainError("not_two_torsion", "element does not square to the identity", {{"element", x}});
  Subgroup p = sylow2(c);
  std::vector<char> hit(f.target->order(), 0);
  for (Elem y : p.elements) hit[f(y)] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw std::logic_error("sylow_transfer: restriction to the Sylow subgroup is not surjective");
  for (Elem h = 0; h < c.order(); ++h) {
    const Elem y = c.conj(x, h);
    if (p.contains(y) && f(y) == f(x)) return SylowTransfer{std::move(p), h, y};
  }
  throw std::logic_error("sylow_transfer: no conjugator found");
}

std::optional<std::size_t> ElementaryAbelianCategory::find_morphism(std::size_t from, std::size_t to,
                                                                    const std::vector<Elem>& map) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].from == from && morphisms[i].to == to && morphisms[i].map == map) return i;
  return std::nullopt;
}

ElementaryAbelianCategory elementary_abelian_category(const FiniteGroup& g) {
  std::vector<Elem> involutions;
  for (Elem a = 1; a < g.order(); ++a)
    if (g.mul(a, a) == 0) involutions.push_back(a);
  std::set<Subgroup> found{Subgroup{{0}}};
  std::vector<Subgroup> frontier{Subgroup{{0}}};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier)
      for (Elem t : involutions) {
        if (s.contains(t)) continue;
        bool commutes = true;
        for (Elem a : s.elements)
          if (g.mul(a, t) != g.mul(t, a)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<Elem> e = s.elements;
        for (Elem a : s.elements) e.push_back(g.mul(a, t));
        std::sort(e.begin(), e.end());
        Subgroup bigger{std::move(e)};
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }
  ElementaryAbelianCategory cat;
  cat.objects.assign(found.begin(), found.end());
  std::stable_sort(cat.objects.begin(), cat.objects.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  cat.rank = 0;
  for (const auto& o : cat.objects) cat.rank = std::max(cat.rank, log2_exact(o.order()));
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    for (std::size_t j = 0; j < cat.objects.size(); ++j) {
      const auto& a = cat.objects[i];
      const auto& b = cat.objects[j];
      if (a.order() > b.order()) continue;
      std::set<std::vector<Elem>> maps;
      for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Elem> m;
        m.reserve(a.order());
        bool inside = true;
        for (Elem y : a.elements) {
          const Elem z = g.conj(y, x);
          if (!b.contains(z)) {
            inside = false;
            break;
          }
          m.push_back(z);
        }
        if (inside && maps.insert(m).second) cat.morphisms.push_back(ConjugationMorphism{i, j, x, std::move(m)});
      }
    }
  return cat;
}

}  // namespace groups
}  // namespace qbool

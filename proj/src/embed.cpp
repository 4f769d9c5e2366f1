#include "qbool/embed.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qbool/error.hpp"
#include "qbool/kernels.hpp"

namespace qbool::embed {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

Elem class_rep(const FiniteGroup& g, Elem x) {
  Elem best = x;
  for (Elem h = 0; h < g.order(); ++h) best = std::min(best, g.conj(x, h));
  return best;
}

bool conjugate(const FiniteGroup& g, Elem x, Elem y) { return class_rep(g, x) == class_rep(g, y); }

// preimages[a] = α^-1(a) in increasing order
std::vector<std::vector<Elem>> fibres(const GroupHom& alpha) {
  std::vector<std::vector<Elem>> out(alpha.target->order());
  for (Elem b = 0; b < alpha.source->order(); ++b) out[alpha(b)].push_back(b);
  return out;
}

void require_two_groups(const EmbeddingProblem& e) {
  for (const auto* g : {e.G().get(), e.A().get(), e.B().get()})
    if (!g->is_two_group()) throw DomainError("not_two_group", "embedding problem involves a group that is not a 2-group", {{"order", g->order()}});
}

}  // namespace

EmbeddingProblem EmbeddingProblem::make(GroupHom phi, GroupHom alpha) {
  if (!same_group(*phi.target, *alpha.target))
    throw DomainError("target_mismatch", "phi and alpha have different targets");
  if (!alpha.is_surjective()) throw DomainError("not_surjective", "alpha is not surjective");
  alpha.target = phi.target;
  return EmbeddingProblem{std::move(phi), std::move(alpha)};
}

bool EmbeddingProblem::is_solution(const GroupHom& s) const {
  if (s.source->order() != G()->order() || s.target->order() != B()->order()) return false;
  for (Elem g = 0; g < G()->order(); ++g)
    if (alpha(s(g)) != phi(g)) return false;
  return true;
}

EmbeddingProblem pullback(const EmbeddingProblem& e, const GroupHom& chi) {
  return EmbeddingProblem::make(e.phi.compose_after(chi), e.alpha);
}

Classification classify_problem(const EmbeddingProblem& e) {
  const FiniteGroup &g = *e.G(), &a = *e.A(), &b = *e.B();
  Classification c;
  c.real = true;
  std::vector<char> over(a.order(), 0);  // a has an involution of B above it
  for (Elem y = 1; y < b.order(); ++y)
    if (b.mul(y, y) == 0) over[e.alpha(y)] = 1;
  for (Elem t = 1; t < g.order(); ++t) {
    if (g.mul(t, t) != 0 || e.phi(t) == 0) continue;
    if (!over[e.phi(t)]) {
      c.real = false;
      c.non_real_witness = t;
      break;
    }
  }
  c.two_problem = a.is_two_group() && b.is_two_group();
  const Subgroup k = groups::kernel(e.alpha);
  const Subgroup z = groups::center(b);
  c.central = std::all_of(k.elements.begin(), k.elements.end(), [&](Elem x) { return z.contains(x); });
  c.kernel_order = k.order();
  return c;
}

GroupHom ReducedProblem::lift(const GroupHom& solution) const {
  if (!problem.is_solution(solution)) throw DomainError("not_solution", "map does not solve the reduced problem");
  return p_inclusion.compose_after(solution);
}

ReducedProblem reduce_to_2_embedding(const EmbeddingProblem& e) {
  if (!e.G()->is_two_group()) throw DomainError("not_two_group", "source group is not a 2-group", {{"order", e.G()->order()}});
  const auto cls = classify_problem(e);
  if (!cls.real) throw DomainError("not_real", "embedding problem is not real", {{"involution", *cls.non_real_witness}});
  const Subgroup h = groups::image(e.phi);
  const Subgroup c = groups::preimage(e.alpha, h);
  auto [hg, h_inc] = groups::subgroup_as_group(e.A(), h);
  auto [cg, c_inc] = groups::subgroup_as_group(e.B(), c);
  auto index_in = [](const Subgroup& s, Elem x) {
    return static_cast<Elem>(std::lower_bound(s.elements.begin(), s.elements.end(), x) - s.elements.begin());
  };
  std::vector<Elem> phi_map(e.G()->order()), f_map(cg->order());
  for (Elem g = 0; g < e.G()->order(); ++g) phi_map[g] = index_in(h, e.phi(g));
  for (Elem x = 0; x < cg->order(); ++x) f_map[x] = index_in(h, e.alpha(c_inc(x)));
  const GroupHom f = GroupHom::make(cg, hg, f_map);

  const Subgroup p_in_c = groups::sylow2(*cg);
  std::vector<Elem> p_elems;
  for (Elem x : p_in_c.elements) p_elems.push_back(c_inc(x));
  std::sort(p_elems.begin(), p_elems.end());
  const Subgroup p{p_elems};
  auto [pg, p_inc] = groups::subgroup_as_group(e.B(), p);
  std::vector<Elem> alpha_map(pg->order());
  for (Elem x = 0; x < pg->order(); ++x) alpha_map[x] = index_in(h, e.alpha(p_inc(x)));
  ReducedProblem r{EmbeddingProblem::make(GroupHom::make(e.G(), hg, phi_map), GroupHom::make(pg, hg, alpha_map)),
                   h_inc, p_inc, {}};

  // realness of the reduced problem: each needed involution conjugates into P
  std::vector<Elem> lifts(e.A()->order(), 0);
  for (Elem y = e.B()->order(); y-- > 1;)
    if (e.B()->mul(y, y) == 0 && c.contains(y)) lifts[e.alpha(y)] = y;
  for (Elem t = 1; t < e.G()->order(); ++t) {
    if (e.G()->mul(t, t) != 0 || e.phi(t) == 0) continue;
    auto w = groups::sylow_transfer(f, index_in(c, lifts[e.phi(t)]));
    if (!p_in_c.contains(w.conjugate) || f(w.conjugate) != phi_map[t])
      throw std::logic_error("reduce_to_2_embedding: Sylow transfer failed");
    r.witnesses.push_back(std::move(w));
  }
  const auto rc = classify_problem(r.problem);
  if (!rc.real || !rc.two_problem) throw std::logic_error("reduce_to_2_embedding: reduced problem is not a real 2-problem");
  return r;
}

std::vector<Subgroup> central_filtration(const FiniteGroup& b, const Subgroup& k) {
  if (!b.is_two_group()) throw DomainError("not_two_group", "group is not a 2-group", {{"order", b.order()}});
  if (!groups::is_normal(b, k)) throw DomainError("not_normal", "subgroup is not normal");
  const auto bp = std::make_shared<const FiniteGroup>(b);
  std::vector<Subgroup> chain{Subgroup{{0}}};
  while (chain.back().order() < k.order()) {
    const auto q = groups::group_quotient(bp, chain.back());
    const Subgroup z = groups::center(*q.group);
    std::optional<Elem> pick;
    for (Elem x : z.elements) {
      if (x == 0 || q.group->mul(x, x) != 0) continue;
      if (k.contains(q.representatives[x])) {
        pick = x;
        break;
      }
    }
    if (!pick) throw std::logic_error("central_filtration: no central element of order two in the image");
    std::vector<Elem> next;
    for (Elem y = 0; y < b.order(); ++y)
      if (q.map(y) == 0 || q.map(y) == *pick) next.push_back(y);
    chain.push_back(Subgroup{std::move(next)});
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i + 1].order() != 2 * chain[i].order()) throw std::logic_error("central_filtration: step is not of order two");
  return chain;
}

std::vector<Elem> least_section(const EmbeddingProblem& e) {
  const auto fib = fibres(e.alpha);
  std::vector<Elem> s(e.G()->order());
  for (Elem g = 0; g < e.G()->order(); ++g) s[g] = fib[e.phi(g)].front();
  return s;
}

std::vector<Elem> random_section(const EmbeddingProblem& e, std::uint64_t seed) {
  const auto fib = fibres(e.alpha);
  std::mt19937_64 rng(seed);
  std::vector<Elem> s(e.G()->order());
  for (Elem g = 1; g < e.G()->order(); ++g) {
    const auto& f = fib[e.phi(g)];
    s[g] = f[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)];
  }
  return s;
}

BitVector obstruction_cocycle(const EmbeddingProblem& e, const std::vector<Elem>& section) {
  const FiniteGroup &g = *e.G(), &b = *e.B();
  if (section.size() != g.order() || section[0] != 0) throw DomainError("not_normalized", "section must send 1 to 1");
  const kernels::TupleCodec c2(g.order(), 2);
  BitVector c(c2.size());
  Elem tup[2];
  for (Elem x = 1; x < g.order(); ++x)
    for (Elem y = 1; y < g.order(); ++y) {
      const Elem v = b.mul(b.mul(section[g.mul(x, y)], b.inv(section[y])), b.inv(section[x]));
      if (e.alpha(v) != 0) throw DomainError("not_section", "map is not a section over phi");
      if (v != 0) {
        tup[0] = x;
        tup[1] = y;
        c.set(c2.encode(tup, 2));
      }
    }
  return c;
}

coh::CohomClass obstruction_class(const coh::Cohomology& hg, const EmbeddingProblem& e, std::uint64_t seed) {
  const auto cls = classify_problem(e);
  if (cls.kernel_order != 2) throw DomainError("kernel_not_order_two", "kernel of alpha does not have order two", {{"order", cls.kernel_order}});
  if (!cls.central) throw DomainError("not_central", "kernel of alpha is not central");
  auto o = hg.from_cocycle(2, obstruction_cocycle(e, least_section(e)));
  if (hg.from_cocycle(2, obstruction_cocycle(e, random_section(e, seed))) != o)
    throw std::logic_error("obstruction_class: class depends on the section");
  return o;
}

LiftingData validate_lifting(const EmbeddingProblem& e, const LiftingData& l) {
  const FiniteGroup &g = *e.G(), &a = *e.A(), &b = *e.B();
  const auto inv = groups::involution_data(g);
  LiftingData out;
  for (const auto& [x, y] : l.f) {
    if (x >= g.order() || !inv.class_of(x)) throw DomainError("inconsistent_lifting", "key is not an involution of G", {{"key", x}});
    if (y >= b.order() || b.mul(y, y) != 0) throw DomainError("inconsistent_lifting", "value does not have order dividing 2", {{"key", x}, {"value", y}});
    const Elem rx = class_rep(g, x);
    if (out.f.contains(rx)) throw DomainError("inconsistent_lifting", "class given twice", {{"key", x}});
    if (!conjugate(a, e.alpha(y), e.phi(x)))
      throw DomainError("inconsistent_lifting", "alpha(f(x)) is not conjugate to phi(x)", {{"key", x}, {"value", y}});
    out.f[rx] = class_rep(b, y);
  }
  for (const auto& c : inv.classes)
    if (!out.f.contains(c.representative))
      throw DomainError("inconsistent_lifting", "involution class without a value", {{"key", c.representative}});
  return out;
}

LiftingData make_lifting_data(const EmbeddingProblem& e) {
  const auto inv = groups::involution_data(*e.G());
  const auto bcls = groups::order_two_classes(*e.B());
  LiftingData l;
  for (const auto& c : inv.classes) {
    const Elem x = c.representative;
    std::optional<Elem> pick;
    for (const auto& bc : bcls)
      if (bc.representative != 0 && conjugate(*e.A(), e.alpha(bc.representative), e.phi(x))) {
        pick = bc.representative;
        break;
      }
    if (!pick && e.phi(x) == 0) pick = 0;
    if (!pick) throw DomainError("not_real", "no class of B lies over phi(x)", {{"class", x}});
    l.f[x] = *pick;
  }
  return validate_lifting(e, l);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::solved: return "solved";
    case Verdict::obstructed: return "obstructed";
    case Verdict::lift_unmatched: return "lift_unmatched";
  }
  return "";
}

SolveReport solve(const EmbeddingProblem& e, const std::optional<LiftingData>& l, const coh::Options& opt) {
  require_two_groups(e);
  std::optional<LiftingData> resolved;
  auto lifting = [&]() -> const LiftingData& {
    if (!resolved) resolved = l ? validate_lifting(e, *l) : make_lifting_data(e);
    return *resolved;
  };
  const GroupPtr& g = e.G();
  const auto chain = central_filtration(*e.B(), groups::kernel(e.alpha));
  const std::size_t n = chain.size() - 1;
  std::vector<groups::Quotient> q;
  for (const auto& nk : chain) q.push_back(groups::group_quotient(e.B(), nk));
  const auto inv = groups::involution_data(*g);
  coh::Cohomology hg(g, opt);

  SolveReport rep;
  rep.steps = n;
  // φ viewed in B/K
  const auto fib = fibres(e.alpha);
  std::vector<Elem> cur(g->order());
  for (Elem x = 0; x < g->order(); ++x) cur[x] = q[n].map(fib[e.phi(x)].front());
  GroupHom phik = GroupHom::make(g, q[n].group, cur);

  const kernels::TupleCodec c1(g->order(), 1);
  const auto d1 = kernels::coboundary_columns(*g, 1);
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t k = n - step;
    const auto& qk = q[k];
    const FiniteGroup& bk = *qk.group;
    std::vector<Elem> amap(bk.order());
    for (Elem x = 0; x < bk.order(); ++x) amap[x] = q[k + 1].map(qk.representatives[x]);
    const auto ek = EmbeddingProblem::make(phik, GroupHom::make(qk.group, q[k + 1].group, amap));
    Elem z = 0;
    for (Elem x = 1; x < bk.order(); ++x)
      if (amap[x] == 0) z = x;

    auto o = obstruction_class(hg, ek);
    if (!o.is_zero()) {
      rep.verdict = Verdict::obstructed;
      rep.obstruction = std::move(o);
      rep.step = step;
      return rep;
    }
    // s = section twisted by β with dβ = c
    auto s = least_section(ek);
    gf2::TrackedEchelon te(d1.empty() ? 0 : d1.front().size(), d1.size());
    for (const auto& col : d1) te.insert(col);
    const auto red = te.reduce(obstruction_cocycle(ek, s));
    if (red.remainder.any()) throw std::logic_error("solve: zero class without a cobounding cochain");
    for (Elem x = 1; x < g->order(); ++x)
      if (red.combination.get(x - 1)) s[x] = bk.mul(s[x], z);

    auto residual = [&](const std::vector<Elem>& hom) {
      std::vector<bool> r;
      for (const auto& c : inv.classes) {
        const Elem want = class_rep(bk, qk.map(lifting().f.at(c.representative)));
        r.push_back(class_rep(bk, hom[c.representative]) != want);
      }
      return r;
    };
    auto r = residual(s);
    if (std::find(r.begin(), r.end(), true) != r.end()) {
      const std::size_t h1 = hg.dim(1);
      gf2::BitMatrix m(r.size(), h1);
      BitVector rhs(r.size());
      const auto& reps = hg.representatives(1);
      for (std::size_t i = 0; i < r.size(); ++i) {
        rhs.assign(i, r[i]);
        const Elem x = inv.classes[i].representative;
        for (std::size_t j = 0; j < h1; ++j) m.set(i, j, reps.basis()[j].get(x - 1));
      }
      const auto sol = gf2::rank_and_solve(m, rhs);
      if (!sol.solution) {
        rep.verdict = Verdict::lift_unmatched;
        rep.residual = std::move(r);
        rep.step = step;
        return rep;
      }
      BitVector chi(c1.size());
      for (std::size_t j : sol.solution->support()) chi ^= reps.basis()[j];
      for (Elem x = 1; x < g->order(); ++x)
        if (chi.get(x - 1)) s[x] = bk.mul(s[x], z);
      r = residual(s);
      if (std::find(r.begin(), r.end(), true) != r.end()) throw std::logic_error("solve: character correction failed");
      rep.corrected_steps.push_back(step);
    }
    phik = GroupHom::make(g, qk.group, s);
  }
  if (n == 0) {
    for (const auto& c : inv.classes)
      if (class_rep(*e.B(), phik(c.representative)) != lifting().f.at(c.representative)) {
        rep.verdict = Verdict::lift_unmatched;
        rep.residual.assign(inv.classes.size(), false);
        for (std::size_t i = 0; i < inv.classes.size(); ++i)
          rep.residual[i] = class_rep(*e.B(), phik(inv.classes[i].representative)) != lifting().f.at(inv.classes[i].representative);
        return rep;
      }
  }
  GroupHom sol = GroupHom::make(g, e.B(), phik.map);
  if (!e.is_solution(sol)) throw std::logic_error("solve: result does not solve the problem");
  for (const auto& c : inv.classes)
    if (class_rep(*e.B(), sol(c.representative)) != lifting().f.at(c.representative))
      throw std::logic_error("solve: result does not respect the lifting data");
  rep.verdict = Verdict::solved;
  rep.solution = std::move(sol);
  return rep;
}

}  // namespace qbool::embed

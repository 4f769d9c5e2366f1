// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qbool/bundles.hpp"
#include "qbool/cohomology.hpp"
#include "qbool/embed.hpp"
#include "qbool/error.hpp"
#include "qbool/reconstruct.hpp"
#include "qbool/stone.hpp"

using namespace qbool;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit;
  const bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("%s %2d %-34s %7.2f s (limit %g s)%s  %s\n", pass ? "PASS" : "FAIL", id, name, secs, limit,
              in_time ? "" : " TIMEOUT", o.detail.str().c_str());
  std::fflush(stdout);
}

bool conjugate(const FiniteGroup& g, Elem a, Elem b) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.conj(a, x) == b) return true;
  return false;
}

std::size_t squaring_kernel_dim(const graded::GradedAlgebra& a) {
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < a.dim(1); ++i) {
    auto e = BitVector::unit(a.dim(1), i);
    auto sq = a.mul(1, e, 1, e);
    std::vector<int> r(a.dim(2));
    for (std::size_t j = 0; j < a.dim(2); ++j) r[j] = sq.get(j);
    rows.push_back(r);
  }
  return a.dim(1) - (a.dim(2) ? oracle::dense_rank(rows) : 0);
}

void stone_duality(Outcome& o) {
  std::mt19937_64 rng(1001);
  std::size_t checked = 0;
  for (std::size_t dim = 1; dim <= 4; ++dim)
    for (int rep = 0; rep < 20; ++rep) {
      auto r = stone::BooleanRing::scrambled(dim, rng);
      auto sp = stone::spectrum(r);
      auto cert = stone::duality_roundtrip(r, sp.space);
      o.require(cert.sigma.ring_hom && cert.sigma.bijective, "sigma isomorphism");
      o.require(cert.beta.applicable && cert.beta.continuous && cert.beta.bijective && cert.beta.inverse_continuous,
                "beta homeomorphism");
      o.require(cert.ok(), "certificate");
      o.require(oracle::atoms(r).size() == sp.space.points(), "spectrum size");
      ++checked;
    }
  o.detail << checked << " rings";
}

void atom_suite(Outcome& o) {
  std::mt19937_64 rng(1002);
  std::size_t bases = 0;
  for (std::size_t dim = 1; dim <= 4; ++dim)
    for (int rep = 0; rep < 20; ++rep) {
      auto r = stone::BooleanRing::scrambled(dim, rng);
      auto a = stone::atoms(r);
      o.require(a == oracle::atoms(r), "atoms match enumeration");
      o.require(a.size() == dim, "atom count");
      BitVector sum(dim);
      for (std::size_t i = 0; i < a.size(); ++i) {
        sum ^= a[i];
        for (std::size_t j = i + 1; j < a.size(); ++j) o.require(r.mul(a[i], a[j]).none(), "orthogonal");
      }
      o.require(sum == r.one(), "sum is one");
      if (dim > 3) continue;
      // every orthogonal basis consists of atoms
      std::vector<BitVector> nz;
      for (const auto& x : r.elements())
        if (x.any()) nz.push_back(x);
      const std::size_t m = nz.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != dim) continue;
        std::vector<BitVector> s;
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1) s.push_back(nz[i]);
        bool orth = true;
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j) orth = orth && r.mul(s[i], s[j]).none();
        if (!orth || gf2::Subspace::span(dim, s).dim() != dim) continue;
        ++bases;
        for (const auto& x : s) o.require(stone::is_atom(r, x), "orthogonal basis element is an atom");
      }
    }
  o.detail << bases << " orthogonal bases enumerated";
}

void completion_suite(Outcome& o) {
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto x = corpus::random_space(n, rng);
    auto c = stone::profinite_completion(x);
    auto spec = oracle::clopen_atoms(n, x.opens());
    o.require(c.completion.points() == spec.size(), "completion size");
    o.require(c.completion.is_discrete(), "completion discrete");
    auto classes = c.classes;
    std::sort(classes.begin(), classes.end());
    o.require(classes == spec, "classes are the clopen atoms");
    o.require(c.quotient.is_continuous(), "quotient continuous");
    for (std::size_t p = 0; p < n; ++p)
      o.require((c.classes[c.quotient.point_map[p]] >> p) & 1, "quotient sends a point to its class");
    std::set<std::size_t> img(c.to_spectrum.begin(), c.to_spectrum.end());
    o.require(img.size() == spec.size(), "bijection to the spectrum");
    o.require(c.matches_spectrum, "matches spectrum");
  }
  o.detail << "50 spaces";
}

void bundle_suite(Outcome& o) {
  std::mt19937_64 rng(1004);
  std::vector<corpus::Named> pool;
  for (const auto& l : {corpus::two_groups(), corpus::odd_groups()})
    for (const auto& n : l)
      if (n.group->order() <= 8) pool.push_back(n);
  for (int i = 0; i < 100; ++i) {
    const auto& g = pool[rng() % pool.size()].group;
    auto b = corpus::random_bundle(g, 1 + rng() % 6, rng);
    b.validate();
    auto s = bundles::find_section(b);
    o.require(bundles::is_section(b, s), "section verified");
    for (std::size_t x = 0; x < b.base; ++x) o.require(b.proj[s[x]] == x, "section over each point");
    // a random normal subgroup: normal closure of a random element
    Subgroup n = groups::generated(*g, {static_cast<Elem>(rng() % g->order())});
    for (bool grew = true; grew;) {
      grew = false;
      for (Elem x = 0; x < g->order() && !grew; ++x)
        for (Elem y : n.elements)
          if (!n.contains(g->conj(y, x))) {
            auto gens = n.elements;
            gens.push_back(g->conj(y, x));
            n = groups::generated(*g, gens);
            grew = true;
            break;
          }
    }
    auto q = bundles::quotient_bundle(b, n);
    q.bundle.validate();
    o.require(q.commutes, "projections commute");
    o.require(q.bundle.total * n.order() == b.total, "orbit count");
    o.require(q.bundle.base == b.base, "base preserved");
    o.require(bundles::is_section(q.bundle, bundles::find_section(q.bundle)), "quotient section");
  }
  o.detail << "100 bundles";
}

void dimension_suite(Outcome& o) {
  coh::Options six;
  six.nmax = 6;
  coh::Cohomology z2(groups::cyclic(2), six);
  for (std::size_t n = 0; n <= 6; ++n) o.require(z2.dim(n) == 1, "H^n(Z/2)");
  coh::Cohomology v4(groups::elementary_abelian(2));
  auto series = oracle::poincare(2, 4);
  for (std::size_t n = 0; n <= 4; ++n) o.require(v4.dim(n) == series[n] && series[n] == n + 1, "H^n(Z/2 x Z/2)");
  coh::Cohomology z4(corpus::z4());
  for (std::size_t n = 0; n <= 4; ++n) o.require(z4.dim(n) == 1, "H^n(Z/4)");
  o.require((std::size_t{1} << z4.dim(1)) == oracle::homs_to_f2(*corpus::z4()), "H^1(Z/4) = Hom");
  o.detail << "Z/2 to degree 6, Z/2xZ/2 and Z/4 to degree 4";
}

void obstruction_suite(Outcome& o) {
  std::mt19937_64 rng(1006);
  auto problems = corpus::central_problems(50, rng);
  std::size_t zero = 0, nonzero = 0;
  std::vector<coh::CohomClass> classes;
  for (const auto& e : problems) {
    coh::Cohomology h(e.G());
    auto c = embed::obstruction_class(h, e);
    auto lift = oracle::exhaustive_lift(e);
    o.require(c.is_zero() == lift.has_value(), "o(E) = 0 iff a lift exists");
    if (lift) o.require(e.is_solution(GroupHom::make(e.G(), e.B(), *lift)), "oracle lift is a solution");
    (c.is_zero() ? zero : nonzero)++;
    classes.push_back(c);
  }
  o.require(problems.size() >= 50, "corpus size");
  std::vector<corpus::Named> pool = corpus::two_groups();
  for (const auto& n : corpus::odd_groups()) pool.push_back(n);
  std::size_t pulled = 0, pulled_nonzero = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t k = rng() % problems.size();
    const auto& e = problems[k];
    const auto& src = pool[rng() % pool.size()].group;
    auto homs = groups::homomorphisms(src, e.G(), 512);
    const auto& chi = homs[rng() % homs.size()];
    coh::Cohomology hh(src);
    auto lhs = coh::induced_map(hh, chi, classes[k]);
    auto rhs = embed::obstruction_class(hh, embed::pullback(e, chi));
    o.require(lhs == rhs, "naturality");
    ++pulled;
    pulled_nonzero += !rhs.is_zero();
  }
  o.detail << problems.size() << " problems (" << zero << " split, " << nonzero << " obstructed), " << pulled
           << " pullbacks (" << pulled_nonzero << " nonzero)";
}

void solver_suite(Outcome& o) {
  auto d8 = corpus::d8();
  auto q = corpus::central_quotient(d8, 2);

  auto e1 = embed::EmbeddingProblem::make(q.map, q.map);
  const embed::LiftingData l1{{{2, 2}, {4, 4}, {5, 5}}};
  auto r1 = embed::solve(e1, l1);
  o.require(r1.verdict == embed::Verdict::solved, "problem 1 solved");
  if (r1.solution) {
    o.require(e1.is_solution(*r1.solution), "problem 1 certificate");
    for (auto [x, y] : l1.f) o.require(conjugate(*d8, (*r1.solution)(x), y), "problem 1 lifting data");
  }
  o.require(r1.corrected_steps.empty(), "problem 1 needs no correction");

  auto b = groups::direct_product(*d8, *groups::cyclic(2));
  std::vector<Elem> a(16);
  for (Elem x = 0; x < 16; ++x) a[x] = q.map(x / 2);
  auto e2 = embed::EmbeddingProblem::make(q.map, GroupHom::make(b, q.group, a));
  const embed::LiftingData l2{{{2, 4}, {4, 9}, {5, 10}}};
  auto r2 = embed::solve(e2, l2);
  o.require(r2.verdict == embed::Verdict::solved, "problem 2 solved");
  if (r2.solution) {
    o.require(e2.is_solution(*r2.solution), "problem 2 certificate");
    for (auto [x, y] : l2.f) o.require(conjugate(*b, (*r2.solution)(x), y), "problem 2 lifting data");
  }
  o.require(!r2.corrected_steps.empty(), "problem 2 needs a correction");

  auto z2 = groups::cyclic(2);
  auto e3 = embed::EmbeddingProblem::make(GroupHom::identity(z2), corpus::mod2(corpus::z4()));
  auto r3 = embed::solve(e3, std::nullopt);
  o.require(r3.verdict == embed::Verdict::obstructed, "Z/4 obstructed");
  o.require(r3.obstruction && !r3.obstruction->is_zero(), "nonzero obstruction");
  std::string kind;
  try {
    embed::make_lifting_data(e3);
  } catch (const DomainError& e) {
    kind = e.kind();
  }
  o.require(kind == "not_real", "non-real rejected");
  o.detail << "corrections " << r1.corrected_steps.size() << "/" << r2.corrected_steps.size() << ", Z/4 at step "
           << r3.step;
}

void quillen_suite(Outcome& o) {
  std::size_t groups_done = 0, nil_und = 0, pow_und = 0;
  for (const auto& n : corpus::two_groups()) {
    coh::Cohomology h(n.group);
    for (std::size_t d = 1; d <= 3; ++d) {
      auto r = coh::quillen_map(h, d, 4, 2);
      o.require(r.nil_violations.empty(), n.name + " nilpotency");
      o.require(r.power_violations.empty(), n.name + " powers");
      nil_und += r.nil_undecided.size();
      pow_und += r.power_undecided.size();
    }
    ++groups_done;
  }
  o.detail << groups_done << " groups, undecided: " << nil_und << " kernel, " << pow_und << " limit";
}

void tower_suite(Outcome& o) {
  auto t = freeprod::quotient_tower({{}, {"a", "b"}}, 4);
  o.require(t.groups.size() == 3 && t.groups[0]->order() == 4 && t.groups[2]->order() == 16, "tower D4, D8, D16");
  auto c = coh::tower_colimit(t, 3);
  for (std::size_t n = 1; n <= 3; ++n) o.require(c.degrees[n].stable_rank == 2, "stable rank 2");
  const auto& last = *c.last;
  auto inv = groups::involution_data(last);
  const auto& h = t.homs.back();
  std::vector<std::size_t> refl;
  for (Elem x : h.x_images) refl.push_back(*inv.class_of(x));
  o.require(refl.size() == 2 && refl[0] != refl[1], "two reflection classes");
  std::vector<std::vector<int>> rows;
  for (const auto& z : c.degrees[2].stable.basis()) {
    auto p = coh::involution_profile(last, 2, z);
    rows.push_back({p[refl[0]], p[refl[1]]});
  }
  o.require(rows.size() == 2 && oracle::dense_rank(rows) == 2, "profile bijective on reflection classes");
  o.detail << "profiles";
  for (const auto& r : rows) o.detail << " (" << r[0] << "," << r[1] << ")";
}

void roundtrip_suite(Outcome& o) {
  std::mt19937_64 rng(1010);
  std::size_t cases = 0;
  for (std::size_t d1 = 0; d1 <= 3; ++d1)
    for (std::size_t bd = 0; bd <= 4; ++bd) {
      auto b = stone::BooleanRing::scrambled(bd, rng);
      auto r = reconstruct::roundtrip(d1, b, 3, &rng);
      o.require(r.ok(), "round trip d1=" + std::to_string(d1) + " dim B=" + std::to_string(bd));
      o.require(r.y_count == d1 && r.x_points == bd, "invariants");
      auto a = reconstruct::build_connected_sum(d1, b, 3).random_automorphic_copy(rng);
      auto p = reconstruct::reconstruct_presentation(a);
      o.require(p.y_count == squaring_kernel_dim(a) && p.x.points() == a.dim(2), "presentation against direct counts");
      ++cases;
    }
  std::size_t shapes = 0;
  for (auto [y, x] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}}) {
    auto a = reconstruct::build_connected_sum(y, stone::BooleanRing::scrambled(x, rng), 3);
    auto p = reconstruct::reconstruct_presentation(a);
    auto v = reconstruct::verify_reconstruction(p, a, 3, 3);
    o.require(v.ok(), "verify shape (" + std::to_string(y) + "," + std::to_string(x) + ")");
    ++shapes;
  }
  o.detail << cases << " round trips, " << shapes << " verified shapes";
}

}  // namespace

int main() {
  criterion(1, "stone duality", 5, stone_duality);
  criterion(2, "atoms", 5, atom_suite);
  criterion(3, "completion vs spectrum", 10, completion_suite);
  criterion(4, "principal bundles", 10, bundle_suite);
  criterion(5, "cohomology dimensions", 60, dimension_suite);
  criterion(6, "obstruction oracle and naturality", 60, obstruction_suite);
  criterion(7, "lifting-data solver", 5, solver_suite);
  criterion(8, "Quillen map, order <= 16", 120, quillen_suite);
  criterion(9, "dihedral tower", 60, tower_suite);
  criterion(10, "reconstruction round trip", 60, roundtrip_suite);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

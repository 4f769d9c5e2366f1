#include "qbool/stone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qbool/error.hpp"

namespace qbool::stone {

using Set = FiniteSpace::Set;

namespace {

BitVector set_to_vector(Set s, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (s >> i & 1U) v.set(i);
  return v;
}

Set vector_to_set(const BitVector& v) {
  Set s = 0;
  for (std::size_t i : v.support()) s |= Set{1} << i;
  return s;
}

nlohmann::json bits_json(const BitVector& v) { return v.to_vector(); }

}  // namespace

std::vector<std::size_t> set_members(Set s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

Set make_set(const std::vector<std::size_t>& members) {
  Set s = 0;
  for (std::size_t i : members) s |= Set{1} << i;
  return s;
}

// ---------------------------------------------------------------------------
// BooleanRing

BooleanRing::BooleanRing(std::vector<std::string> labels, BitVector one, std::vector<std::vector<BitVector>> mult)
    : labels_(std::move(labels)), one_(std::move(one)), mult_(std::move(mult)) {
  const std::size_t n = mult_.size();
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != n) throw ValidationError("ring: label count differs from dimension");
  if (one_.size() != n) throw ValidationError("ring: unit has wrong length");
  for (const auto& row : mult_) {
    if (row.size() != n) throw ValidationError("ring: multiplication table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw ValidationError("ring: product has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mult_[i][j] != mult_[j][i])
        throw DomainError("not_boolean", "multiplication is not commutative", {{"i", i}, {"j", j}});
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector e = BitVector::unit(n, i);
    if (mul(one_, e) != e) throw DomainError("not_boolean", "unit does not act as identity", {{"i", i}});
    if (mult_[i][i] != e) throw DomainError("not_boolean", "basis element is not idempotent", {{"i", i}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul(mult_[i][j], BitVector::unit(n, k)) != mul(BitVector::unit(n, i), mult_[j][k]))
          throw DomainError("not_boolean", "multiplication is not associative", {{"i", i}, {"j", j}, {"k", k}});
  if (n <= 12)
    for (const auto& x : elements())
      if (mul(x, x) != x) throw DomainError("not_boolean", "element is not idempotent", {{"element", bits_json(x)}});
}

BooleanRing BooleanRing::product_of_fields(std::size_t n) {
  std::vector<std::vector<BitVector>> mult(n, std::vector<BitVector>(n, BitVector(n)));
  BitVector one(n);
  for (std::size_t i = 0; i < n; ++i) {
    mult[i][i].set(i);
    one.set(i);
  }
  return BooleanRing({}, one, mult);
}

BooleanRing BooleanRing::change_basis(const gf2::BitMatrix& p) const {
  const std::size_t n = dim();
  if (p.rows() != n || p.cols() != n) throw DomainError("dimension_mismatch", "change_basis: matrix has wrong shape");
  const auto pinv = gf2::inverse(p);
  if (!pinv) throw DomainError("singular", "change_basis: matrix is not invertible");
  auto coords = [&](const BitVector& v) {
    BitVector c(n);
    for (std::size_t i : v.support()) c ^= pinv->row(i);
    return c;
  };
  std::vector<std::vector<BitVector>> mult(n, std::vector<BitVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = coords(mul(p.row(i), p.row(j)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  return BooleanRing(std::move(labels), coords(one_), std::move(mult));
}

BooleanRing BooleanRing::scrambled(std::size_t n, std::mt19937_64& rng) {
  return product_of_fields(n).change_basis(gf2::random_invertible(n, rng));
}

BitVector BooleanRing::mul(const BitVector& x, const BitVector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DomainError("dimension_mismatch", "ring element has wrong length");
  BitVector out(n);
  for (std::size_t i : x.support())
    for (std::size_t j : y.support()) out ^= mult_[i][j];
  return out;
}

std::vector<BitVector> BooleanRing::elements() const {
  const std::size_t n = dim();
  if (n > 20) throw CapExceeded("ring too large to enumerate", {{"dim", n}});
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) v.set(i);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BitVector> atoms(const BooleanRing& r) {
  if (r.dim() == 0) return {};
  std::vector<BitVector> parts{r.one()};
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const BitVector e = BitVector::unit(r.dim(), i);
    std::vector<BitVector> next;
    for (const auto& p : parts) {
      BitVector q = r.mul(p, e);
      BitVector rest = p ^ q;
      if (q.any()) next.push_back(std::move(q));
      if (rest.any()) next.push_back(std::move(rest));
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool is_atom(const BooleanRing& r, const BitVector& x) {
  if (x.none()) return false;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const BitVector p = r.mul(x, BitVector::unit(r.dim(), i));
    if (p.any() && p != x) return false;
  }
  return r.mul(x, x) == x;
}

gf2::Subspace ideal_span(const BooleanRing& r, const std::vector<BitVector>& gens) {
  std::vector<BitVector> vs;
  for (const auto& g : gens) {
    vs.push_back(g);
    for (std::size_t i = 0; i < r.dim(); ++i) vs.push_back(r.mul(BitVector::unit(r.dim(), i), g));
  }
  return gf2::Subspace::span(r.dim(), vs);
}

PrincipalGenerator principal_generator(const BooleanRing& r, const BitVector& x, const BitVector& y) {
  BitVector z = x ^ y ^ r.mul(x, y);
  const bool same = ideal_span(r, {x, y}) == ideal_span(r, {z});
  return {std::move(z), same};
}

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::size_t n_points, const std::vector<Set>& opens) : n_(n_points) {
  if (n_ > max_points) throw CapExceeded("space has too many points", {{"points", n_}, {"cap", max_points}});
  for (Set s : opens)
    if ((s & ~full()) != 0) throw ValidationError("open set mentions a point outside the space");
  // intersections first, then all unions of the resulting base
  std::set<Set> base(opens.begin(), opens.end());
  base.insert(full());
  std::vector<Set> work(base.begin(), base.end());
  while (!work.empty()) {
    const Set a = work.back();
    work.pop_back();
    std::vector<Set> fresh;
    for (Set b : base)
      if (!base.count(a & b)) fresh.push_back(a & b);
    for (Set f : fresh)
      if (base.insert(f).second) work.push_back(f);
  }
  std::set<Set> top{0};
  for (Set b : base) {
    std::vector<Set> add;
    for (Set t : top)
      if (!top.count(t | b)) add.push_back(t | b);
    top.insert(add.begin(), add.end());
  }
  opens_.assign(top.begin(), top.end());
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<Set> singles;
  for (std::size_t i = 0; i < n; ++i) singles.push_back(Set{1} << i);
  return FiniteSpace(n, singles);
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) { return FiniteSpace(n, {}); }

FiniteSpace FiniteSpace::from_lists(std::size_t n_points, const std::vector<std::vector<std::size_t>>& opens) {
  std::vector<Set> sets;
  for (const auto& o : opens) {
    for (std::size_t p : o)
      if (p >= n_points) throw ValidationError("open set mentions a point outside the space");
    sets.push_back(make_set(o));
  }
  return FiniteSpace(n_points, sets);
}

bool FiniteSpace::is_open(Set s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

std::vector<Set> FiniteSpace::clopens() const {
  std::vector<Set> out;
  for (Set s : opens_)
    if (is_closed(s)) out.push_back(s);
  return out;
}

bool FiniteSpace::is_discrete() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!is_open(Set{1} << i)) return false;
  return true;
}

bool FiniteSpace::is_totally_separated() const {
  const auto cl = clopens();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const bool separated = std::any_of(cl.begin(), cl.end(), [&](Set c) { return ((c >> i) & 1U) != ((c >> j) & 1U); });
      if (!separated) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// ContinuousMap

Set ContinuousMap::preimage(Set s) const {
  Set out = 0;
  for (std::size_t i = 0; i < point_map.size(); ++i)
    if (s >> point_map[i] & 1U) out |= Set{1} << i;
  return out;
}

bool ContinuousMap::is_continuous() const {
  return std::all_of(target.opens().begin(), target.opens().end(), [&](Set u) { return source.is_open(preimage(u)); });
}

bool ContinuousMap::is_bijective() const {
  if (source.points() != target.points()) return false;
  std::vector<char> hit(target.points(), 0);
  for (std::size_t p : point_map)
    if (hit[p]++) return false;
  return true;
}

ContinuousMap ContinuousMap::make(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> point_map) {
  if (point_map.size() != source.points()) throw ValidationError("map length differs from the number of source points");
  for (std::size_t p : point_map)
    if (p >= target.points()) throw ValidationError("map sends a point outside the target");
  ContinuousMap f{std::move(source), std::move(target), std::move(point_map)};
  for (Set u : f.target.opens())
    if (!f.source.is_open(f.preimage(u)))
      throw DomainError("not_continuous", "preimage of an open set is not open", {{"open", set_members(u)}});
  return f;
}

// ---------------------------------------------------------------------------
// spectrum and function rings

Spectrum spectrum(const BooleanRing& r) {
  Spectrum s;
  s.atoms = atoms(r);
  s.space = FiniteSpace::discrete(s.atoms.size());
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    std::vector<BitVector> others;
    for (std::size_t j = 0; j < s.atoms.size(); ++j)
      if (j != i) others.push_back(s.atoms[j]);
    s.ideals.push_back(gf2::Subspace::span(r.dim(), others));
  }
  return s;
}

BitVector FunctionRing::coordinates(Set clopen) const {
  auto c = span.coordinates(set_to_vector(clopen, points));
  if (!c) throw DomainError("not_clopen", "set is not clopen", {{"set", set_members(clopen)}});
  return *c;
}

Set FunctionRing::support(const BitVector& element) const {
  Set s = 0;
  for (std::size_t i : element.support()) s ^= basis_functions[i];
  return s;
}

FunctionRing functions_ring(const FiniteSpace& x) {
  FunctionRing f;
  f.points = x.points();
  std::vector<BitVector> indicators;
  for (Set c : x.clopens()) indicators.push_back(set_to_vector(c, x.points()));
  f.span = gf2::Subspace::span(x.points(), indicators);
  for (const auto& b : f.span.basis()) f.basis_functions.push_back(vector_to_set(b));
  const std::size_t k = f.span.dim();
  std::vector<std::vector<BitVector>> mult(k, std::vector<BitVector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mult[i][j] = f.coordinates(f.basis_functions[i] & f.basis_functions[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("f" + std::to_string(i));
  const BitVector one = k == 0 ? BitVector(0) : f.coordinates(x.full());
  f.ring = BooleanRing(std::move(labels), one, std::move(mult));
  return f;
}

// ---------------------------------------------------------------------------
// duality

namespace {

// σ(v) as the set of atoms a with v·a ≠ 0
Set sigma_of(const BooleanRing& r, const std::vector<BitVector>& at, const BitVector& v) {
  Set s = 0;
  for (std::size_t i = 0; i < at.size(); ++i)
    if (r.mul(v, at[i]).any()) s |= Set{1} << i;
  return s;
}

// Point of Spec(target ring) lying under each point of Spec(source ring)
// along a ring hom psi: target → source, i.e. a ↦ the atom a' with psi(a')·a ≠ 0.
std::vector<std::size_t> spec_of_hom(const BooleanRing& source, const std::vector<BitVector>& source_atoms,
                                     const std::vector<BitVector>& target_atom_images) {
  std::vector<std::size_t> out;
  for (const auto& a : source_atoms) {
    std::size_t found = target_atom_images.size();
    for (std::size_t q = 0; q < target_atom_images.size(); ++q)
      if (source.mul(target_atom_images[q], a).any()) {
        found = q;
        break;
      }
    out.push_back(found);
  }
  return out;
}

}  // namespace

SigmaCheck sigma_check(const BooleanRing& r) {
  SigmaCheck c;
  const auto at = atoms(r);
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i) c.images.push_back(sigma_of(r, at, BitVector::unit(n, i)));
  bool hom = sigma_of(r, at, r.one()) == (at.size() == 64 ? ~Set{0} : (Set{1} << at.size()) - 1);
  for (std::size_t i = 0; i < n && hom; ++i)
    for (std::size_t j = 0; j < n && hom; ++j) {
      const BitVector ei = BitVector::unit(n, i), ej = BitVector::unit(n, j);
      hom = sigma_of(r, at, r.mul(ei, ej)) == (c.images[i] & c.images[j]) &&
            sigma_of(r, at, ei ^ ej) == (c.images[i] ^ c.images[j]);
    }
  c.ring_hom = hom;
  std::vector<BitVector> rows;
  for (Set s : c.images) rows.push_back(set_to_vector(s, at.size()));
  c.bijective = at.size() == n && gf2::rank(gf2::BitMatrix::from_rows(rows, at.size())) == n;
  return c;
}

BetaCheck beta_check(const FiniteSpace& x) {
  BetaCheck b;
  b.applicable = x.is_totally_separated();
  const FunctionRing f = functions_ring(x);
  const Spectrum spec = spectrum(f.ring);
  std::vector<Set> supports;
  for (const auto& a : spec.atoms) supports.push_back(f.support(a));
  b.map.assign(x.points(), spec.atoms.size());
  for (std::size_t p = 0; p < x.points(); ++p)
    for (std::size_t q = 0; q < supports.size(); ++q)
      if (supports[q] >> p & 1U) b.map[p] = q;
  const ContinuousMap beta{x, spec.space, b.map};
  b.continuous = beta.is_continuous();
  b.bijective = beta.is_bijective();
  if (b.bijective) {
    std::vector<std::size_t> inv(x.points());
    for (std::size_t p = 0; p < x.points(); ++p) inv[b.map[p]] = p;
    b.inverse_continuous = ContinuousMap{spec.space, x, inv}.is_continuous();
  }
  return b;
}

bool DualityCertificate::ok() const {
  const bool beta_ok = !beta.applicable || (beta.continuous && beta.bijective && beta.inverse_continuous);
  return sigma.ring_hom && sigma.bijective && beta_ok && naturality.map_continuous &&
         naturality.functor_is_ring_hom && naturality.sigma_square && naturality.beta_square;
}

DualityCertificate duality_roundtrip(const BooleanRing& r, const FiniteSpace& x, const std::optional<ContinuousMap>& f) {
  DualityCertificate cert;
  cert.sigma = sigma_check(r);
  cert.beta = beta_check(x);

  std::vector<std::size_t> id(x.points());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  const ContinuousMap map = f ? *f : ContinuousMap{x, x, id};
  if (!(map.source == x)) throw ValidationError("duality: map source differs from the given space");
  NaturalityCheck& nat = cert.naturality;
  nat.map_continuous = map.is_continuous();
  if (!nat.map_continuous) return cert;

  // BB(f) : R1 = BB(X') → R2 = BB(X)
  const FunctionRing r1 = functions_ring(map.target);
  const FunctionRing r2 = functions_ring(map.source);
  auto bbf = [&](const BitVector& u) { return r2.coordinates(map.preimage(r1.support(u))); };
  const std::size_t k1 = r1.ring.dim();
  bool hom = bbf(r1.ring.one()) == r2.ring.one();
  for (std::size_t i = 0; i < k1 && hom; ++i)
    for (std::size_t j = 0; j < k1 && hom; ++j) {
      const BitVector ei = BitVector::unit(k1, i), ej = BitVector::unit(k1, j);
      hom = bbf(r1.ring.mul(ei, ej)) == r2.ring.mul(bbf(ei), bbf(ej));
    }
  nat.functor_is_ring_hom = hom;

  const auto at1 = atoms(r1.ring);
  const auto at2 = atoms(r2.ring);
  std::vector<BitVector> at1_images;
  for (const auto& a : at1) at1_images.push_back(bbf(a));
  const auto spec_bbf = spec_of_hom(r2.ring, at2, at1_images);  // Spec R2 → Spec R1

  // β square: Spec(BB f) ∘ β_X = β_X' ∘ f
  const BetaCheck b2 = cert.beta;
  const BetaCheck b1 = beta_check(map.target);
  bool beta_sq = true;
  for (std::size_t p = 0; p < map.source.points(); ++p)
    beta_sq = beta_sq && spec_bbf[b2.map[p]] == b1.map[map.point_map[p]];
  nat.beta_square = beta_sq;

  // σ square: σ_R2 ∘ ψ = BB(Spec ψ) ∘ σ_R1 with ψ = BB(f)
  bool sigma_sq = true;
  for (std::size_t i = 0; i < k1 && sigma_sq; ++i) {
    const BitVector u = BitVector::unit(k1, i);
    const Set lhs = sigma_of(r2.ring, at2, bbf(u));
    const Set s1 = sigma_of(r1.ring, at1, u);
    Set rhs = 0;
    for (std::size_t p = 0; p < at2.size(); ++p)
      if (spec_bbf[p] < at1.size() && (s1 >> spec_bbf[p] & 1U)) rhs |= Set{1} << p;
    sigma_sq = lhs == rhs;
  }
  nat.sigma_square = sigma_sq;
  return cert;
}

// ---------------------------------------------------------------------------
// completion and refinement

namespace {

// Group points by their membership pattern in `sets`; blocks ordered by least point.
std::vector<Set> signature_blocks(std::size_t n, const std::vector<Set>& sets) {
  std::map<std::vector<bool>, std::size_t> index;
  std::vector<Set> blocks;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> sig;
    for (Set s : sets) sig.push_back((s >> p & 1U) != 0);
    auto [it, fresh] = index.emplace(sig, blocks.size());
    if (fresh) blocks.push_back(0);
    blocks[it->second] |= Set{1} << p;
  }
  return blocks;
}

}  // namespace

Completion profinite_completion(const FiniteSpace& x) {
  Completion c;
  c.classes = signature_blocks(x.points(), x.clopens());
  c.completion = FiniteSpace::discrete(c.classes.size());
  std::vector<std::size_t> q(x.points());
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (std::size_t p : set_members(c.classes[k])) q[p] = k;
  c.quotient = ContinuousMap::make(x, c.completion, q);

  // independent route: atoms of BB(X)
  const FunctionRing f = functions_ring(x);
  const Spectrum spec = spectrum(f.ring);
  c.to_spectrum.assign(c.classes.size(), spec.atoms.size());
  bool ok = spec.atoms.size() == c.classes.size();
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (std::size_t a = 0; a < spec.atoms.size(); ++a)
      if (f.support(spec.atoms[a]) == c.classes[k]) c.to_spectrum[k] = a;
  std::vector<char> hit(spec.atoms.size() + 1, 0);
  for (std::size_t a : c.to_spectrum) {
    if (a == spec.atoms.size() || hit[a]) ok = false;
    hit[a] = 1;
  }
  c.matches_spectrum = ok;
  return c;
}

std::vector<Set> clopen_partition_refine(const FiniteSpace& x, const std::vector<Set>& cover) {
  Set covered = 0;
  for (Set u : cover) {
    if ((u & ~x.full()) != 0) throw ValidationError("cover element mentions a point outside the space");
    if (!x.is_clopen(u)) throw DomainError("not_clopen", "cover element is not clopen", {{"set", set_members(u)}});
    covered |= u;
  }
  if (covered != x.full())
    throw DomainError("not_cover", "cover does not cover the space", {{"missing", set_members(x.full() & ~covered)}});
  return signature_blocks(x.points(), cover);
}

}  // namespace qbool::stone

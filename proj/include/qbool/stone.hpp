#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbool/bits.hpp"
#include "qbool/gf2.hpp"

namespace qbool::stone {

/// Finite Boolean ring given by structure constants in an arbitrary basis.
/// Elements are coordinate vectors in that basis.
class BooleanRing {
 public:
  BooleanRing() = default;
  /// Validates commutativity, associativity, the unit and x*x = x.
  BooleanRing(std::vector<std::string> labels, BitVector one, std::vector<std::vector<BitVector>> mult);
  /// F2^n in the standard (atomic) basis.
  static BooleanRing product_of_fields(std::size_t n);
  /// Same ring in the basis given by the rows of p (old coordinates).
  BooleanRing change_basis(const gf2::BitMatrix& p) const;
  /// product_of_fields(n) in a uniformly random basis.
  static BooleanRing scrambled(std::size_t n, std::mt19937_64& rng);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const BitVector& one() const { return one_; }
  BitVector zero() const { return BitVector(dim()); }
  const BitVector& basis_product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  BitVector mul(const BitVector& x, const BitVector& y) const;
  /// All 2^dim elements in counting order (dim ≤ 20).
  std::vector<BitVector> elements() const;

 private:
  std::vector<std::string> labels_;
  BitVector one_;
  std::vector<std::vector<BitVector>> mult_;
};

/// Pairwise orthogonal minimal idempotents, sorted by coordinate vector.
std::vector<BitVector> atoms(const BooleanRing& r);
bool is_atom(const BooleanRing& r, const BitVector& x);

/// Finite topological space on at most 20 points; subsets are bitmasks.
class FiniteSpace {
 public:
  using Set = std::uint64_t;
  static constexpr std::size_t max_points = 20;

  FiniteSpace() = default;
  /// Closes the family under finite unions and intersections and adds ∅, X.
  FiniteSpace(std::size_t n_points, const std::vector<Set>& opens);
  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);
  static FiniteSpace from_lists(std::size_t n_points, const std::vector<std::vector<std::size_t>>& opens);

  std::size_t points() const { return n_; }
  Set full() const { return n_ == 64 ? ~Set{0} : (Set{1} << n_) - 1; }
  const std::vector<Set>& opens() const { return opens_; }
  bool is_open(Set s) const;
  bool is_closed(Set s) const { return is_open(full() & ~s); }
  bool is_clopen(Set s) const { return is_open(s) && is_closed(s); }
  std::vector<Set> clopens() const;
  bool is_discrete() const;
  /// Distinct points are separated by clopen sets.
  bool is_totally_separated() const;
  bool operator==(const FiniteSpace&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Set> opens_;  // sorted
};

std::vector<std::size_t> set_members(FiniteSpace::Set s);
FiniteSpace::Set make_set(const std::vector<std::size_t>& members);

struct ContinuousMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> point_map;

  /// Throws DomainError "not_continuous" with the offending open.
  static ContinuousMap make(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> point_map);
  FiniteSpace::Set preimage(FiniteSpace::Set s) const;
  bool is_continuous() const;
  bool is_bijective() const;
};

struct Spectrum {
  FiniteSpace space;                  // discrete, one point per atom
  std::vector<BitVector> atoms;
  std::vector<gf2::Subspace> ideals;  // maximal ideal at each point
};
Spectrum spectrum(const BooleanRing& r);

/// BB(X): continuous F2-valued functions, i.e. indicators of clopen sets.
/// The ring basis is the reduced echelon basis of the clopen indicators.
struct FunctionRing {
  BooleanRing ring;
  std::vector<FiniteSpace::Set> basis_functions;  // support of each basis element
  gf2::Subspace span;                             // clopen indicators in F2^points
  /// Coordinates of the indicator of a clopen set.
  BitVector coordinates(FiniteSpace::Set clopen) const;
  FiniteSpace::Set support(const BitVector& element) const;
  std::size_t points = 0;
};
FunctionRing functions_ring(const FiniteSpace& x);

struct SigmaCheck {
  std::vector<FiniteSpace::Set> images;  // σ(basis element) as a set of spectrum points
  bool ring_hom = false;
  bool bijective = false;
};
struct BetaCheck {
  bool applicable = false;              // X totally separated
  std::vector<std::size_t> map;         // point of X ↦ point of Spec(BB(X))
  bool continuous = false;
  bool bijective = false;
  bool inverse_continuous = false;
};
struct NaturalityCheck {
  bool map_continuous = false;
  bool functor_is_ring_hom = false;  // BB(f) : BB(X') → BB(X)
  bool sigma_square = false;
  bool beta_square = false;
};
struct DualityCertificate {
  SigmaCheck sigma;
  BetaCheck beta;
  NaturalityCheck naturality;
  bool ok() const;
};
/// σ for R, β for X, and naturality along f (identity on X when absent).
DualityCertificate duality_roundtrip(const BooleanRing& r, const FiniteSpace& x,
                                     const std::optional<ContinuousMap>& f = std::nullopt);
SigmaCheck sigma_check(const BooleanRing& r);
BetaCheck beta_check(const FiniteSpace& x);

struct Completion {
  FiniteSpace completion;        // discrete
  ContinuousMap quotient;        // X → X̂
  std::vector<FiniteSpace::Set> classes;
  std::vector<std::size_t> to_spectrum;  // X̂ point ↦ Spec(BB(X)) point
  bool matches_spectrum = false;
};
Completion profinite_completion(const FiniteSpace& x);

/// Atoms of the subring of BB(X) generated by the clopen cover, as point sets.
std::vector<FiniteSpace::Set> clopen_partition_refine(const FiniteSpace& x, const std::vector<FiniteSpace::Set>& cover);

struct PrincipalGenerator {
  BitVector generator;
  bool same_ideal = false;
};
PrincipalGenerator principal_generator(const BooleanRing& r, const BitVector& x, const BitVector& y);
/// The ideal R·x + R·y + ... as a subspace.
gf2::Subspace ideal_span(const BooleanRing& r, const std::vector<BitVector>& gens);

}  // namespace qbool::stone

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qbool/bits.hpp"
#include "qbool/freeprod.hpp"
#include "qbool/gf2.hpp"
#include "qbool/graded.hpp"
#include "qbool/groups.hpp"

namespace qbool::coh {

struct Options {
  std::size_t nmax = 4;             // largest degree handled
  std::size_t cochain_cap = 60000;  // largest cochain space dimension
  std::size_t order_cap = 64;
};

/// A class in H^n(G, F2). `cocycle` is the canonical representative (reduced
/// modulo coboundaries) and `coords` its coordinates in the canonical basis.
struct CohomClass {
  GroupPtr group;
  std::size_t degree = 0;
  BitVector cocycle;
  BitVector coords;

  bool is_zero() const { return coords.none(); }
  bool operator==(const CohomClass& o) const { return degree == o.degree && coords == o.coords; }
};

/// Mod-2 cohomology of one finite group via normalized bar cochains.
/// Per-degree data is computed on first use and cached; all methods are
/// safe to call concurrently.
class Cohomology {
 public:
  explicit Cohomology(GroupPtr g, Options opt = {});

  const GroupPtr& group() const { return g_; }
  const Options& options() const { return opt_; }
  /// dim C^n, throwing CapExceeded above the cochain cap or nmax.
  std::size_t cochain_dim(std::size_t n) const;
  /// Whether B^n is computable (C^n within caps).
  bool coboundaries_available(std::size_t n) const;
  /// Whether H^n is computable (C^(n+1) within caps).
  bool cohomology_available(std::size_t n) const;

  const gf2::Echelon& coboundaries(std::size_t n) const;
  const std::vector<BitVector>& cocycles(std::size_t n) const;
  std::size_t dim(std::size_t n) const;
  /// Canonical representatives of the basis of H^n, in reduced echelon form.
  const gf2::Subspace& representatives(std::size_t n) const;

  std::vector<CohomClass> basis(std::size_t n) const;
  CohomClass basis_class(std::size_t n, std::size_t i) const;
  CohomClass zero(std::size_t n) const;
  CohomClass unit() const;
  CohomClass from_coords(std::size_t n, const BitVector& coords) const;
  /// Throws DomainError "not_cocycle" unless d z = 0.
  CohomClass from_cocycle(std::size_t n, const BitVector& z) const;
  /// Canonical form of a cochain modulo B^n.
  BitVector reduce(std::size_t n, const BitVector& cochain) const;
  bool is_coboundary(std::size_t n, const BitVector& cochain) const;

 private:
  struct Level {  // elimination of the columns of d^k
    std::vector<BitVector> kernel;  // Z^k
    gf2::Echelon image;             // B^(k+1)
  };
  struct Degree {
    gf2::Subspace reps;
  };
  const Level& level(std::size_t k) const;
  const Degree& degree_data(std::size_t n) const;

  GroupPtr g_;
  Options opt_;
  gf2::Echelon b0_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::size_t, std::unique_ptr<Level>> levels_;
  mutable std::map<std::size_t, std::unique_ptr<Degree>> degrees_;
};

CohomClass add(const CohomClass& a, const CohomClass& b);
/// Cochain-level cup product of the representatives.
BitVector cup_cochain(const CohomClass& c, const CohomClass& d);
CohomClass cup(const Cohomology& h, const CohomClass& c, const CohomClass& d);
/// c^k as a cochain of degree k * deg c.
BitVector power_cochain(const CohomClass& c, std::size_t k);

/// h^*(c) for h : H → G, with `source` the cohomology of H.
CohomClass induced_map(const Cohomology& source, const GroupHom& h, const CohomClass& c);
/// Matrix of h^* : H^n(G) → H^n(H); row i is the image of basis class i.
gf2::BitMatrix induced_matrix(const Cohomology& source, const Cohomology& target, const GroupHom& h, std::size_t n);

/// Greedy degree-ascending generators of H^{≤bound}(H) as a module over
/// H^*(G) acting through restriction along `inclusion`.
std::vector<CohomClass> module_generators_over_image(const Cohomology& g, const Cohomology& h,
                                                     const GroupHom& inclusion, std::size_t bound);

/// Value of a degree-n cocycle on (x, ..., x) for each involution class of G:
/// the restriction to <x> as a multiple of the generator of H^n(Z/2).
std::vector<bool> involution_profile(const FiniteGroup& g, std::size_t n, const BitVector& cocycle);
std::vector<bool> involution_profile(const CohomClass& c);

struct QuillenReport {
  std::size_t degree = 0;
  std::size_t h_dim = 0;
  std::size_t limit_dim = 0;
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
  gf2::BitMatrix map;                      // H^n(G) → limit, rows in limit coordinates
  std::vector<BitVector> nil_violations;   // kernel classes with non-vanishing bounded power
  std::vector<BitVector> nil_undecided;    // powers beyond the degree caps
  std::vector<BitVector> power_violations; // limit elements with no 2-power in the image
  std::vector<BitVector> power_undecided;
  bool injective() const { return kernel_dim == 0; }
  bool clean() const { return nil_violations.empty() && power_violations.empty(); }
};
/// Restriction to the limit over elementary abelian subgroups, with bounded
/// nilpotency and power checks. Kernel and limit are checked on bases; by
/// additivity of squaring this covers every element when the nilpotency
/// bound is a power of two.
QuillenReport quillen_map(const Cohomology& g, std::size_t n, std::size_t nilbound, std::size_t powbound);

/// Graded algebra H^0..H^top with cup products in the canonical bases.
graded::GradedAlgebra snapshot(const Cohomology& h, std::size_t top);

struct TowerDegree {
  std::size_t degree = 0;
  std::vector<std::size_t> stage_dims;     // dim H^n of each stage except the last
  std::vector<std::size_t> ranks_to_last;  // rank of inflation from each stage except the last
  std::size_t stable_rank = 0;             // rank from the first stage
  gf2::Subspace stable;                    // reduced stable representatives in C^n(last)
};
struct TowerColimit {
  std::vector<TowerDegree> degrees;        // degrees 0..max_degree
  graded::GradedAlgebra snapshot;          // stable subring
  GroupPtr last;
};
TowerColimit tower_colimit(const freeprod::Tower& t, std::size_t max_degree, const Options& opt = {});

}  // namespace qbool::coh

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbool/cohomology.hpp"
#include "qbool/gf2.hpp"
#include "qbool/graded.hpp"
#include "qbool/stone.hpp"

namespace qbool::reconstruct {

using graded::GradedAlgebra;

/// Dual algebra on d1 generators ⊓ graded Boolean algebra on b, degrees 0..top.
/// Degree 1 lists the d1 dual generators first, then the basis of b.
GradedAlgebra build_connected_sum(std::size_t d1, const stone::BooleanRing& b, std::size_t top);

struct Decomposition {
  gf2::Subspace d1;               // kernel of squaring on A^1
  gf2::Subspace complement;       // W with A^1 = D1 ⊕ W
  stone::BooleanRing ring;        // on the basis of W
  BitVector k;                    // one quasi-canonical element
  bool degenerate = false;        // A^i = 0 for all i ≥ 2
  /// identifications[i]: row r is the image in A^i of ring basis element r
  /// (index 0 unused).
  std::vector<gf2::BitMatrix> identifications;

  /// k + D1, enumerated (dim D1 ≤ 20).
  std::vector<BitVector> coset() const;
};
/// Throws DomainError "not_connected_sum" naming the failing identity.
Decomposition decompose(const GradedAlgebra& a);

enum class Kind { boolean, quasi_boolean, neither };
const char* kind_name(Kind k);
Kind classify(const GradedAlgebra& a);

struct PresentationOut {
  std::size_t y_count = 0;
  stone::FiniteSpace x;  // discrete
};
/// Throws DomainError "not_connected_sum".
PresentationOut reconstruct_presentation(const GradedAlgebra& a);

struct DegreeMatch {
  std::size_t degree = 0;
  std::size_t expected = 0;
  std::size_t stable = 0;
  bool match = false;
};
struct VerifyReport {
  std::string tower;
  std::vector<DegreeMatch> degrees;
  bool products_match = false;  // stable subring decomposes with the same invariants
  bool ok() const;
};
/// Throws "unsupported_shape" for shapes without a cofinal curated tower.
VerifyReport verify_reconstruction(const PresentationOut& p, const GradedAlgebra& a, std::size_t depth,
                                   std::size_t degree_bound, const coh::Options& opt = {});

struct RoundtripResult {
  bool isomorphic = false;          // rebuilt algebra ≅ input via the identifications
  bool invariants_preserved = false;
  std::size_t y_count = 0;
  std::size_t x_points = 0;
  bool ok() const { return isomorphic && invariants_preserved; }
};
/// build → (random graded automorphism) → decompose → rebuild.
RoundtripResult roundtrip(std::size_t d1, const stone::BooleanRing& b, std::size_t top, std::mt19937_64* rng = nullptr);

}  // namespace qbool::reconstruct

namespace qbool::coh {

struct FIsoReport {
  std::vector<std::pair<std::size_t, BitVector>> nil_violations;
  std::vector<std::pair<std::size_t, BitVector>> nil_undecided;
  std::vector<std::pair<std::size_t, BitVector>> power_violations;
  std::vector<std::pair<std::size_t, BitVector>> power_undecided;
  bool both_boolean = false;
  std::optional<bool> bijective;  // checked when both sides are Boolean and the report is clean
  bool clean() const { return nil_violations.empty() && power_violations.empty(); }
};
/// Bounded F-isomorphism check of f : a → b, f[i] rows = images of the
/// degree-i basis. Throws "degree_mismatch" or "not_ring_hom".
FIsoReport f_isomorphism_check(const graded::GradedAlgebra& a, const graded::GradedAlgebra& b,
                               const std::vector<gf2::BitMatrix>& f, std::size_t nilbound, std::size_t powbound);

}  // namespace qbool::coh

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbool/bits.hpp"

namespace qbool {

using Elem = std::uint32_t;

/// Finite group given by its multiplication table. Index 0 is the identity.
class FiniteGroup {
 public:
  static constexpr std::size_t default_order_cap = 128;

  /// Validates the table: identity at 0, Latin square, inverses, and full
  /// associativity when the order is at most `associativity_check_limit`.
  explicit FiniteGroup(std::vector<std::vector<Elem>> table, std::vector<std::string> labels = {},
                       std::size_t order_cap = default_order_cap);

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// x^-1 a x
  Elem conj(Elem a, Elem x) const { return mul(mul(inv(x), a), x); }
  Elem pow(Elem a, std::size_t k) const;
  std::size_t element_order(Elem a) const;
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<Elem>> table() const;
  bool is_two_group() const;
  bool is_abelian() const;

 private:
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Homomorphism between table groups, verified on construction.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  /// Throws DomainError (kind "not_homomorphism") with a witness pair.
  static GroupHom make(GroupPtr source, GroupPtr target, std::vector<Elem> map);
  Elem operator()(Elem x) const { return map[x]; }
  bool is_surjective() const;
  bool is_injective() const;
  /// this ∘ inner
  GroupHom compose_after(const GroupHom& inner) const;
  static GroupHom identity(GroupPtr g);
};

/// A subgroup stored as its sorted element list.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

struct ConjugacyClass {
  Elem representative;  // least index in the class
  std::vector<Elem> elements;
};

/// Involutions Y*(G) and their conjugacy classes X*(G).
struct InvolutionData {
  std::vector<Elem> involutions;
  std::vector<ConjugacyClass> classes;  // ordered by representative
  /// Index into `classes` of the class containing x, or nullopt.
  std::optional<std::size_t> class_of(Elem x) const;
};

namespace groups {

// -- constructors ------------------------------------------------------------
GroupPtr make_group(std::vector<std::vector<Elem>> table, std::vector<std::string> labels = {});
GroupPtr trivial();
GroupPtr cyclic(std::size_t n);
/// Elements (a, b) at index a * |H| + b.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Dihedral group of order 2n: r^i at index i, s r^i at index n + i.
GroupPtr dihedral(std::size_t n);
/// Generalised quaternion group of order 4m: x^i at i, x^i y at 2m + i.
GroupPtr generalized_quaternion(std::size_t m);
GroupPtr quaternion();
/// N ⋊ H where h acts on N by the automorphism action[h] (a permutation of
/// N's elements). Element (n, h) at index h * |N| + n.
GroupPtr semidirect(const FiniteGroup& n, const FiniteGroup& h, const std::vector<std::vector<Elem>>& action);
/// Group on an explicit closed list of permutations (identity first), keeping
/// the given order. Product is composition: (ab)(i) = a(b(i)).
GroupPtr from_permutations(const std::vector<std::vector<std::size_t>>& elements,
                           std::vector<std::string> labels = {});
/// S3 ordered e, (12), (13), (23), (123), (132).
GroupPtr symmetric3();
GroupPtr elementary_abelian(std::size_t rank);

// -- subgroups ---------------------------------------------------------------
Subgroup generated(const FiniteGroup& g, const std::vector<Elem>& gens);
Subgroup whole(const FiniteGroup& g);
/// Validates closure; throws DomainError "not_subgroup".
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements);
/// nullopt if normal, otherwise a witness (n, x) with x^-1 n x outside.
std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
/// Conjugacy classes of elements of order dividing 2 (trivial class first).
std::vector<ConjugacyClass> order_two_classes(const FiniteGroup& g);
InvolutionData involution_data(const FiniteGroup& g);
/// Subgroup as a standalone group (elements in increasing index order) plus
/// its inclusion homomorphism.
std::pair<GroupPtr, GroupHom> subgroup_as_group(const GroupPtr& g, const Subgroup& s);
/// Image and preimage along a homomorphism.
Subgroup image(const GroupHom& f);
Subgroup kernel(const GroupHom& f);
Subgroup preimage(const GroupHom& f, const Subgroup& s);
/// A 2-Sylow subgroup, grown greedily by least-index 2-elements.
Subgroup sylow2(const FiniteGroup& g);
/// Least-index generating set chosen greedily.
std::vector<Elem> generators(const FiniteGroup& g);
/// All homomorphisms g → h (enumerated on a generating set), up to `limit`.
std::vector<GroupHom> homomorphisms(const GroupPtr& g, const GroupPtr& h, std::size_t limit = 1u << 20);

// -- operations --------------------------------------------------------------
struct Quotient {
  GroupPtr group;
  GroupHom map;
  std::vector<Elem> representatives;  // least index per coset
};
/// G/N with cosets ordered by least representative.
Quotient group_quotient(const GroupPtr& g, const Subgroup& n);

/// Coordinates of an elementary abelian 2-group: basis chosen greedily and
/// each element's coordinate vector in that basis.
struct ElementaryCoordinates {
  std::vector<Elem> basis;
  std::vector<BitVector> coords;  // per element
};
ElementaryCoordinates elementary_coordinates(const FiniteGroup& q);
bool is_elementary_abelian(const FiniteGroup& g);

struct AbelianQuotient {
  GroupPtr group;      // elementary abelian 2-group
  GroupHom map;        // G → Q
  std::size_t rank;    // dimension over F2
};
AbelianQuotient abelian_2torsion_quotient(const GroupPtr& g);
/// dim Hom(G, F2) computed as the kernel of the linear conditions
/// f(x) + f(y) + f(xy) = 0 on F2^G.
std::size_t hom_to_f2_dimension(const FiniteGroup& g);

struct SylowTransfer {
  Subgroup sylow;
  Elem conjugator;  // h with h^-1 x h ∈ P and f(x) = f(h^-1 x h)
  Elem conjugate;   // h^-1 x h
};
SylowTransfer sylow_transfer(const GroupHom& f, Elem x);

struct ConjugationMorphism {
  std::size_t from;       // object index
  std::size_t to;         // object index
  Elem conjugator;        // least-index x realising y ↦ x^-1 y x
  std::vector<Elem> map;  // images of the elements of `from`, in order
};
struct ElementaryAbelianCategory {
  std::vector<Subgroup> objects;  // includes the trivial subgroup, sorted by (order, elements)
  std::vector<ConjugationMorphism> morphisms;
  std::size_t rank;
  std::optional<std::size_t> find_morphism(std::size_t from, std::size_t to, const std::vector<Elem>& map) const;
};
ElementaryAbelianCategory elementary_abelian_category(const FiniteGroup& g);

}  // namespace groups
}  // namespace qbool

#pragma once

#include <cstddef>
#include <vector>

#include "qbool/groups.hpp"

namespace qbool::bundles {

/// Principal G-bundle Y → X of finite discrete sets; G acts on the left
/// with action[g][y] = g·y.
struct FiniteBundle {
  GroupPtr group;
  std::size_t total = 0;  // |Y|
  std::size_t base = 0;   // |X|
  std::vector<std::size_t> proj;
  std::vector<std::vector<std::size_t>> action;

  /// Throws DomainError with a witness on the first failing invariant.
  void validate() const;
  /// Trivial bundle X × G with (x, g) at index x * |G| + g and h·(x, g) = (x, hg).
  static FiniteBundle trivial(GroupPtr g, std::size_t base);
};

/// s(x) = least-index point of the fibre over x.
std::vector<std::size_t> find_section(const FiniteBundle& b);
bool is_section(const FiniteBundle& b, const std::vector<std::size_t>& s);

struct QuotientBundle {
  FiniteBundle bundle;                 // G/N acting on N\Y
  groups::Quotient quotient;                   // G → G/N
  std::vector<std::size_t> orbit_map;  // Y → N\Y
  bool commutes = false;               // projections agree through orbit_map
};
QuotientBundle quotient_bundle(const FiniteBundle& b, const Subgroup& n);

}  // namespace qbool::bundles

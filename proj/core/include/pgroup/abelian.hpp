#pragma once

#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

// Invariant-factor decomposition d_1 | d_2 | ... | d_k of a finite abelian
// group, each factor > 1 and the product equal to the group order.
struct AbelianInvariants {
  std::vector<int> invariant_factors;
  bool operator==(const AbelianInvariants&) const = default;
};

// A generating tuple realizing the decomposition: the group is the internal
// direct product of the cyclic subgroups <elements[i]>, with
// order(elements[i]) = orders[i], listed largest first.
struct AbelianBasis {
  std::vector<int> elements;
  std::vector<int> orders;
};

/// Computed by repeatedly splitting off a cyclic direct factor of maximal
/// element order. Rejects non-abelian input (NotAbelian).
AbelianInvariants invariant_factors(const FiniteGroup& a);

AbelianBasis abelian_basis(const FiniteGroup& a);

/// |Hom(A,B)| = prod gcd(a_i, b_j) over all cyclic-factor pairs.
unsigned long long hom_count(const AbelianInvariants& a, const AbelianInvariants& b);

/// All invariant factors equal.
bool is_homocyclic(const FiniteGroup& a);

}  // namespace pgroup

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/error.hpp"

namespace pgroup {

// A finite group materialized as a full multiplication table. Elements are
// indices 0..order-1. Immutable after construction; all operations below are
// pure functions and safe to run concurrently on shared groups.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;  // row-major: mul[a*order + b] = a*b
  std::vector<int> inv;
  int identity = 0;
  std::vector<std::string> labels;
  std::vector<int> generators;
  std::optional<int> prime;  // set when the group is a p-group

  int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int conj_of(int x, int g) const { return at(at(inv[g], x), g); }          // g^-1 x g
  int commutator(int x, int g) const { return at(inv[x], conj_of(x, g)); }  // [x,g]
};

/// Checks the table axioms: Latin square, two-sided identity, inverses,
/// associativity against every generator, and that `generators` generate.
/// Throws Error(InternalCheckFailed) on the first violation.
void validate(const FiniteGroup& g);

/// p if n = p^k with k >= 1, otherwise nullopt.
std::optional<int> prime_power_base(long long n);

/// Detects and stores `prime` from the group order.
void detect_prime(FiniteGroup& g);

// A subgroup stored as a sorted set of element indices of its parent.
struct SubgroupSet {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

SubgroupSet trivial_subgroup(const FiniteGroup& g);
SubgroupSet full_subgroup(const FiniteGroup& g);

/// Subgroup generated by `gens` (closure under multiplication).
SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// Wraps an explicit member set, verifying identity, closure and Lagrange.
SubgroupSet make_subgroup(const FiniteGroup& g, std::vector<int> members);

bool is_normal(const FiniteGroup& g, const SubgroupSet& h);
bool subgroup_equal(const SubgroupSet& a, const SubgroupSet& b);
bool subgroup_contains(const SubgroupSet& a, const SubgroupSet& b);  // b <= a

struct ConjugacyClass {
  int representative = 0;            // smallest element index in the class
  std::vector<int> members;          // sorted
  std::vector<int> commutator_set;   // sorted [x,G] for x = representative
};

/// The set {[x,g] : g in G}; not a subgroup in general.
std::vector<int> commutator_set(const FiniteGroup& g, int x);

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Element index -> index of its class in the `classes` list.
std::vector<int> class_ids(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

SubgroupSet center(const FiniteGroup& g);
SubgroupSet centralizer(const FiniteGroup& g, const SubgroupSet& s);
SubgroupSet centralizer(const FiniteGroup& g, int x);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops at the first repetition.
std::vector<SubgroupSet> lower_central_series(const FiniteGroup& g);

/// Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i); stops at the first repetition.
std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g);

SubgroupSet derived_subgroup(const FiniteGroup& g);  // gamma_2

/// Nilpotency class, or nullopt if the lower central series does not reach 1.
std::optional<int> nilpotency_class(const FiniteGroup& g);

/// G^p * gamma_2(G) for p-groups; rejects everything else.
SubgroupSet frattini_subgroup(const FiniteGroup& g);

int element_order(const FiniteGroup& g, int x);
int group_exponent(const FiniteGroup& g);
int power_of(const FiniteGroup& g, int x, long long e);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
bool is_elementary_abelian(const FiniteGroup& g);
bool is_abelian_subgroup(const FiniteGroup& g, const SubgroupSet& s);

/// Minimal generating set: Burnside basis for p-groups, invariant-factor
/// basis for abelian groups. Other inputs are rejected (NotPGroup).
std::vector<int> minimal_generating_set(const FiniteGroup& g);
int minimal_generator_count(const FiniteGroup& g);  // d(G)

/// All normal subgroups, including 1 and G (subgroups generated by unions of
/// conjugacy classes).
std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g);

/// All distinct cyclic subgroups.
std::vector<SubgroupSet> cyclic_subgroups(const FiniteGroup& g);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> element of G/N
  std::vector<int> section;     // element of G/N -> smallest coset representative
};

/// Coset group with the induced table. Requires N normal (NotNormal).
QuotientResult quotient_group(const FiniteGroup& g, const SubgroupSet& n);

struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> inclusion;     // element of H -> element of G
  std::vector<int> index_in_sub;  // element of G -> element of H, or -1
};

/// The subgroup as a standalone FiniteGroup.
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const SubgroupSet& h);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Central product of the given groups amalgamated over a common cyclic
/// central subgroup X. amalgam_gens[i] must generate a central subgroup of
/// groups[i]; all must have equal order |X|, and g_i^k is identified with
/// g_j^k. Order of the result is (prod |G_i|) / |X|^(m-1).
FiniteGroup central_product(const std::vector<const FiniteGroup*>& groups,
                            const std::vector<int>& amalgam_gens,
                            int size_cap = 4096);

/// Relabel with synthetic labels e<k> (used by generic constructors).
void synthetic_labels(FiniteGroup& g);

}  // namespace pgroup

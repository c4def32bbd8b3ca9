#include "pgroup/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace pgroup {

namespace {

// Splits one cyclic factor of maximal order off the abelian group A:
// returns (generator g, complement B) with A = <g> x B. The complement is
// grown greedily; a subgroup maximal with trivial intersection against <g>
// complements a maximal-order cyclic subgroup.
std::pair<int, SubgroupSet> split_max_cyclic(const FiniteGroup& a) {
  int best = a.identity, best_ord = 1;
  for (int x = 0; x < a.order; ++x) {
    const int o = element_order(a, x);
    if (o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  SubgroupSet gen = generated_subgroup(a, {best});
  SubgroupSet comp = trivial_subgroup(a);
  std::vector<int> comp_gens;
  for (int x = 0; x < a.order; ++x) {
    if (comp.contains(x)) continue;
    std::vector<int> cg = comp_gens;
    cg.push_back(x);
    SubgroupSet bigger = generated_subgroup(a, cg);
    bool trivial_meet = true;
    for (int m : bigger.members)
      if (m != a.identity && gen.contains(m)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet) {
      comp_gens = std::move(cg);
      comp = std::move(bigger);
    }
  }
  if (static_cast<long long>(gen.order()) * comp.order() != a.order)
    fail(ErrorCode::InternalCheckFailed, "cyclic factor did not split");
  return {best, std::move(comp)};
}

}  // namespace

AbelianBasis abelian_basis(const FiniteGroup& a) {
  if (!is_abelian(a)) fail(ErrorCode::NotAbelian, "expected an abelian group");
  AbelianBasis basis;
  // Work down a chain of complements, mapping generators back to A.
  FiniteGroup cur = a;
  std::vector<int> to_parent(a.order);
  std::iota(to_parent.begin(), to_parent.end(), 0);
  while (cur.order > 1) {
    auto [g, comp] = split_max_cyclic(cur);
    basis.elements.push_back(to_parent[g]);
    basis.orders.push_back(element_order(cur, g));
    SubgroupGroup sub = subgroup_as_group(cur, comp);
    std::vector<int> next_map(sub.group.order);
    for (int i = 0; i < sub.group.order; ++i) next_map[i] = to_parent[sub.inclusion[i]];
    to_parent = std::move(next_map);
    cur = std::move(sub.group);
  }
  return basis;
}

AbelianInvariants invariant_factors(const FiniteGroup& a) {
  AbelianBasis basis = abelian_basis(a);
  AbelianInvariants inv;
  inv.invariant_factors.assign(basis.orders.rbegin(), basis.orders.rend());
  // Sanity: divisibility chain and product.
  long long prod = 1;
  for (size_t i = 0; i < inv.invariant_factors.size(); ++i) {
    const int d = inv.invariant_factors[i];
    if (d <= 1) fail(ErrorCode::InternalCheckFailed, "trivial invariant factor");
    if (i + 1 < inv.invariant_factors.size() && inv.invariant_factors[i + 1] % d != 0)
      fail(ErrorCode::InternalCheckFailed, "invariant factors do not form a chain");
    prod *= d;
  }
  if (prod != a.order)
    fail(ErrorCode::InternalCheckFailed, "invariant factor product mismatch");
  return inv;
}

unsigned long long hom_count(const AbelianInvariants& a, const AbelianInvariants& b) {
  unsigned long long n = 1;
  for (int x : a.invariant_factors)
    for (int y : b.invariant_factors) {
      const unsigned long long g = std::gcd(x, y);
      if (n > (~0ULL) / g) fail(ErrorCode::InternalCheckFailed, "hom count overflow");
      n *= g;
    }
  return n;
}

bool is_homocyclic(const FiniteGroup& a) {
  AbelianInvariants inv = invariant_factors(a);
  for (int d : inv.invariant_factors)
    if (d != inv.invariant_factors[0]) return false;
  return true;
}

}  // namespace pgroup

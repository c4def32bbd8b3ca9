#include <algorithm>
#include <numeric>

#include "pgroup/group.hpp"

namespace pgroup {

QuotientResult quotient_group(const FiniteGroup& g, const SubgroupSet& n) {
  if (!is_normal(g, n)) fail(ErrorCode::NotNormal, "subgroup is not normal");

  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the smallest member of its coset
    for (int m : n.members) coset_of[g.at(x, m)] = id;
  }

  const int q = static_cast<int>(reps.size());
  FiniteGroup out;
  out.order = q;
  out.mul.resize(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      out.mul[static_cast<size_t>(a) * q + b] = coset_of[g.at(reps[a], reps[b])];
  out.identity = coset_of[g.identity];
  out.inv.resize(q);
  for (int a = 0; a < q; ++a) out.inv[a] = coset_of[g.inv[reps[a]]];
  out.labels.resize(q);
  for (int a = 0; a < q; ++a) out.labels[a] = g.labels[reps[a]];
  for (int s : g.generators) {
    const int img = coset_of[s];
    if (img != out.identity &&
        std::find(out.generators.begin(), out.generators.end(), img) == out.generators.end())
      out.generators.push_back(img);
  }
  if (out.generators.empty()) out.generators.push_back(out.identity);
  detect_prime(out);
  return {std::move(out), std::move(coset_of), std::move(reps)};
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const SubgroupSet& h) {
  const int n = h.order();
  std::vector<int> index_in_sub(g.order, -1);
  for (int i = 0; i < n; ++i) index_in_sub[h.members[i]] = i;

  FiniteGroup out;
  out.order = n;
  out.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = index_in_sub[g.at(h.members[a], h.members[b])];
      if (v < 0) fail(ErrorCode::InternalCheckFailed, "member set is not closed");
      out.mul[static_cast<size_t>(a) * n + b] = v;
    }
  out.identity = index_in_sub[g.identity];
  out.inv.resize(n);
  for (int a = 0; a < n; ++a) out.inv[a] = index_in_sub[g.inv[h.members[a]]];
  out.labels.resize(n);
  for (int a = 0; a < n; ++a) out.labels[a] = g.labels[h.members[a]];
  // Any full member list generates; trim to a small set greedily.
  std::vector<int> gens;
  SubgroupSet cur{&out, {out.identity}};
  for (int x = 0; x < n && cur.order() < n; ++x) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> cg = gens;
    cur = generated_subgroup(out, cg);
  }
  if (gens.empty()) gens.push_back(out.identity);
  out.generators = std::move(gens);
  detect_prime(out);
  return {std::move(out), h.members, std::move(index_in_sub)};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup out;
  out.order = a.order * b.order;
  const int n = out.order;
  auto enc = [&](int x, int y) { return x * b.order + y; };
  out.mul.resize(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          out.mul[static_cast<size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.at(x1, x2), b.at(y1, y2));
  out.identity = enc(a.identity, b.identity);
  out.inv.resize(n);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) out.inv[enc(x, y)] = enc(a.inv[x], b.inv[y]);
  out.labels.resize(n);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y)
      out.labels[enc(x, y)] = "(" + a.labels[x] + "," + b.labels[y] + ")";
  for (int s : a.generators) out.generators.push_back(enc(s, b.identity));
  for (int s : b.generators) out.generators.push_back(enc(a.identity, s));
  detect_prime(out);
  return out;
}

FiniteGroup central_product(const std::vector<const FiniteGroup*>& groups,
                            const std::vector<int>& amalgam_gens, int size_cap) {
  if (groups.empty() || groups.size() != amalgam_gens.size())
    fail(ErrorCode::IncompatibleIdentification, "need one amalgam generator per factor");
  const int q = element_order(*groups[0], amalgam_gens[0]);
  for (size_t i = 0; i < groups.size(); ++i) {
    const FiniteGroup& gi = *groups[i];
    const int z = amalgam_gens[i];
    if (element_order(gi, z) != q)
      fail(ErrorCode::IncompatibleIdentification, "amalgamated subgroups have different orders");
    for (int y = 0; y < gi.order; ++y)
      if (gi.at(z, y) != gi.at(y, z))
        fail(ErrorCode::NotCentral, "amalgam generator is not central in factor " +
                                        std::to_string(i));
  }
  if (groups.size() == 1) return *groups[0];

  long long total = 1;
  for (const FiniteGroup* g : groups) total *= g->order;
  for (size_t i = 1; i < groups.size(); ++i) total /= q;
  if (total > size_cap) fail(ErrorCode::SizeCapExceeded, "central product exceeds size cap");

  FiniteGroup prod = *groups[0];
  for (size_t i = 1; i < groups.size(); ++i) prod = direct_product(prod, *groups[i]);

  // Encoded index of the tuple placing z_i^k in slot i and identity elsewhere.
  const int m = static_cast<int>(groups.size());
  auto tuple_index = [&](const std::vector<int>& slots) {
    int idx = 0;
    for (int i = 0; i < m; ++i) idx = idx * groups[i]->order + slots[i];
    return idx;
  };

  // Kernel of the identifications: tuples (z_1^{k_1},...,z_m^{k_m}) with
  // sum k_i = 0 mod q; generated by z_i z_{i+1}^{-1} in adjacent slots.
  std::vector<int> kernel_gens;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> slots(m);
    for (int jj = 0; jj < m; ++jj) slots[jj] = groups[jj]->identity;
    slots[i] = amalgam_gens[i];
    slots[i + 1] = groups[i + 1]->inv[amalgam_gens[i + 1]];
    kernel_gens.push_back(tuple_index(slots));
  }
  SubgroupSet kernel = generated_subgroup(prod, kernel_gens);
  QuotientResult qr = quotient_group(prod, kernel);
  return std::move(qr.group);
}

}  // namespace pgroup

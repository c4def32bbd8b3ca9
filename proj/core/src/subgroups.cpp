#include <algorithm>
#include <map>
#include <set>

#include "pgroup/group.hpp"

namespace pgroup {

SubgroupSet trivial_subgroup(const FiniteGroup& g) { return {&g, {g.identity}}; }

SubgroupSet full_subgroup(const FiniteGroup& g) {
  SubgroupSet s{&g, {}};
  s.members.resize(g.order);
  for (int i = 0; i < g.order; ++i) s.members[i] = i;
  return s;
}

SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> queue = {g.identity};
  in[g.identity] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (int s : gens) {
      const int y = g.at(queue[q], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return {&g, std::move(queue)};
}

SubgroupSet make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupSet s{&g, std::move(members)};
  if (!s.contains(g.identity))
    fail(ErrorCode::InternalCheckFailed, "subgroup does not contain the identity");
  for (int a : s.members) {
    if (!s.contains(g.inv[a]))
      fail(ErrorCode::InternalCheckFailed, "subgroup not closed under inverses");
    for (int b : s.members)
      if (!s.contains(g.at(a, b)))
        fail(ErrorCode::InternalCheckFailed, "subgroup not closed under multiplication");
  }
  if (g.order % s.order() != 0)
    fail(ErrorCode::InternalCheckFailed, "subgroup order violates Lagrange");
  return s;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  for (int x : h.members)
    for (int s : g.generators)
      if (!h.contains(g.conj_of(x, s))) return false;
  return true;
}

bool subgroup_equal(const SubgroupSet& a, const SubgroupSet& b) {
  return a.members == b.members;
}

bool subgroup_contains(const SubgroupSet& a, const SubgroupSet& b) {
  return std::includes(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
}

SubgroupSet center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y)
      if (g.at(x, y) != g.at(y, x)) central = false;
    if (central) members.push_back(x);
  }
  return {&g, std::move(members)};
}

SubgroupSet centralizer(const FiniteGroup& g, const SubgroupSet& s) {
  std::vector<int> members;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int y : s.members)
      if (g.at(x, y) != g.at(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return {&g, std::move(members)};
}

SubgroupSet centralizer(const FiniteGroup& g, int x) {
  std::vector<int> members;
  for (int y = 0; y < g.order; ++y)
    if (g.at(x, y) == g.at(y, x)) members.push_back(y);
  return {&g, std::move(members)};
}

std::vector<SubgroupSet> lower_central_series(const FiniteGroup& g) {
  std::vector<SubgroupSet> series;
  series.push_back(full_subgroup(g));
  for (;;) {
    const SubgroupSet& cur = series.back();
    std::vector<char> seen(g.order, 0);
    std::vector<int> comms;
    for (int u : cur.members)
      for (int h = 0; h < g.order; ++h) {
        const int c = g.commutator(u, h);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    SubgroupSet next = generated_subgroup(g, comms);
    if (subgroup_equal(next, cur)) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g) {
  std::vector<SubgroupSet> series;
  series.push_back(trivial_subgroup(g));
  for (;;) {
    const SubgroupSet& cur = series.back();
    // Z_{i+1} = {x : [x,g] in Z_i for all g}
    std::vector<int> members;
    for (int x = 0; x < g.order; ++x) {
      bool ok = true;
      for (int h = 0; h < g.order && ok; ++h)
        if (!cur.contains(g.commutator(x, h))) ok = false;
      if (ok) members.push_back(x);
    }
    SubgroupSet next{&g, std::move(members)};
    if (subgroup_equal(next, cur)) break;
    series.push_back(std::move(next));
    if (series.back().order() == g.order) break;
  }
  return series;
}

SubgroupSet derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(g.order, 0);
  std::vector<int> comms;
  for (int x = 0; x < g.order; ++x)
    for (int h = 0; h < g.order; ++h) {
      const int c = g.commutator(x, h);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto series = lower_central_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

SubgroupSet frattini_subgroup(const FiniteGroup& g) {
  if (g.order > 1 && !g.prime)
    fail(ErrorCode::NotPGroup, "Frattini subgroup computed only for p-groups");
  const int p = g.order == 1 ? 2 : *g.prime;
  std::vector<char> seen(g.order, 0);
  std::vector<int> gens;
  for (int x = 0; x < g.order; ++x) {
    const int xp = power_of(g, x, p);
    if (!seen[xp]) {
      seen[xp] = 1;
      gens.push_back(xp);
    }
    for (int h = 0; h < g.order; ++h) {
      const int c = g.commutator(x, h);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return generated_subgroup(g, gens);
}

namespace {

std::vector<int> pgroup_minimal_generating_set(const FiniteGroup& g, const SubgroupSet& phi) {
  std::vector<char> have(g.order, 0);
  for (int m : phi.members) have[m] = 1;
  std::vector<int> gens;
  std::vector<int> current(phi.members);
  while (static_cast<int>(current.size()) != g.order) {
    int pick = -1;
    for (int x = 0; x < g.order; ++x)
      if (!have[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    std::vector<int> closure_gens = gens;
    for (int m : phi.members) closure_gens.push_back(m);
    SubgroupSet h = generated_subgroup(g, closure_gens);
    current = h.members;
    std::fill(have.begin(), have.end(), 0);
    for (int m : current) have[m] = 1;
  }
  return gens;
}

}  // namespace

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  if (g.order == 1) return {};
  if (g.prime) return pgroup_minimal_generating_set(g, frattini_subgroup(g));
  if (is_abelian(g)) {
    // Greedy max-order splitting mirrors the invariant-factor basis.
    std::vector<int> gens;
    SubgroupSet h = trivial_subgroup(g);
    while (h.order() != g.order) {
      int best = -1, best_ord = 0;
      for (int x = 0; x < g.order; ++x) {
        if (h.contains(x)) continue;
        // Order of x modulo h.
        int y = x, k = 1;
        while (!h.contains(y)) {
          y = g.at(y, x);
          ++k;
        }
        if (k > best_ord) {
          best_ord = k;
          best = x;
        }
      }
      gens.push_back(best);
      std::vector<int> cg = gens;
      for (int m : h.members) cg.push_back(m);
      h = generated_subgroup(g, cg);
    }
    return gens;
  }
  fail(ErrorCode::NotPGroup, "minimal generating sets only for p-groups and abelian groups");
}

int minimal_generator_count(const FiniteGroup& g) {
  return static_cast<int>(minimal_generating_set(g).size());
}

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  std::set<std::vector<int>> found;
  std::vector<SubgroupSet> out;
  std::vector<SubgroupSet> frontier;
  SubgroupSet triv = trivial_subgroup(g);
  found.insert(triv.members);
  out.push_back(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<SubgroupSet> next;
    for (const SubgroupSet& n : frontier) {
      for (const ConjugacyClass& cls : classes) {
        if (n.contains(cls.representative)) continue;
        std::vector<int> gens = n.members;
        gens.insert(gens.end(), cls.members.begin(), cls.members.end());
        SubgroupSet bigger = generated_subgroup(g, gens);
        if (found.insert(bigger.members).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<SubgroupSet> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<SubgroupSet> out;
  for (int x = 0; x < g.order; ++x) {
    SubgroupSet s = generated_subgroup(g, {x});
    if (found.insert(s.members).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace pgroup

#include "pgroup/group.hpp"

#include <algorithm>
#include <numeric>

namespace pgroup {

std::optional<int> prime_power_base(long long n) {
  if (n < 2) return std::nullopt;
  long long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n;  // n itself prime
  long long m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return static_cast<int>(p);
}

void detect_prime(FiniteGroup& g) {
  if (g.order == 1) {
    g.prime.reset();
    return;
  }
  g.prime = prime_power_base(g.order);
}

void validate(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) fail(ErrorCode::InternalCheckFailed, "empty group");
  if (static_cast<long long>(g.mul.size()) != static_cast<long long>(n) * n ||
      static_cast<int>(g.inv.size()) != n)
    fail(ErrorCode::InternalCheckFailed, "table size mismatch");

  // Latin square: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      const int v = g.at(a, b);
      if (v < 0 || v >= n || seen[v])
        fail(ErrorCode::InternalCheckFailed, "row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      const int v = g.at(a, b);
      if (seen[v])
        fail(ErrorCode::InternalCheckFailed, "column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }

  const int e = g.identity;
  for (int x = 0; x < n; ++x)
    if (g.at(e, x) != x || g.at(x, e) != x)
      fail(ErrorCode::InternalCheckFailed, "identity axiom fails at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    if (g.at(x, g.inv[x]) != e)
      fail(ErrorCode::InternalCheckFailed, "inverse axiom fails at " + std::to_string(x));

  // Associativity against generators; with generation this implies full
  // associativity by induction on word length.
  if (g.generators.empty()) fail(ErrorCode::InternalCheckFailed, "no generators recorded");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.at(a, b);
      for (int s : g.generators)
        if (g.at(ab, s) != g.at(a, g.at(b, s)))
          fail(ErrorCode::InternalCheckFailed, "associativity fails at (" + std::to_string(a) +
                                                   "," + std::to_string(b) + ")");
    }

  // Generators generate.
  std::vector<char> reach(n, 0);
  std::vector<int> queue = {e};
  reach[e] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (int s : g.generators) {
      const int y = g.at(queue[q], s);
      if (!reach[y]) {
        reach[y] = 1;
        queue.push_back(y);
      }
    }
  if (static_cast<int>(queue.size()) != n)
    fail(ErrorCode::InternalCheckFailed, "generators do not generate the group");
}

bool SubgroupSet::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<int> commutator_set(const FiniteGroup& g, int x) {
  std::vector<char> seen(g.order, 0);
  std::vector<int> out;
  for (int h = 0; h < g.order; ++h) {
    const int c = g.commutator(x, h);
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> classes;
  std::vector<char> assigned(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    if (assigned[x]) continue;
    ConjugacyClass cls;
    cls.representative = x;
    std::vector<char> seen_c(g.order, 0);
    std::vector<char> seen_m(g.order, 0);
    for (int h = 0; h < g.order; ++h) {
      const int y = g.conj_of(x, h);
      if (!seen_m[y]) {
        seen_m[y] = 1;
        cls.members.push_back(y);
        assigned[y] = 1;
      }
      const int c = g.at(g.inv[x], y);
      if (!seen_c[c]) {
        seen_c[c] = 1;
        cls.commutator_set.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    std::sort(cls.commutator_set.begin(), cls.commutator_set.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> class_ids(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<int> ids(g.order, -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (int m : classes[i].members) ids[m] = static_cast<int>(i);
  return ids;
}

int element_order(const FiniteGroup& g, int x) {
  int n = 1;
  int y = x;
  while (y != g.identity) {
    y = g.at(y, x);
    ++n;
  }
  return n;
}

int group_exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x)
    e = std::lcm(e, static_cast<long long>(element_order(g, x)));
  return static_cast<int>(e);
}

int power_of(const FiniteGroup& g, int x, long long e) {
  const int n = element_order(g, x);
  e %= n;
  if (e < 0) e += n;
  int r = g.identity;
  for (long long i = 0; i < e; ++i) r = g.at(r, x);
  return r;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order; ++x)
    if (element_order(g, x) == g.order) return true;
  return false;
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (g.order == 1) return true;
  if (!g.prime || !is_abelian(g)) return false;
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity && element_order(g, x) != *g.prime) return false;
  return true;
}

bool is_abelian_subgroup(const FiniteGroup& g, const SubgroupSet& s) {
  for (int a : s.members)
    for (int b : s.members)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

void synthetic_labels(FiniteGroup& g) {
  g.labels.resize(g.order);
  for (int i = 0; i < g.order; ++i)
    g.labels[i] = (i == g.identity) ? "1" : "e" + std::to_string(i);
}

}  // namespace pgroup

#pragma once

// Hand-built reference groups and brute-force oracles, independent of the
// construction paths under test.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgroup/group.hpp"

namespace oracles {

// Builds a table from an element list and a multiplication function over an
// arbitrary element encoding.
template <typename Elem>
pgroup::FiniteGroup from_model(const std::vector<Elem>& elems,
                               const std::function<Elem(const Elem&, const Elem&)>& mul,
                               const std::function<std::string(const Elem&)>& label,
                               const std::vector<Elem>& gens) {
  std::map<Elem, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  pgroup::FiniteGroup g;
  g.order = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = index.at(mul(elems[a], elems[b]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.at(a, b) == a && g.at(b, a) == b && g.at(b, b) == b) g.identity = b;
  // crude identity scan: find e with e*x = x for all x
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (g.at(e, x) != x || g.at(x, e) != x) ok = false;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  g.inv.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.at(a, b) == g.identity) {
        g.inv[a] = b;
        break;
      }
  g.labels.resize(n);
  for (int a = 0; a < n; ++a) g.labels[a] = label(elems[a]);
  for (const Elem& s : gens) g.generators.push_back(index.at(s));
  pgroup::detect_prime(g);
  return g;
}

/// Cyclic group of order n.
pgroup::FiniteGroup cyclic(int n);

/// Dihedral group of order 2n as symmetries of the n-gon.
pgroup::FiniteGroup dihedral(int two_n);

/// Quaternion group of order 8 from the explicit unit table.
pgroup::FiniteGroup quaternion8();

/// Heisenberg group mod p (order p^3) from integer triples.
pgroup::FiniteGroup heisenberg(int p);

/// Brute-force conjugacy partition straight from the definition.
std::vector<std::set<int>> conjugacy_partition(const pgroup::FiniteGroup& g);

/// Brute-force homomorphism count |Hom(A,B)| for abelian A, B by filtering
/// all generator-image assignments.
long long brute_hom_count(const pgroup::FiniteGroup& a, const pgroup::FiniteGroup& b);

/// All automorphisms by unconstrained generator-image search with a full
/// O(|G|^2) homomorphism check per candidate. Exponential; order <= 32 only.
std::vector<std::vector<int>> brute_force_automorphisms(const pgroup::FiniteGroup& g);

}  // namespace oracles

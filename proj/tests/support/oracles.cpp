#include "support/oracles.hpp"

#include <algorithm>
#include <array>

namespace oracles {

using pgroup::FiniteGroup;

FiniteGroup cyclic(int n) {
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i;
  return from_model<int>(
      elems, [n](const int& a, const int& b) { return (a + b) % n; },
      [](const int& a) { return a == 0 ? "1" : "g^" + std::to_string(a); }, {1 % n});
}

FiniteGroup dihedral(int two_n) {
  const int n = two_n / 2;
  // (rotation, flip): (r, 0) maps k -> k+r; (r, 1) maps k -> r-k.
  using E = std::pair<int, int>;
  std::vector<E> elems;
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < n; ++r) elems.push_back({r, f});
  auto mul = [n](const E& a, const E& b) -> E {
    // apply a first, then b
    if (b.second == 0) return {(a.first + b.first) % n, a.second};
    return {((b.first - a.first) % n + n) % n, 1 - a.second};
  };
  return from_model<E>(
      elems, mul,
      [](const E& e) {
        return (e.second ? "s" : "") + std::string("r^") + std::to_string(e.first);
      },
      {{1, 0}, {0, 1}});
}

FiniteGroup quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k
  auto neg = [](int x) { return x ^ 1; };
  auto base_mul = [&](int a, int b) -> int {
    // multiplication of unit quaternions by case analysis on {1,i,j,k}
    const int ua = a >> 1, ub = b >> 1;  // 0=1,1=i,2=j,3=k
    int sign = (a & 1) ^ (b & 1);
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sg[ua][ub]: extra sign from the unit product (i*i=-1, i*j=k, j*i=-k, ...)
    static const int sg2[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    (void)sg2;
    int unit = tbl[ua][ub];
    int extra = sg[ua][ub];
    return (unit << 1) | (sign ^ extra);
  };
  std::vector<int> elems(8);
  for (int i = 0; i < 8; ++i) elems[i] = i;
  (void)neg;
  return from_model<int>(
      elems, [&](const int& a, const int& b) { return base_mul(a, b); },
      [](const int& a) {
        static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
        return std::string(names[a]);
      },
      {2, 4});
}

FiniteGroup heisenberg(int p) {
  using E = std::array<int, 3>;
  std::vector<E> elems;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) elems.push_back({a, b, c});
  auto mul = [p](const E& x, const E& y) -> E {
    return {(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p};
  };
  return from_model<E>(
      elems, mul,
      [](const E& e) {
        return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
               std::to_string(e[2]) + ")";
      },
      {{1, 0, 0}, {0, 1, 0}});
}

std::vector<std::set<int>> conjugacy_partition(const FiniteGroup& g) {
  std::vector<std::set<int>> classes;
  std::vector<char> done(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int h = 0; h < g.order; ++h) cls.insert(g.conj_of(x, h));
    for (int m : cls) done[m] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

long long brute_hom_count(const FiniteGroup& a, const FiniteGroup& b) {
  // assign an image to every element of a generating set, then check the
  // extension over all of A by multiplication-path consistency
  std::vector<int> gens = pgroup::minimal_generating_set(a);
  if (gens.empty()) return 1;
  long long count = 0;
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    // attempt extension by breadth-first products
    std::vector<int> img(a.order, -1);
    img[a.identity] = b.identity;
    std::vector<int> queue = {a.identity};
    bool ok = true;
    for (size_t q = 0; q < queue.size() && ok; ++q) {
      for (size_t s = 0; s < gens.size() && ok; ++s) {
        const int from = queue[q];
        const int to = a.at(from, gens[s]);
        const int val = b.at(img[from], choice[s]);
        if (img[to] < 0) {
          img[to] = val;
          queue.push_back(to);
        } else if (img[to] != val) {
          ok = false;
        }
      }
    }
    if (ok) {
      for (int x = 0; x < a.order && ok; ++x)
        for (int y = 0; y < a.order && ok; ++y)
          if (img[a.at(x, y)] != b.at(img[x], img[y])) ok = false;
      if (ok) ++count;
    }
    size_t k = 0;
    while (k < gens.size() && ++choice[k] == b.order) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  return count;
}

std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroup& g) {
  std::vector<int> gens = pgroup::minimal_generating_set(g);
  std::vector<std::vector<int>> autos;
  if (gens.empty()) {
    autos.push_back({g.identity});
    return autos;
  }
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    std::vector<int> img(g.order, -1);
    img[g.identity] = g.identity;
    std::vector<int> queue = {g.identity};
    bool ok = true;
    for (size_t q = 0; q < queue.size() && ok; ++q) {
      for (size_t s = 0; s < gens.size() && ok; ++s) {
        const int from = queue[q];
        const int to = g.at(from, gens[s]);
        const int val = g.at(img[from], choice[s]);
        if (img[to] < 0) {
          img[to] = val;
          queue.push_back(to);
        } else if (img[to] != val) {
          ok = false;
        }
      }
    }
    if (ok && static_cast<int>(queue.size()) == g.order) {
      std::vector<char> seen(g.order, 0);
      for (int x = 0; x < g.order && ok; ++x) {
        if (img[x] < 0 || seen[img[x]]) ok = false;
        else seen[img[x]] = 1;
      }
      for (int x = 0; x < g.order && ok; ++x)
        for (int y = 0; y < g.order && ok; ++y)
          if (img[g.at(x, y)] != g.at(img[x], img[y])) ok = false;
      if (ok) autos.push_back(img);
    }
    size_t k = 0;
    while (k < gens.size() && ++choice[k] == g.order) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(autos.begin(), autos.end());
  return autos;
}

}  // namespace oracles

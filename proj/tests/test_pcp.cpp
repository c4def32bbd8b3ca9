#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pgroup/abelian.hpp"
#include "pgroup/pcp.hpp"
#include "support/oracles.hpp"

using namespace pgroup;

namespace {

std::vector<int> class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(static_cast<int>(c.members.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("single generator of order p realizes C_p") {
  PcPresentation p;
  p.prime = 5;
  p.names = {"a"};
  p.relative_orders = {5};
  p.power_words = {{}};
  p.comm_words = {{}};
  FiniteGroup g = realize(p);
  CHECK(g.order == 5);
  CHECK(is_cyclic(g));
}

TEST_CASE("D8 presentation realizes a group with D8 class data") {
  FiniteGroup g = realize(pres_dihedral8());
  CHECK(g.order == 8);
  CHECK(class_sizes(g) == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(group_exponent(g) == 4);
  CHECK(center(g).order() == 2);
  CHECK(nilpotency_class(g) == 2);
}

TEST_CASE("Q8 presentation") {
  FiniteGroup g = realize(pres_quaternion8());
  CHECK(g.order == 8);
  CHECK(class_sizes(g) == std::vector<int>{1, 1, 2, 2, 2});
  // Q8 has a unique involution
  int involutions = 0;
  for (int x = 0; x < g.order; ++x)
    if (element_order(g, x) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("order 16 stock presentations") {
  FiniteGroup d16 = realize(pres_dihedral16());
  CHECK(d16.order == 16);
  CHECK(group_exponent(d16) == 8);
  CHECK(nilpotency_class(d16) == 3);
  CHECK(derived_subgroup(d16).order() == 4);

  FiniteGroup q16 = realize(pres_quaternion16());
  CHECK(q16.order == 16);
  int involutions = 0;
  for (int x = 0; x < q16.order; ++x)
    if (element_order(q16, x) == 2) ++involutions;
  CHECK(involutions == 1);

  FiniteGroup m16 = realize(pres_modular16());
  CHECK(m16.order == 16);
  CHECK(nilpotency_class(m16) == 2);
  CHECK(derived_subgroup(m16).order() == 2);
  CHECK(center(m16).order() == 4);
}

TEST_CASE("metacyclic family K") {
  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  CHECK(k.order == 243);
  auto lcs = lower_central_series(k);
  CHECK(lcs[1].order() == 9);  // |gamma_2| = p^r
  CHECK(nilpotency_class(k).value() >= 3);
  CHECK(center(k).order() == 3);  // |K/Z| = p^{2r} = 81
  SubgroupGroup g2 = subgroup_as_group(k, lcs[1]);
  CHECK(is_cyclic(g2.group));
  CHECK(minimal_generator_count(k) == 2);

  // parameter validation
  CHECK_THROWS_AS((void)family_metacyclic_K(2, 2, 0, 1), Error);  // t >= 2 for p = 2
  CHECK_THROWS_AS((void)family_metacyclic_K(3, 1, 0, 1), Error);  // t < r
  CHECK_THROWS_AS((void)family_metacyclic_K(3, 2, 2, 1), Error);  // s <= t

  FiniteGroup k2 = family_metacyclic_K(2, 3, 0, 2);
  CHECK(k2.order == 256);
  CHECK(lower_central_series(k2)[1].order() == 8);
}

TEST_CASE("metacyclic K matches a direct coset model") {
  // Independent model: pairs (a, b) = x^a y^b with y^-1 x y = x^{1+p^t},
  // y^{p^r} = x^{p^{r+s}}.
  const int p = 3, r = 2, s = 1, t = 1;
  const int xo = 27, yo = 9;  // p^{r+t}, p^r
  const int xs = 27;          // x^{p^{r+s}} exponent p^{r+s} = 27 ≡ 0: y^9 = 1 here
  using E = std::pair<int, int>;
  std::vector<E> elems;
  for (int a = 0; a < xo; ++a)
    for (int b = 0; b < yo; ++b) elems.push_back({a, b});
  auto conj_exp = [&](int a, int b) {
    // x^a conjugated by y^b: exponent a * (1+p^t)^b mod p^{r+t}
    long long e = a;
    for (int i = 0; i < b; ++i) e = e * (1 + 3) % xo;
    return static_cast<int>(e);
  };
  auto mul = [&](const E& u, const E& v) -> E {
    // x^a y^b x^c y^d = x^{a + c*(1+p^t)^b} y^{b+d}
    int a = (u.first + conj_exp(v.first, u.second)) % xo;
    int b = u.second + v.second;
    if (b >= yo) {
      b -= yo;
      a = (a + xs) % xo;
    }
    return {a, b};
  };
  FiniteGroup model = oracles::from_model<E>(
      elems, mul,
      [](const E& e) { return "x^" + std::to_string(e.first) + "y^" + std::to_string(e.second); },
      {{1, 0}, {0, 1}});
  CHECK_NOTHROW(validate(model));
  CHECK(model.order == 243);

  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  CHECK(class_sizes(model) == class_sizes(k));
  CHECK(center(model).order() == center(k).order());
  CHECK(lower_central_series(model)[1].order() == lower_central_series(k)[1].order());
  CHECK(group_exponent(model) == group_exponent(k));
}

TEST_CASE("two generator family, section 7 shape") {
  FiniteGroup g = family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1);
  CHECK(g.order == 729);
  CHECK(nilpotency_class(g) == 3);
  auto lcs = lower_central_series(g);
  CHECK(lcs[1].order() == 9);
  CHECK(lcs[2].order() == 3);
  SubgroupGroup g2 = subgroup_as_group(g, lcs[1]);
  CHECK(is_cyclic(g2.group));
  SubgroupSet z = center(g);
  CHECK(z.order() == 9);
  SubgroupGroup zg = subgroup_as_group(g, z);
  CHECK(is_cyclic(zg.group));
  CHECK_FALSE(subgroup_equal(z, lcs[1]));
  CHECK(minimal_generator_count(g) == 2);

  CHECK_THROWS_AS((void)family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 2), Error);  // s < r
  CHECK_THROWS_AS((void)family_two_generator_G(2, 2, 2, 0, 0, 0, 3, 1), Error);  // s >= 2 for p=2
}

TEST_CASE("unitriangular family") {
  FiniteGroup h27 = family_unitriangular(3, 1);
  CHECK(h27.order == 27);
  CHECK(group_exponent(h27) == 3);
  CHECK(center(h27).order() == 3);

  FiniteGroup g = family_unitriangular(3, 2);
  CHECK(g.order == 729);
  CHECK(minimal_generator_count(g) == 4);
  CHECK(derived_subgroup(g).order() == 9);
  SubgroupSet phi = frattini_subgroup(g);
  CHECK(g.order / phi.order() == 81);  // d(G) = 4

  CHECK_THROWS_AS((void)family_unitriangular(2, 2), Error);
  CHECK_THROWS_AS((void)family_unitriangular(3, 4), Error);  // over the cap
}

TEST_CASE("extraspecial family") {
  FiniteGroup d8 = family_extraspecial(2, 1, ExtraspecialKind::DType);
  CHECK(d8.order == 8);
  CHECK(group_exponent(d8) == 4);
  int inv2 = 0;
  for (int x = 0; x < d8.order; ++x)
    if (element_order(d8, x) == 2) ++inv2;
  CHECK(inv2 == 5);  // D8 has five involutions, Q8 one

  FiniteGroup q8 = family_extraspecial(2, 1, ExtraspecialKind::QType);
  int invq = 0;
  for (int x = 0; x < q8.order; ++x)
    if (element_order(q8, x) == 2) ++invq;
  CHECK(invq == 1);

  FiniteGroup h = family_extraspecial(3, 1, ExtraspecialKind::ExponentP);
  CHECK(h.order == 27);
  CHECK(group_exponent(h) == 3);
  FiniteGroup m = family_extraspecial(3, 1, ExtraspecialKind::ExponentP2);
  CHECK(m.order == 27);
  CHECK(group_exponent(m) == 9);

  for (auto [p, kind] : std::vector<std::pair<int, ExtraspecialKind>>{
           {2, ExtraspecialKind::DType},
           {2, ExtraspecialKind::QType},
           {3, ExtraspecialKind::ExponentP},
           {3, ExtraspecialKind::ExponentP2}}) {
    FiniteGroup e5 = family_extraspecial(p, 2, kind);
    CHECK(e5.order == p * p * p * p * p);
    CHECK(center(e5).order() == p);
    CHECK(derived_subgroup(e5).order() == p);
    auto q = quotient_group(e5, center(e5));
    CHECK(is_elementary_abelian(q.group));
  }
}

TEST_CASE("y product family") {
  FiniteGroup y = family_y_product(2, 1, 2);
  CHECK(y.order == 32);
  CHECK(derived_subgroup(y).order() == 2);
  CHECK(minimal_generator_count(y) == 4);

  FiniteGroup u9 = family_y_product(3, 2, 1);
  CHECK(u9.order == 729);
  SubgroupSet g2 = derived_subgroup(u9);
  CHECK(g2.order() == 9);
  CHECK(subgroup_equal(g2, center(u9)));
  CHECK(is_cyclic(subgroup_as_group(u9, g2).group));
}

TEST_CASE("realize is deterministic") {
  FiniteGroup a = family_metacyclic_K(3, 2, 1, 1);
  FiniteGroup b = family_metacyclic_K(3, 2, 1, 1);
  CHECK(a.mul == b.mul);
  CHECK(a.labels == b.labels);
}

TEST_CASE("inconsistent presentations are rejected") {
  // <a,b | a^2 = b^2 = 1> forces a cyclic commutator structure, so a
  // class-3 quotient with elementary abelian gamma_2 of order 4 cannot be a
  // group of order 16.
  PcPresentation p;
  p.prime = 2;
  p.names = {"a", "b", "c", "d"};
  p.relative_orders = {2, 2, 2, 2};
  p.power_words.assign(4, {});
  p.comm_words = {{}, {{}}, {{}, {}}, {{}, {}, {}}};
  p.comm_words[1][0].letters = {{2, 1}};  // [b,a] = c
  p.comm_words[2][0].letters = {{3, 1}};  // [c,a] = d
  CHECK_THROWS_AS((void)realize(p), Error);
}

TEST_CASE("size cap") {
  RealizeOptions opts;
  opts.size_cap = 100;
  CHECK_THROWS_AS((void)family_metacyclic_K(3, 2, 1, 1, opts), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pgroup/autos.hpp"
#include "pgroup/pcp.hpp"
#include "support/oracles.hpp"

using namespace pgroup;

namespace {

std::vector<std::vector<int>> image_list(const AutomorphismGroup& a) {
  std::vector<std::vector<int>> out;
  for (const auto& e : a.elements) out.push_back(e.image);
  return out;
}

}  // namespace

TEST_CASE("inner automorphisms") {
  CHECK(inner_automorphisms(oracles::cyclic(8)).order == 1);
  AutomorphismGroup inn = inner_automorphisms(oracles::dihedral(8));
  CHECK(inn.order == 4);
  CHECK(inn.closure_verified);
  for (const auto& a : inn.elements) {
    CHECK(a.flags.inner);
    CHECK(a.flags.class_preserving);
  }
  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  CHECK(inner_automorphisms(k).order == 81);
}

TEST_CASE("class preserving automorphisms of small groups") {
  CHECK(class_preserving_automorphisms(oracles::cyclic(12)).order == 1);
  CHECK(class_preserving_automorphisms(oracles::dihedral(8)).order == 4);
  CHECK(class_preserving_automorphisms(oracles::quaternion8()).order == 4);
  CHECK(class_preserving_automorphisms(oracles::heisenberg(3)).order == 9);
}

TEST_CASE("backtracking equals the class-preserving filter of brute force") {
  std::vector<FiniteGroup> zoo;
  zoo.push_back(oracles::cyclic(8));
  zoo.push_back(oracles::dihedral(8));
  zoo.push_back(oracles::quaternion8());
  zoo.push_back(direct_product(oracles::cyclic(2), oracles::cyclic(4)));
  zoo.push_back(realize(pres_modular16()));
  zoo.push_back(realize(pres_dihedral16()));
  for (const FiniteGroup& g : zoo) {
    auto classes = conjugacy_classes(g);
    auto ids = class_ids(g, classes);
    std::vector<std::vector<int>> expected;
    for (const auto& img : oracles::brute_force_automorphisms(g)) {
      bool cp = true;
      for (int x = 0; x < g.order && cp; ++x)
        if (ids[img[x]] != ids[x]) cp = false;
      if (cp) expected.push_back(img);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(image_list(class_preserving_automorphisms(g)) == expected);
  }
}

TEST_CASE("central automorphisms") {
  AutomorphismGroup d8c = central_automorphisms(oracles::dihedral(8));
  CHECK(d8c.order == 4);
  AutomorphismGroup h27 = central_automorphisms(oracles::heisenberg(3));
  CHECK(h27.order == 9);

  // abelian: every automorphism is central by definition
  FiniteGroup c2c4 = direct_product(oracles::cyclic(2), oracles::cyclic(4));
  CHECK(central_automorphisms(c2c4).order ==
        static_cast<long long>(oracles::brute_force_automorphisms(c2c4).size()));
}

TEST_CASE("Adney-Yen comparison") {
  AdneyYenReport d8 = adney_yen_check(oracles::dihedral(8));
  CHECK(d8.autcent_order == 4);
  CHECK(d8.hom_count_value == 4);
  CHECK(d8.match);

  AdneyYenReport h27 = adney_yen_check(oracles::heisenberg(3));
  CHECK(h27.autcent_order == 9);
  CHECK(h27.match);

  // Z(G) <= Phi(G) fails for groups with an abelian direct factor
  FiniteGroup c2d8 = direct_product(oracles::cyclic(2), oracles::dihedral(8));
  CHECK_THROWS_AS((void)adney_yen_check(c2d8), Error);
}

TEST_CASE("basis conjugating automorphisms") {
  CHECK(basis_conjugating_automorphisms(oracles::cyclic(4)).order == 1);
  AutomorphismGroup cb = basis_conjugating_automorphisms(oracles::dihedral(8));
  CHECK(cb.order == 4);
  CHECK(cb.closure_verified);

  // Aut_c <= Cb on a class-3 input
  FiniteGroup d16 = realize(pres_dihedral16());
  auto autc = image_list(class_preserving_automorphisms(d16));
  auto cb16 = image_list(basis_conjugating_automorphisms(d16));
  CHECK(std::includes(cb16.begin(), cb16.end(), autc.begin(), autc.end()));
}

TEST_CASE("gamma2 trivial automorphisms") {
  CHECK(gamma2_trivial_automorphisms(oracles::cyclic(9)).order == 1);
  AutomorphismGroup h = gamma2_trivial_automorphisms(oracles::heisenberg(3));
  CHECK(h.order == 9);

  // two-generator with cyclic gamma_2: every such automorphism is inner
  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  AutomorphismGroup kg = gamma2_trivial_automorphisms(k);
  for (const auto& a : kg.elements) CHECK(a.flags.inner);
}

TEST_CASE("Hom_c enumeration matches Aut_c at class 2") {
  for (const FiniteGroup& g : {oracles::dihedral(8), oracles::quaternion8(), oracles::heisenberg(3)}) {
    HomcResult r = homc_enumerate(g);
    CHECK(r.count == class_preserving_automorphisms(g).order);
  }
  CHECK(homc_enumerate(oracles::dihedral(8)).count == 4);
  CHECK(homc_enumerate(oracles::heisenberg(3)).count == 9);
  CHECK_THROWS_AS((void)homc_enumerate(oracles::cyclic(4)), Error);       // class 1
  FiniteGroup d16 = realize(pres_dihedral16());
  CHECK_THROWS_AS((void)homc_enumerate(d16), Error);                       // class 3
}

TEST_CASE("search budget is enforced") {
  AutOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS((void)class_preserving_automorphisms(oracles::dihedral(8), tiny), Error);
}

TEST_CASE("metacyclic K has Aut_c = Inn of order p^2r") {
  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  AutomorphismGroup autc = class_preserving_automorphisms(k);
  CHECK(autc.order == 81);
  for (const auto& a : autc.elements) CHECK(a.flags.inner);
}

TEST_CASE("sandwich bound holds") {
  for (const FiniteGroup& g :
       {oracles::dihedral(8), oracles::quaternion8(), oracles::heisenberg(3),
        realize(pres_modular16())}) {
    const long long inn = inner_automorphisms(g).order;
    const long long autc = class_preserving_automorphisms(g).order;
    long long prod = 1;
    auto classes = conjugacy_classes(g);
    auto ids = class_ids(g, classes);
    for (int s : minimal_generating_set(g))
      prod *= static_cast<long long>(classes[ids[s]].members.size());
    CHECK(inn <= autc);
    CHECK(autc <= prod);
  }
}

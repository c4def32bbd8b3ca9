#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgroup/corpus.hpp"
#include "pgroup/lie.hpp"
#include "pgroup/pcp.hpp"
#include "support/oracles.hpp"

using namespace pgroup;

namespace {

// deterministic xorshift for the random matrix batches
struct Rng {
  unsigned long long s = 0x9E3779B97F4A7C15ull;
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

FpMatrix random_strongly_skew(Rng& rng, int p, int n) {
  FpMatrix m = FpMatrix::zero(p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = static_cast<int>(rng.next() % p);
      m.at(i, j) = v;
      m.at(j, i) = (p - v) % p;
    }
  return m;
}

}  // namespace

TEST_CASE("fp matrix basics") {
  FpMatrix m = FpMatrix::zero(3, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  CHECK(fp_det(m) == 2);  // 1 - 2 = -1 = 2 mod 3
  CHECK(fp_rank(m) == 2);
  FpMatrix sing = FpMatrix::zero(5, 2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(fp_det(sing) == 0);
  CHECK(fp_rank(sing) == 1);
  CHECK(fp_kernel_basis(sing).size() == 1);
}

TEST_CASE("pfaffian of the basic blocks") {
  for (int p : {2, 3, 5}) {
    FpMatrix m = FpMatrix::zero(p, 2, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = p - 1;
    CHECK(pfaffian(m) == 1);

    FpMatrix b = FpMatrix::zero(p, 4, 4);
    b.at(0, 1) = 1;
    b.at(1, 0) = p - 1;
    b.at(2, 3) = 1;
    b.at(3, 2) = p - 1;
    CHECK(pfaffian(b) == 1);
  }
}

TEST_CASE("pfaffian squared equals the determinant") {
  Rng rng;
  for (int p : {2, 3, 5})
    for (int n : {2, 4, 6})
      for (int trial = 0; trial < 12; ++trial) {
        FpMatrix m = random_strongly_skew(rng, p, n);
        const int pf = pfaffian(m);
        CHECK(pf * pf % p == fp_det(m));
      }
}

TEST_CASE("odd-dimension strongly skew matrices are singular") {
  Rng rng;
  for (int p : {2, 3, 5})
    for (int n : {3, 5, 7})
      for (int trial = 0; trial < 8; ++trial) {
        FpMatrix m = random_strongly_skew(rng, p, n);
        CHECK(fp_det(m) == 0);
        CHECK_THROWS_AS((void)pfaffian(m), Error);
      }
}

TEST_CASE("pfaffian rejects bad inputs") {
  FpMatrix m = FpMatrix::zero(3, 2, 2);
  m.at(0, 0) = 1;
  CHECK_THROWS_AS((void)pfaffian(m), Error);
}

TEST_CASE("galois field construction") {
  GaloisField f9 = make_galois_field(3, 2);
  CHECK(f9.q == 9);
  // modulus is x^2 + 1, the smallest monic irreducible over F_3
  CHECK(f9.modulus == std::vector<int>{1, 0});
  // x * x = -1 = 2
  CHECK(f9.mul(3, 3) == 2);
  GaloisField f8 = make_galois_field(2, 3);
  CHECK(f8.q == 8);
  for (int x = 1; x < 8; ++x) {
    // nonzero elements are invertible
    bool has_inverse = false;
    for (int y = 1; y < 8; ++y)
      if (f8.mul(x, y) == 1) has_inverse = true;
    CHECK(has_inverse);
  }
}

TEST_CASE("graded Lie ring of an abelian group") {
  FiniteGroup c6 = oracles::cyclic(6);
  GradedLieRing l = build_graded_lie_ring(c6);
  CHECK(l.degrees() == 1);
  CHECK(l.components[0].grp.order == 6);
}

TEST_CASE("graded Lie ring of the extraspecial group of order 27") {
  FiniteGroup h = oracles::heisenberg(3);
  GradedLieRing l = build_graded_lie_ring(h);
  REQUIRE(l.degrees() == 2);
  CHECK(l.components[0].grp.order == 9);
  CHECK(l.components[1].grp.order == 3);
  // bracket L1 x L1 surjects onto L2
  std::vector<char> hit(3, 0);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) hit[l.bracket_of(1, a, 1, b)] = 1;
  CHECK(hit == std::vector<char>(3, 1));

  LieAlgebraModP lbar = mod_p_algebra(l);
  CHECK(lbar.dims == std::vector<int>{2, 1});
  auto mats = structure_matrices(lbar);
  REQUIRE(mats.size() == 1);
  CHECK(mats[0].at(0, 1) != 0);
  CHECK(is_strongly_skew_symmetric(mats[0]));
}

TEST_CASE("structure matrices of an abelian group are empty") {
  GradedLieRing l = build_graded_lie_ring(oracles::cyclic(9));
  CHECK(structure_matrices(mod_p_algebra(l)).empty());
}

TEST_CASE("graded ring of the class-3 order-729 instance") {
  FiniteGroup g = family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1);
  GradedLieRing l = build_graded_lie_ring(g);
  REQUIRE(l.degrees() == 3);
  LieAlgebraModP lbar = mod_p_algebra(l);
  CHECK(lbar.dims == std::vector<int>{2, 1, 1});
  // [L2, L1] = L3 is nonzero
  bool nonzero = false;
  for (int a = 0; a < l.components[1].grp.order; ++a)
    for (int b = 0; b < l.components[0].grp.order; ++b)
      if (l.bracket_of(2, a, 1, b) != l.components[2].grp.identity) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("commutator map factors through the graded algebra") {
  // eta_{i+j}([x,y]) = [eta_i(x), eta_j(y)], checked exhaustively
  for (const FiniteGroup& g :
       {realize(pres_desk_w32()), realize(pres_dihedral16()), oracles::heisenberg(3)}) {
    GradedLieRing l = build_graded_lie_ring(g);
    LieAlgebraModP lbar = mod_p_algebra(l);
    auto lcs = lower_central_series(g);
    if (lcs.back().order() != 1) lcs.push_back(trivial_subgroup(g));
    const int c = l.degrees();
    for (int i = 1; i <= c; ++i)
      for (int j = 1; i + j <= c; ++j)
        for (int x : lcs[i - 1].members)
          for (int y : lcs[j - 1].members) {
            const int xi = l.components[i - 1].coset_of[x];
            const int yj = l.components[j - 1].coset_of[y];
            std::vector<int> lhs =
                lbar.coords[i + j - 1][l.components[i + j - 1].coset_of[g.commutator(x, y)]];
            std::vector<int> rhs = lbar.bracket(i, lbar.coords[i - 1][xi], j,
                                                lbar.coords[j - 1][yj]);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("degree-123 analysis on the class-3 instance") {
  FiniteGroup g = family_two_generator_G(3, 2, 2, 0, 0, 0, 2, 1);
  LieAlgebraModP lbar = mod_p_algebra(build_graded_lie_ring(g));
  MacdonaldReport rep = macdonald_analysis(lbar);
  CHECK(rep.conditions_hold);
  CHECK(rep.m == 2);
  CHECK(rep.n == 1);
  CHECK(rep.m_even);
  CHECK(rep.m_eq_2n);
  CHECK(rep.cbar_dim == 1);
  CHECK(rep.cbar_dim_eq_n);
  CHECK(rep.cbar_equals_centralizers);
  CHECK(rep.centralizer_dims_ok);
  CHECK(rep.lambda_surjective);
  CHECK(rep.lambda_kernel_is_cbar);
  CHECK(rep.direct_sum_ok);
  CHECK(rep.pencil_nonsingular);
  CHECK(rep.pencil_exhaustive);

  CentralizerStructureReport cs = centralizer_structure_checks(lbar);
  CHECK(cs.bracket_nonvanishing_ok);
  CHECK(cs.cbar_proper_nonzero);
  CHECK(cs.centralizer_alignment_ok);
}

TEST_CASE("class-2 input reports unmet conditions") {
  LieAlgebraModP lbar = mod_p_algebra(build_graded_lie_ring(oracles::heisenberg(3)));
  MacdonaldReport rep = macdonald_analysis(lbar);
  CHECK_FALSE(rep.cond_dim_l3_is_1);
  CHECK_FALSE(rep.conditions_hold);
  CHECK_THROWS_AS((void)centralizer_structure_checks(lbar), Error);
}

TEST_CASE("metacyclic K quotient analysis") {
  FiniteGroup k = family_metacyclic_K(3, 2, 1, 1);
  LieAlgebraModP lbar = mod_p_algebra(build_graded_lie_ring(k));
  MacdonaldReport rep = macdonald_analysis(lbar);
  CHECK(rep.conditions_hold);
  CHECK(rep.m == 2);
  CHECK(rep.n == 1);
  CHECK(rep.m_eq_2n);
}

TEST_CASE("d(G) equals dim of the degree-1 part") {
  for (const FiniteGroup& g :
       {realize(pres_dihedral8()), oracles::heisenberg(3), family_metacyclic_K(3, 2, 1, 1),
        realize(pres_desk_w128())}) {
    LieAlgebraModP lbar = mod_p_algebra(build_graded_lie_ring(g));
    CHECK(minimal_generator_count(g) == lbar.dims[0]);
  }
}

#pragma once

#include <vector>

#include "pgroup/fp.hpp"
#include "pgroup/group.hpp"

namespace pgroup {

// One graded piece gamma_i(G)/gamma_{i+1}(G), materialized as an abelian
// group with the lexicographically smallest coset representatives.
struct GradedComponent {
  FiniteGroup grp;
  std::vector<int> reps;      // component element -> representative in G
  std::vector<int> coset_of;  // element of G -> component element, or -1
};

// The graded Lie ring of the lower central series. bracket[i][j] maps a pair
// of component elements (degrees i+1 and j+1) to a component element of
// degree i+j+2; brackets past the nilpotency class are identically zero and
// not stored.
struct GradedLieRing {
  const FiniteGroup* parent = nullptr;
  std::vector<GradedComponent> components;
  std::vector<std::vector<std::vector<int>>> bracket;

  int degrees() const { return static_cast<int>(components.size()); }
  int bracket_of(int deg_i, int a, int deg_j, int b) const;  // component element of deg_i+deg_j
};

/// Requires a nilpotent input (NotNilpotent). Well-definedness of the
/// bracket on cosets is verified exhaustively.
GradedLieRing build_graded_lie_ring(const FiniteGroup& g);

// The mod-p graded Lie algebra L/pL with chosen bases and structure
// constants. Coordinates are F_p vectors.
struct LieAlgebraModP {
  int prime = 2;
  std::vector<int> dims;
  std::vector<std::vector<std::vector<int>>> coords;  // [deg][component element] -> coords
  // sc[i][j][a * dims[j] + b] = coordinates of [e_a^{(i+1)}, e_b^{(j+1)}]
  std::vector<std::vector<std::vector<std::vector<int>>>> sc;

  int degrees() const { return static_cast<int>(dims.size()); }
  std::vector<int> bracket(int deg_i, const std::vector<int>& v, int deg_j,
                           const std::vector<int>& w) const;
};

/// Requires all components to be p-groups over one prime (MixedPrimes).
/// Antisymmetry, vanishing squares, the Jacobi identity and generation by
/// degree one are verified on construction.
LieAlgebraModP mod_p_algebra(const GradedLieRing& l);

/// Structure matrices A_1..A_n of the degree-1 bracket: [e_i, e_j] =
/// sum_k a_{i,j,k} f_k with (A_k)(i,j) = a_{j,i,k}. Each is strongly
/// skew-symmetric.
std::vector<FpMatrix> structure_matrices(const LieAlgebraModP& lbar);

struct MacdonaldReport {
  int m = 0;
  int n = 0;
  bool cond_dim_l3_is_1 = false;
  bool cond_brackets_transitive = false;  // [L1, y] = L2 for every nonzero y in L1
  bool conditions_hold = false;
  // The remaining fields are meaningful only when conditions_hold.
  bool m_even = false;
  bool m_ge_2n = false;
  bool m_eq_2n = false;
  int cbar_dim = -1;
  bool cbar_dim_eq_n = false;
  bool cbar_equals_centralizers = false;  // Cbar = C(y) for every y in Cbar - 0
  bool centralizer_dims_ok = false;       // dim C(z) = m - n for every z != 0
  bool lambda_surjective = false;
  bool lambda_kernel_is_cbar = false;
  bool direct_sum_ok = false;             // L1 = C(x) + Cbar (direct) for x outside Cbar
  bool pencil_nonsingular = false;
  bool pencil_exhaustive = true;
  long long pencil_samples = 0;
};

/// The degree-(1,2,3) analysis: checks the two entry conditions, then the
/// dimension, centralizer, lambda-map, direct-sum and pencil facts.
MacdonaldReport macdonald_analysis(const LieAlgebraModP& lbar);

struct CentralizerStructureReport {
  bool bracket_nonvanishing_ok = false;  // [x,y] != 0 for x outside Cbar, y in Cbar - 0
  bool cbar_proper_nonzero = false;      // 0 < dim Cbar < m
  bool centralizer_alignment_ok = false; // z in Cbar-0 => C(z) <= Cbar; z outside => C(z) ^ Cbar = 0
};

/// Exhaustive vector-level verification of the three centralizer facts.
/// Throws ConditionsNotMet when the entry conditions fail.
CentralizerStructureReport centralizer_structure_checks(const LieAlgebraModP& lbar);

}  // namespace pgroup

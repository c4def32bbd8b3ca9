#include "pgroup/lie.hpp"

#include <algorithm>

#include "pgroup/abelian.hpp"

namespace pgroup {

int GradedLieRing::bracket_of(int deg_i, int a, int deg_j, int b) const {
  const int target = deg_i + deg_j;
  if (target > degrees()) return -1;  // zero component
  return bracket[deg_i - 1][deg_j - 1][static_cast<size_t>(a) * components[deg_j - 1].grp.order + b];
}

GradedLieRing build_graded_lie_ring(const FiniteGroup& g) {
  auto cls = nilpotency_class(g);
  if (!cls) fail(ErrorCode::NotNilpotent, "graded Lie ring needs a nilpotent group");
  auto lcs = lower_central_series(g);
  if (lcs.back().order() != 1) lcs.push_back(trivial_subgroup(g));

  GradedLieRing l;
  l.parent = &g;
  const int c = *cls;
  for (int i = 0; i < c; ++i) {
    SubgroupGroup layer = subgroup_as_group(g, lcs[i]);
    // quotient by gamma_{i+1} inside the layer
    std::vector<int> next_members;
    for (int m : lcs[i + 1].members) next_members.push_back(layer.index_in_sub[m]);
    std::sort(next_members.begin(), next_members.end());
    QuotientResult q = quotient_group(layer.group, SubgroupSet{&layer.group, next_members});
    GradedComponent comp;
    comp.reps.resize(q.group.order);
    for (int e = 0; e < q.group.order; ++e) comp.reps[e] = layer.inclusion[q.section[e]];
    comp.coset_of.assign(g.order, -1);
    for (int m : lcs[i].members) comp.coset_of[m] = q.projection[layer.index_in_sub[m]];
    comp.grp = std::move(q.group);
    l.components.push_back(std::move(comp));
  }

  l.bracket.resize(c);
  for (int i = 0; i < c; ++i) {
    l.bracket[i].resize(c);
    for (int j = 0; j < c; ++j) {
      if (i + j + 2 > c) continue;
      const GradedComponent& ci = l.components[i];
      const GradedComponent& cj = l.components[j];
      const GradedComponent& ct = l.components[i + j + 1];
      auto& table = l.bracket[i][j];
      table.assign(static_cast<size_t>(ci.grp.order) * cj.grp.order, -1);
      for (int a = 0; a < ci.grp.order; ++a)
        for (int b = 0; b < cj.grp.order; ++b) {
          const int v = g.commutator(ci.reps[a], cj.reps[b]);
          const int t = ct.coset_of[v];
          if (t < 0) fail(ErrorCode::InternalCheckFailed, "bracket left its target component");
          table[static_cast<size_t>(a) * cj.grp.order + b] = t;
        }
    }
  }

  // The bracket must not depend on the coset representatives.
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      if (i + j + 2 > c) continue;
      const GradedComponent& ci = l.components[i];
      const GradedComponent& cj = l.components[j];
      const GradedComponent& ct = l.components[i + j + 1];
      for (int x : lcs[i].members)
        for (int y : lcs[j].members) {
          const int expect =
              l.bracket[i][j][static_cast<size_t>(ci.coset_of[x]) * cj.grp.order + cj.coset_of[y]];
          if (ct.coset_of[g.commutator(x, y)] != expect)
            fail(ErrorCode::InternalCheckFailed, "Lie bracket is not well defined on cosets");
        }
    }
  return l;
}

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

std::vector<int> vec_scale(const std::vector<int>& a, int s, int p) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = static_cast<int>(static_cast<long long>(a[i]) * s % p);
  return c;
}

bool vec_zero(const std::vector<int>& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

// All vectors of F_p^d in odometer order.
std::vector<std::vector<int>> all_vectors(int p, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(d, 0);
  for (;;) {
    out.push_back(v);
    int k = d - 1;
    while (k >= 0 && v[k] == p - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

}  // namespace

std::vector<int> LieAlgebraModP::bracket(int deg_i, const std::vector<int>& v, int deg_j,
                                         const std::vector<int>& w) const {
  const int target = deg_i + deg_j;
  std::vector<int> out(target <= degrees() ? dims[target - 1] : 0, 0);
  if (target > degrees()) return out;
  for (int a = 0; a < dims[deg_i - 1]; ++a) {
    if (v[a] == 0) continue;
    for (int b = 0; b < dims[deg_j - 1]; ++b) {
      if (w[b] == 0) continue;
      const auto& sab = sc[deg_i - 1][deg_j - 1][static_cast<size_t>(a) * dims[deg_j - 1] + b];
      const int coeff = static_cast<int>(static_cast<long long>(v[a]) * w[b] % prime);
      out = vec_add(out, vec_scale(sab, coeff, prime), prime);
    }
  }
  return out;
}

LieAlgebraModP mod_p_algebra(const GradedLieRing& l) {
  LieAlgebraModP lbar;
  if (l.components.empty()) fail(ErrorCode::InternalCheckFailed, "empty graded ring");
  int p = 0;
  for (const GradedComponent& comp : l.components) {
    if (comp.grp.order == 1) continue;
    if (!comp.grp.prime) fail(ErrorCode::MixedPrimes, "component is not a p-group");
    if (p == 0) p = *comp.grp.prime;
    if (*comp.grp.prime != p) fail(ErrorCode::MixedPrimes, "components over different primes");
  }
  if (p == 0) p = l.parent->prime.value_or(2);
  lbar.prime = p;

  const int c = l.degrees();
  std::vector<std::vector<int>> basis(c);  // component elements forming the basis
  lbar.coords.resize(c);
  for (int i = 0; i < c; ++i) {
    const FiniteGroup& a = l.components[i].grp;
    // pL_i = subgroup of p-th powers; the quotient is the F_p space.
    std::vector<int> ppow;
    for (int x = 0; x < a.order; ++x) ppow.push_back(power_of(a, x, p));
    QuotientResult q = quotient_group(a, generated_subgroup(a, ppow));
    std::vector<int> gens = a.order > 1 ? minimal_generating_set(a) : std::vector<int>{};
    basis[i] = gens;
    const int dim = static_cast<int>(gens.size());
    lbar.dims.push_back(dim);
    // coordinates on the quotient, then pulled back to the component
    std::vector<std::vector<int>> qcoords(q.group.order);
    std::vector<int> tup(dim, 0);
    for (;;) {
      int e = q.group.identity;
      for (int t = 0; t < dim; ++t)
        e = q.group.at(e, power_of(q.group, q.projection[gens[t]], tup[t]));
      qcoords[e] = tup;
      int k = dim - 1;
      while (k >= 0 && tup[k] == p - 1) tup[k--] = 0;
      if (k < 0) break;
      ++tup[k];
    }
    for (const auto& qc : qcoords)
      if (qc.empty() && q.group.order > 1)
        fail(ErrorCode::InternalCheckFailed, "mod-p coordinates do not cover the section");
    lbar.coords[i].resize(a.order);
    for (int x = 0; x < a.order; ++x) lbar.coords[i][x] = qcoords[q.projection[x]];
  }

  lbar.sc.resize(c);
  for (int i = 0; i < c; ++i) {
    lbar.sc[i].resize(c);
    for (int j = 0; j < c; ++j) {
      const int di = lbar.dims[i], dj = lbar.dims[j];
      auto& tab = lbar.sc[i][j];
      tab.assign(static_cast<size_t>(di) * dj, {});
      const int tdim = (i + j + 2 <= c) ? lbar.dims[i + j + 1] : 0;
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b) {
          std::vector<int> coord(tdim, 0);
          if (i + j + 2 <= c) {
            const int t = l.bracket_of(i + 1, basis[i][a], j + 1, basis[j][b]);
            coord = lbar.coords[i + j + 1][t];
          }
          tab[static_cast<size_t>(a) * dj + b] = std::move(coord);
        }
    }
  }

  // Invariants: alternating, antisymmetric, Jacobi, generated in degree 1.
  for (int i = 0; i < c; ++i) {
    const int di = lbar.dims[i];
    for (int a = 0; a < di; ++a) {
      if (!vec_zero(lbar.sc[i][i][static_cast<size_t>(a) * di + a]))
        fail(ErrorCode::InternalCheckFailed, "bracket square is nonzero");
      for (int b = 0; b < di; ++b) {
        const auto& ab = lbar.sc[i][i][static_cast<size_t>(a) * di + b];
        const auto& ba = lbar.sc[i][i][static_cast<size_t>(b) * di + a];
        if (!vec_zero(vec_add(ab, ba, p)))
          fail(ErrorCode::InternalCheckFailed, "bracket is not antisymmetric");
      }
    }
  }
  for (int i = 1; i <= c; ++i)
    for (int j = 1; j <= c; ++j)
      for (int k = 1; k <= c; ++k) {
        if (i + j + k > c) continue;
        for (int a = 0; a < lbar.dims[i - 1]; ++a)
          for (int b = 0; b < lbar.dims[j - 1]; ++b)
            for (int d = 0; d < lbar.dims[k - 1]; ++d) {
              auto unit = [&](int deg, int t) {
                std::vector<int> v(lbar.dims[deg - 1], 0);
                v[t] = 1;
                return v;
              };
              auto x = unit(i, a), y = unit(j, b), z = unit(k, d);
              auto s1 = lbar.bracket(i + j, lbar.bracket(i, x, j, y), k, z);
              auto s2 = lbar.bracket(j + k, lbar.bracket(j, y, k, z), i, x);
              auto s3 = lbar.bracket(k + i, lbar.bracket(k, z, i, x), j, y);
              if (!vec_zero(vec_add(vec_add(s1, s2, p), s3, p)))
                fail(ErrorCode::InternalCheckFailed, "Jacobi identity fails");
            }
      }
  for (int i = 0; i + 1 < c; ++i) {
    // [L_{i+1}, L_1] spans L_{i+2}
    FpMatrix m = FpMatrix::zero(p, lbar.dims[i] * lbar.dims[0], lbar.dims[i + 1]);
    int row = 0;
    for (int a = 0; a < lbar.dims[i]; ++a)
      for (int b = 0; b < lbar.dims[0]; ++b, ++row)
        for (int t = 0; t < lbar.dims[i + 1]; ++t)
          m.at(row, t) = lbar.sc[i][0][static_cast<size_t>(a) * lbar.dims[0] + b][t];
    if (fp_rank(m) != lbar.dims[i + 1])
      fail(ErrorCode::InternalCheckFailed, "degree-1 part does not generate");
  }
  return lbar;
}

std::vector<FpMatrix> structure_matrices(const LieAlgebraModP& lbar) {
  const int m = lbar.dims.empty() ? 0 : lbar.dims[0];
  const int n = lbar.degrees() >= 2 ? lbar.dims[1] : 0;
  std::vector<FpMatrix> mats;
  for (int k = 0; k < n; ++k) {
    FpMatrix a = FpMatrix::zero(lbar.prime, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        a.at(i, j) = lbar.sc[0][0][static_cast<size_t>(j) * m + i][k];  // alpha_{j,i,k}
    if (!is_strongly_skew_symmetric(a))
      fail(ErrorCode::InternalCheckFailed, "structure matrix is not strongly skew-symmetric");
    mats.push_back(std::move(a));
  }
  return mats;
}

namespace {

struct DegreeOneData {
  int p, m, n;
  std::vector<std::vector<int>> vecs_m;   // all of F_p^m
  std::vector<char> in_cbar;              // indexed as vecs_m
  int cbar_count = 0;

  // bracket of v in L1 with w in L1 -> L2 coords
  const LieAlgebraModP* lbar;
  std::vector<int> l1_bracket(const std::vector<int>& v, const std::vector<int>& w) const {
    return lbar->bracket(1, v, 1, w);
  }
  // bracket of z in L2 with y in L1 -> L3 coords
  std::vector<int> l2_bracket(const std::vector<int>& z, const std::vector<int>& y) const {
    return lbar->bracket(2, z, 1, y);
  }
};

DegreeOneData degree_one_data(const LieAlgebraModP& lbar) {
  DegreeOneData d;
  d.p = lbar.prime;
  d.m = lbar.dims.empty() ? 0 : lbar.dims[0];
  d.n = lbar.degrees() >= 2 ? lbar.dims[1] : 0;
  d.lbar = &lbar;
  d.vecs_m = all_vectors(d.p, d.m);
  d.in_cbar.assign(d.vecs_m.size(), 0);
  for (size_t i = 0; i < d.vecs_m.size(); ++i) {
    bool in = true;
    std::vector<int> unit(d.n, 0);
    for (int b = 0; b < d.n && in; ++b) {
      std::fill(unit.begin(), unit.end(), 0);
      unit[b] = 1;
      if (!vec_zero(d.l2_bracket(unit, d.vecs_m[i]))) in = false;
    }
    d.in_cbar[i] = in;
    if (in) ++d.cbar_count;
  }
  return d;
}

int log_base(int p, long long v) {
  int e = 0;
  while (v > 1) {
    v /= p;
    ++e;
  }
  return e;
}

// kernel dimension of x -> [x, z] as a map L1 -> L2
int centralizer_dim(const DegreeOneData& d, const std::vector<int>& z) {
  FpMatrix m = FpMatrix::zero(d.p, d.n, d.m);
  for (int a = 0; a < d.m; ++a) {
    std::vector<int> unit(d.m, 0);
    unit[a] = 1;
    std::vector<int> br = d.l1_bracket(unit, z);
    for (int t = 0; t < d.n; ++t) m.at(t, a) = br[t];
  }
  return d.m - fp_rank(m);
}

bool centralizer_membership(const DegreeOneData& d, const std::vector<int>& x,
                            const std::vector<int>& z) {
  return vec_zero(d.l1_bracket(x, z));
}

bool entry_conditions(const LieAlgebraModP& lbar, bool* dim_l3_is_1, bool* transitive) {
  const int dim3 = lbar.degrees() >= 3 ? lbar.dims[2] : 0;
  *dim_l3_is_1 = dim3 == 1;
  *transitive = true;
  const int p = lbar.prime;
  const int m = lbar.dims.empty() ? 0 : lbar.dims[0];
  const int n = lbar.degrees() >= 2 ? lbar.dims[1] : 0;
  if (m == 0 || n == 0) {
    *transitive = false;
    return false;
  }
  for (const auto& y : all_vectors(p, m)) {
    if (vec_zero(y)) continue;
    FpMatrix b = FpMatrix::zero(p, n, m);
    for (int a = 0; a < m; ++a) {
      std::vector<int> unit(m, 0);
      unit[a] = 1;
      std::vector<int> br = lbar.bracket(1, unit, 1, y);
      for (int t = 0; t < n; ++t) b.at(t, a) = br[t];
    }
    if (fp_rank(b) != n) {
      *transitive = false;
      break;
    }
  }
  return *dim_l3_is_1 && *transitive;
}

}  // namespace

MacdonaldReport macdonald_analysis(const LieAlgebraModP& lbar) {
  MacdonaldReport rep;
  rep.m = lbar.dims.empty() ? 0 : lbar.dims[0];
  rep.n = lbar.degrees() >= 2 ? lbar.dims[1] : 0;
  rep.conditions_hold =
      entry_conditions(lbar, &rep.cond_dim_l3_is_1, &rep.cond_brackets_transitive);
  if (!rep.conditions_hold) return rep;

  const int p = lbar.prime;
  DegreeOneData d = degree_one_data(lbar);
  rep.m_even = rep.m % 2 == 0;
  rep.m_ge_2n = rep.m >= 2 * rep.n;
  rep.m_eq_2n = rep.m == 2 * rep.n;

  rep.cbar_dim = log_base(p, d.cbar_count);
  rep.cbar_dim_eq_n = rep.cbar_dim == rep.n;
  // lambda: L1 -> Hom(L2, L3); rows indexed by the L2 basis.
  {
    FpMatrix lam = FpMatrix::zero(p, rep.n, rep.m);
    for (int a = 0; a < rep.m; ++a) {
      std::vector<int> unit(rep.m, 0);
      unit[a] = 1;
      for (int b = 0; b < rep.n; ++b) {
        std::vector<int> zunit(rep.n, 0);
        zunit[b] = 1;
        std::vector<int> br = d.l2_bracket(zunit, unit);
        lam.at(b, a) = br.empty() ? 0 : br[0];
      }
    }
    rep.lambda_surjective = fp_rank(lam) == rep.n;
    // kernel of lambda vs the defining scan of Cbar
    auto kernel = fp_kernel_basis(lam);
    bool kernel_in_cbar = true;
    for (const auto& kv : kernel) {
      bool in = true;
      std::vector<int> zunit(rep.n, 0);
      for (int b = 0; b < rep.n && in; ++b) {
        std::fill(zunit.begin(), zunit.end(), 0);
        zunit[b] = 1;
        if (!vec_zero(d.l2_bracket(zunit, kv))) in = false;
      }
      if (!in) kernel_in_cbar = false;
    }
    long long kernel_size = 1;
    for (size_t i = 0; i < kernel.size(); ++i) kernel_size *= p;
    rep.lambda_kernel_is_cbar = kernel_in_cbar && kernel_size == d.cbar_count;
  }

  rep.centralizer_dims_ok = true;
  rep.cbar_equals_centralizers = true;
  rep.direct_sum_ok = true;
  for (size_t i = 0; i < d.vecs_m.size(); ++i) {
    const auto& z = d.vecs_m[i];
    if (vec_zero(z)) continue;
    if (centralizer_dim(d, z) != rep.m - rep.n) rep.centralizer_dims_ok = false;
    if (d.in_cbar[i]) {
      // C(z) must equal Cbar elementwise
      for (size_t x = 0; x < d.vecs_m.size() && rep.cbar_equals_centralizers; ++x)
        if (centralizer_membership(d, d.vecs_m[x], z) != static_cast<bool>(d.in_cbar[x]))
          rep.cbar_equals_centralizers = false;
    } else {
      long long meet = 0;
      for (size_t x = 0; x < d.vecs_m.size(); ++x)
        if (d.in_cbar[x] && centralizer_membership(d, d.vecs_m[x], z)) ++meet;
      long long cz = 0;
      for (size_t x = 0; x < d.vecs_m.size(); ++x)
        if (centralizer_membership(d, d.vecs_m[x], z)) ++cz;
      if (meet != 1 || cz * d.cbar_count != static_cast<long long>(d.vecs_m.size()))
        rep.direct_sum_ok = false;
    }
  }

  // every nonzero pencil of structure matrices is nonsingular
  {
    std::vector<FpMatrix> mats = structure_matrices(lbar);
    rep.pencil_nonsingular = true;
    long long total = 1;
    for (int k = 0; k < rep.n; ++k) total *= p;
    rep.pencil_exhaustive = total <= 10'000;
    auto test_psi = [&](const std::vector<int>& psi) {
      FpMatrix a = FpMatrix::zero(p, rep.m, rep.m);
      for (int k = 0; k < rep.n; ++k) {
        if (psi[k] == 0) continue;
        for (int u = 0; u < rep.m; ++u)
          for (int v = 0; v < rep.m; ++v)
            a.at(u, v) = (a.at(u, v) + psi[k] * mats[k].at(u, v)) % p;
      }
      return fp_det(a) != 0;
    };
    if (rep.pencil_exhaustive) {
      for (const auto& psi : all_vectors(p, rep.n)) {
        if (vec_zero(psi)) continue;
        ++rep.pencil_samples;
        if (!test_psi(psi)) {
          rep.pencil_nonsingular = false;
          break;
        }
      }
    } else {
      unsigned long long state = 0x2545F4914F6CDD1Dull;
      for (int trial = 0; trial < 10'000; ++trial) {
        std::vector<int> psi(rep.n, 0);
        bool nonzero = false;
        for (int k = 0; k < rep.n; ++k) {
          state ^= state << 13;
          state ^= state >> 7;
          state ^= state << 17;
          psi[k] = static_cast<int>(state % p);
          nonzero = nonzero || psi[k] != 0;
        }
        if (!nonzero) continue;
        ++rep.pencil_samples;
        if (!test_psi(psi)) {
          rep.pencil_nonsingular = false;
          break;
        }
      }
    }
  }
  return rep;
}

CentralizerStructureReport centralizer_structure_checks(const LieAlgebraModP& lbar) {
  bool c1 = false, c2 = false;
  if (!entry_conditions(lbar, &c1, &c2))
    fail(ErrorCode::ConditionsNotMet,
         "centralizer structure checks need dim L3 = 1 and transitive degree-1 brackets");
  DegreeOneData d = degree_one_data(lbar);
  CentralizerStructureReport rep;

  rep.bracket_nonvanishing_ok = true;
  for (size_t x = 0; x < d.vecs_m.size() && rep.bracket_nonvanishing_ok; ++x) {
    if (d.in_cbar[x]) continue;
    for (size_t y = 0; y < d.vecs_m.size(); ++y) {
      if (!d.in_cbar[y] || vec_zero(d.vecs_m[y])) continue;
      if (vec_zero(d.l1_bracket(d.vecs_m[x], d.vecs_m[y]))) {
        rep.bracket_nonvanishing_ok = false;
        break;
      }
    }
  }

  const int cbar_dim = log_base(d.p, d.cbar_count);
  rep.cbar_proper_nonzero = cbar_dim > 0 && cbar_dim < d.m;

  rep.centralizer_alignment_ok = true;
  for (size_t z = 0; z < d.vecs_m.size() && rep.centralizer_alignment_ok; ++z) {
    if (vec_zero(d.vecs_m[z])) continue;
    if (d.in_cbar[z]) {
      for (size_t x = 0; x < d.vecs_m.size(); ++x)
        if (centralizer_membership(d, d.vecs_m[x], d.vecs_m[z]) && !d.in_cbar[x]) {
          rep.centralizer_alignment_ok = false;
          break;
        }
    } else {
      for (size_t x = 0; x < d.vecs_m.size(); ++x)
        if (centralizer_membership(d, d.vecs_m[x], d.vecs_m[z]) && d.in_cbar[x] &&
            !vec_zero(d.vecs_m[x])) {
          rep.centralizer_alignment_ok = false;
          break;
        }
    }
  }
  return rep;
}

}  // namespace pgroup

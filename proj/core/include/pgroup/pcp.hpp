#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

// Product g_{i1}^{e1} * g_{i2}^{e2} * ... with strictly increasing generator
// indices and exponents in [1, relative order). The empty word is the
// identity.
struct NormalFormWord {
  std::vector<std::pair<int, int>> letters;  // (generator index, exponent)
  bool empty() const { return letters.empty(); }
  bool operator==(const NormalFormWord&) const = default;
};

// Power-commutator presentation: ordered generators g_1..g_n with relative
// orders p^{e_i}, power relations g_i^{q_i} = w_i over generators of index
// > i, and commutator relations [g_j, g_i] = w_{ji} (j > i) over generators
// of index > j. Omitted relations are trivial.
struct PcPresentation {
  int prime = 2;
  std::vector<std::string> names;
  std::vector<int> relative_orders;
  std::vector<NormalFormWord> power_words;
  std::vector<std::vector<NormalFormWord>> comm_words;  // comm_words[j][i] for j > i

  int num_generators() const { return static_cast<int>(names.size()); }
  const NormalFormWord& commutator_word(int j, int i) const { return comm_words[j][i]; }
  bool operator==(const PcPresentation&) const = default;
};

/// Structural checks: names, prime-power relative orders, exponent ranges,
/// and the strictly-larger-index constraint on every relation word.
void validate_presentation(const PcPresentation& p);

struct RealizeOptions {
  int size_cap = 4096;
  long long collect_step_cap = 1'000'000;  // per product
};

/// Builds the multiplication table of the presented group by collection from
/// the left. The realized table is validated; any failure means the
/// presentation was inconsistent (InconsistentPresentation).
FiniteGroup realize(const PcPresentation& p, const RealizeOptions& opts = {});

/// Parses the line-oriented presentation DSL. Errors carry line/column.
PcPresentation parse_presentation(std::string_view text);

/// Canonical renderer: relations in generator-index order, single spaces,
/// no trailing whitespace. parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const PcPresentation& p);

// ---- Built-in families ----------------------------------------------------

/// Metacyclic group <x, y | x^{p^{r+t}} = 1, y^{p^r} = x^{p^{r+s}},
/// [x, y] = x^{p^t}> with 1 <= t < r, 0 <= s <= t (t >= 2 when p = 2).
/// Order p^{2r+t}, cyclic commutator subgroup of order p^r, class >= 3.
PcPresentation pres_metacyclic_K(int p, int r, int s, int t);
FiniteGroup family_metacyclic_K(int p, int r, int s, int t, const RealizeOptions& opts = {});

/// Two-generator group <x, y, u | x^{p^m} = u^i, y^{p^n} = x^j u^k,
/// [x, y] = u, u^{p^r} = 1 = [u, x], [u, y] = u^{p^s}> with 1 <= s < r
/// (s >= 2 when p = 2). Consistency of arbitrary parameter tuples is only
/// decided at realization.
PcPresentation pres_two_generator_G(int p, int m, int n, int i, int j, int k, int r, int s);
FiniteGroup family_two_generator_G(int p, int m, int n, int i, int j, int k, int r, int s,
                                   const RealizeOptions& opts = {});

/// 3x3 unitriangular matrices over GF(p^m), p odd. Elements are triples
/// (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
FiniteGroup family_unitriangular(int p, int m, int size_cap = 4096);

enum class ExtraspecialKind { ExponentP, ExponentP2, DType, QType };
ExtraspecialKind extraspecial_kind_from_string(const std::string& s, int p);

/// Extraspecial group of order p^{2n+1} as a central product of order-p^3
/// blocks. Odd p: exponent-p or exponent-p^2; p = 2: D8-type or Q8-type.
FiniteGroup family_extraspecial(int p, int n, ExtraspecialKind kind, int size_cap = 4096);

/// Upper unitriangular 3x3 matrices over the ring Z_q, q = p^e: the
/// 2-generator class-2 group with cyclic gamma_2 = Z of order q.
FiniteGroup heisenberg_mod(int p, int e, int size_cap = 4096);

/// Central product of m copies of heisenberg_mod(p, e) amalgamated over the
/// common center; order q^{2m+1} with q = p^e.
FiniteGroup family_y_product(int p, int e, int m, int size_cap = 4096);

// Canonical presentations of the table-built families (emitted by the CLI's
// family builder; realize() yields a group isomorphic to the table form).
PcPresentation pres_unitriangular(int p, int m);
PcPresentation pres_heisenberg_mod(int p, int e);
PcPresentation pres_extraspecial(int p, int n, ExtraspecialKind kind);
PcPresentation pres_y_product(int p, int e, int m);

// Small stock presentations used by tests and the default corpus.
PcPresentation pres_dihedral16();
PcPresentation pres_quaternion16();
PcPresentation pres_modular16();
PcPresentation pres_quaternion8();
PcPresentation pres_dihedral8();
PcPresentation pres_modular_p3(int p);  // <a, b | a^{p^2} = 1, b^p = 1, [a,b] = a^p>

}  // namespace pgroup

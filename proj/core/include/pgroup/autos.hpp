#pragma once

#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

struct AutOptions {
  long long budget = 10'000'000;  // backtracking nodes; exceeding is an error
};

struct GroupAutomorphism {
  const FiniteGroup* parent = nullptr;
  std::vector<int> image;  // bijection with image[identity] = identity
  struct Flags {
    bool inner = false;
    bool class_preserving = false;
    bool central = false;
    bool basis_conjugating = false;
    bool gamma2_trivial = false;
  } flags;
};

struct AutomorphismGroup {
  std::vector<GroupAutomorphism> elements;  // sorted by image array
  long long order = 0;
  bool closure_verified = false;  // closed under composition, contains id
};

/// Conjugation maps; |Inn(G)| = |G/Z(G)|.
AutomorphismGroup inner_automorphisms(const FiniteGroup& g);

/// Aut_c(G): generator images are restricted to conjugacy classes, then the
/// class-preservation condition is verified over every element.
AutomorphismGroup class_preserving_automorphisms(const FiniteGroup& g, const AutOptions& o = {});

/// Autcent(G): x^-1 a(x) central for every x.
AutomorphismGroup central_automorphisms(const FiniteGroup& g, const AutOptions& o = {});

/// Cb(G): every element outside the Frattini subgroup maps into its class.
AutomorphismGroup basis_conjugating_automorphisms(const FiniteGroup& g, const AutOptions& o = {});

/// Automorphisms inducing the identity on G/gamma_2(G).
AutomorphismGroup gamma2_trivial_automorphisms(const FiniteGroup& g, const AutOptions& o = {});

struct AdneyYenReport {
  long long autcent_order = 0;
  unsigned long long hom_count_value = 0;
  bool match = false;
};

/// Compares |Autcent(G)| with |Hom(G/gamma_2, Z)|. Requires Z(G) <= Phi(G),
/// a sufficient condition for G being purely non-abelian.
AdneyYenReport adney_yen_check(const FiniteGroup& g, const AutOptions& o = {});

struct HomcResult {
  long long count = 0;
  // Each map lists the image (an element of G lying in gamma_2) of every
  // element of G/Z(G), indexed as in quotient_group(G, Z(G)).
  std::vector<std::vector<int>> maps;
};

/// Enumerates Hom_c(G/Z, gamma_2) = {f : f(gZ) in [g,G] for all g} for
/// groups of class exactly 2; its size equals |Aut_c(G)|.
HomcResult homc_enumerate(const FiniteGroup& g, const AutOptions& o = {});

// Shared search helpers (also used by the isoclinism test).

struct WordTree {
  std::vector<int> gens;       // generating set used for the expansion
  std::vector<int> bfs_order;  // all elements, identity first
  std::vector<int> parent;     // element -> previous element (bfs)
  std::vector<int> edge;       // element -> generator slot index
};

WordTree build_word_tree(const FiniteGroup& g, const std::vector<int>& gens);

/// Extends generator images along the word tree into a full map src -> dst;
/// returns an empty vector when the result is not a bijective homomorphism.
std::vector<int> extend_and_check(const FiniteGroup& src, const WordTree& wt,
                                  const FiniteGroup& dst, const std::vector<int>& gen_images);

}  // namespace pgroup

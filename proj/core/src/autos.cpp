#include "pgroup/autos.hpp"

#include <algorithm>
#include <unordered_set>

#include "pgroup/abelian.hpp"

namespace pgroup {

WordTree build_word_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  WordTree wt;
  wt.gens = gens;
  wt.parent.assign(g.order, -1);
  wt.edge.assign(g.order, -1);
  std::vector<char> seen(g.order, 0);
  seen[g.identity] = 1;
  wt.bfs_order.push_back(g.identity);
  for (size_t q = 0; q < wt.bfs_order.size(); ++q) {
    const int cur = wt.bfs_order[q];
    for (size_t s = 0; s < gens.size(); ++s) {
      const int nxt = g.at(cur, gens[s]);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        wt.parent[nxt] = cur;
        wt.edge[nxt] = static_cast<int>(s);
        wt.bfs_order.push_back(nxt);
      }
    }
  }
  if (static_cast<int>(wt.bfs_order.size()) != g.order)
    fail(ErrorCode::InternalCheckFailed, "word tree generators do not generate");
  return wt;
}

std::vector<int> extend_and_check(const FiniteGroup& src, const WordTree& wt,
                                  const FiniteGroup& dst, const std::vector<int>& gen_images) {
  std::vector<int> img(src.order, -1);
  img[src.identity] = dst.identity;
  for (size_t q = 1; q < wt.bfs_order.size(); ++q) {
    const int e = wt.bfs_order[q];
    img[e] = dst.at(img[wt.parent[e]], gen_images[wt.edge[e]]);
  }
  // Homomorphism against every generator suffices: products expand by
  // induction along generator words.
  for (int e = 0; e < src.order; ++e)
    for (size_t s = 0; s < wt.gens.size(); ++s)
      if (img[src.at(e, wt.gens[s])] != dst.at(img[e], gen_images[s])) return {};
  if (src.order == dst.order) {
    std::vector<char> seen(dst.order, 0);
    for (int e = 0; e < src.order; ++e) {
      if (seen[img[e]]) return {};
      seen[img[e]] = 1;
    }
  }
  return img;
}

namespace {

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using ImageSet = std::unordered_set<std::vector<int>, ImageHash>;

std::vector<int> compose(const FiniteGroup& g, const std::vector<int>& a,
                         const std::vector<int>& b) {
  // (a after b)(x) = a(b(x))
  std::vector<int> c(g.order);
  for (int x = 0; x < g.order; ++x) c[x] = a[b[x]];
  return c;
}

// Closed under composition and containing the identity map?
bool verify_group_closure(const FiniteGroup& g, const std::vector<std::vector<int>>& sorted_images) {
  ImageSet all(sorted_images.begin(), sorted_images.end());
  std::vector<int> id(g.order);
  for (int i = 0; i < g.order; ++i) id[i] = i;
  if (!all.count(id)) return false;
  std::vector<std::vector<int>> gens;
  ImageSet closure;
  std::vector<std::vector<int>> closure_list;
  auto close = [&]() {
    closure.clear();
    closure_list.clear();
    closure.insert(id);
    closure_list.push_back(id);
    for (size_t q = 0; q < closure_list.size(); ++q) {
      for (const auto& t : gens) {
        std::vector<int> c = compose(g, closure_list[q], t);
        if (!all.count(c)) return false;  // escapes the set: not closed
        if (closure.insert(c).second) closure_list.push_back(c);
      }
    }
    return true;
  };
  if (!close()) return false;
  for (const auto& s : sorted_images) {
    if (closure.count(s)) continue;
    gens.push_back(s);
    if (!close()) return false;
  }
  return closure_list.size() == sorted_images.size();
}

// Cached per-group facts shared by the searches and the flag computation.
struct SearchContext {
  const FiniteGroup* g;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_id;
  SubgroupSet z;
  SubgroupSet gamma2;
  SubgroupSet phi;
  bool has_phi = false;
  std::vector<int> gens;
  WordTree words;

  explicit SearchContext(const FiniteGroup& grp) : g(&grp) {
    classes = conjugacy_classes(grp);
    class_id = class_ids(grp, classes);
    z = center(grp);
    gamma2 = derived_subgroup(grp);
    if (grp.prime || grp.order == 1) {
      phi = frattini_subgroup(grp);
      has_phi = true;
    }
    gens = minimal_generating_set(grp);
    if (gens.empty()) gens.push_back(grp.identity);
    words = build_word_tree(grp, gens);
  }
};

void set_flags(const SearchContext& ctx, const ImageSet& inner, GroupAutomorphism& a) {
  const FiniteGroup& g = *ctx.g;
  a.flags.inner = inner.count(a.image) > 0;
  a.flags.class_preserving = true;
  a.flags.central = true;
  a.flags.gamma2_trivial = true;
  a.flags.basis_conjugating = ctx.has_phi;
  for (int x = 0; x < g.order; ++x) {
    const int disp = g.at(g.inv[x], a.image[x]);  // x^-1 a(x)
    if (ctx.class_id[a.image[x]] != ctx.class_id[x]) {
      a.flags.class_preserving = false;
      if (ctx.has_phi && !ctx.phi.contains(x)) a.flags.basis_conjugating = false;
    }
    if (!ctx.z.contains(disp)) a.flags.central = false;
    if (!ctx.gamma2.contains(disp)) a.flags.gamma2_trivial = false;
  }
}

AutomorphismGroup assemble(const SearchContext& ctx, std::vector<std::vector<int>> images) {
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  ImageSet inner;
  {
    const FiniteGroup& g = *ctx.g;
    for (int h = 0; h < g.order; ++h) {
      std::vector<int> conj(g.order);
      for (int x = 0; x < g.order; ++x) conj[x] = g.conj_of(x, h);
      inner.insert(std::move(conj));
    }
  }

  AutomorphismGroup out;
  out.closure_verified = verify_group_closure(*ctx.g, images);
  out.order = static_cast<long long>(images.size());
  out.elements.reserve(images.size());
  for (auto& img : images) {
    GroupAutomorphism a;
    a.parent = ctx.g;
    a.image = std::move(img);
    set_flags(ctx, inner, a);
    out.elements.push_back(std::move(a));
  }
  return out;
}

// Cartesian product of the per-generator candidate lists; each tuple is
// extended to a full map and kept when it is a bijective homomorphism
// passing `keep`.
template <typename Keep>
std::vector<std::vector<int>> search_automorphisms(const SearchContext& ctx,
                                                   const std::vector<std::vector<int>>& candidates,
                                                   const AutOptions& o, Keep keep) {
  const FiniteGroup& g = *ctx.g;
  const size_t d = candidates.size();
  std::vector<std::vector<int>> found;
  for (const auto& c : candidates)
    if (c.empty()) return found;
  std::vector<size_t> idx(d, 0);
  std::vector<int> images(d);
  long long nodes = 0;
  for (;;) {
    if (++nodes > o.budget)
      fail(ErrorCode::SearchBudgetExceeded, "automorphism search exceeded the node budget");
    for (size_t s = 0; s < d; ++s) images[s] = candidates[s][idx[s]];
    std::vector<int> img = extend_and_check(g, ctx.words, g, images);
    if (!img.empty() && keep(img)) found.push_back(std::move(img));
    size_t k = 0;
    while (k < d && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == d) break;
  }
  return found;
}

}  // namespace

AutomorphismGroup inner_automorphisms(const FiniteGroup& g) {
  SearchContext ctx(g);
  std::vector<std::vector<int>> images;
  for (int h = 0; h < g.order; ++h) {
    std::vector<int> conj(g.order);
    for (int x = 0; x < g.order; ++x) conj[x] = g.conj_of(x, h);
    images.push_back(std::move(conj));
  }
  AutomorphismGroup out = assemble(ctx, std::move(images));
  if (out.order != g.order / center(g).order())
    fail(ErrorCode::InternalCheckFailed, "|Inn(G)| != |G/Z(G)|");
  return out;
}

AutomorphismGroup class_preserving_automorphisms(const FiniteGroup& g, const AutOptions& o) {
  SearchContext ctx(g);
  std::vector<std::vector<int>> candidates;
  for (int s : ctx.gens) candidates.push_back(ctx.classes[ctx.class_id[s]].members);
  auto keep = [&](const std::vector<int>& img) {
    for (int x = 0; x < g.order; ++x)
      if (ctx.class_id[img[x]] != ctx.class_id[x]) return false;
    return true;
  };
  AutomorphismGroup out = assemble(ctx, search_automorphisms(ctx, candidates, o, keep));
  if (!out.closure_verified)
    fail(ErrorCode::InternalCheckFailed, "Aut_c is not closed under composition");
  return out;
}

AutomorphismGroup central_automorphisms(const FiniteGroup& g, const AutOptions& o) {
  SearchContext ctx(g);
  std::vector<std::vector<int>> candidates;
  for (int s : ctx.gens) {
    std::vector<int> coset;
    for (int zz : ctx.z.members) coset.push_back(g.at(s, zz));
    std::sort(coset.begin(), coset.end());
    candidates.push_back(std::move(coset));
  }
  auto keep = [&](const std::vector<int>& img) {
    for (int x = 0; x < g.order; ++x)
      if (!ctx.z.contains(g.at(g.inv[x], img[x]))) return false;
    return true;
  };
  AutomorphismGroup out = assemble(ctx, search_automorphisms(ctx, candidates, o, keep));
  if (!out.closure_verified)
    fail(ErrorCode::InternalCheckFailed, "Autcent is not closed under composition");
  return out;
}

AutomorphismGroup basis_conjugating_automorphisms(const FiniteGroup& g, const AutOptions& o) {
  SearchContext ctx(g);
  if (!ctx.has_phi)
    fail(ErrorCode::NotPGroup, "basis conjugating automorphisms need a p-group");
  std::vector<std::vector<int>> candidates;
  for (int s : ctx.gens) candidates.push_back(ctx.classes[ctx.class_id[s]].members);
  auto keep = [&](const std::vector<int>& img) {
    for (int x = 0; x < g.order; ++x)
      if (!ctx.phi.contains(x) && ctx.class_id[img[x]] != ctx.class_id[x]) return false;
    return true;
  };
  // Closure is verified and reported, not assumed.
  return assemble(ctx, search_automorphisms(ctx, candidates, o, keep));
}

AutomorphismGroup gamma2_trivial_automorphisms(const FiniteGroup& g, const AutOptions& o) {
  SearchContext ctx(g);
  std::vector<std::vector<int>> candidates;
  for (int s : ctx.gens) {
    std::vector<int> coset;
    for (int u : ctx.gamma2.members) coset.push_back(g.at(s, u));
    std::sort(coset.begin(), coset.end());
    candidates.push_back(std::move(coset));
  }
  auto keep = [&](const std::vector<int>& img) {
    for (int x = 0; x < g.order; ++x)
      if (!ctx.gamma2.contains(g.at(g.inv[x], img[x]))) return false;
    return true;
  };
  AutomorphismGroup out = assemble(ctx, search_automorphisms(ctx, candidates, o, keep));
  if (!out.closure_verified)
    fail(ErrorCode::InternalCheckFailed, "Aut^{gamma_2} is not closed under composition");
  return out;
}

AdneyYenReport adney_yen_check(const FiniteGroup& g, const AutOptions& o) {
  SubgroupSet z = center(g);
  SubgroupSet phi = frattini_subgroup(g);
  if (!subgroup_contains(phi, z))
    fail(ErrorCode::PrecondFailed, "Adney-Yen check requires Z(G) <= Phi(G)");
  AdneyYenReport rep;
  rep.autcent_order = central_automorphisms(g, o).order;
  QuotientResult q = quotient_group(g, derived_subgroup(g));
  SubgroupGroup zg = subgroup_as_group(g, z);
  rep.hom_count_value = hom_count(invariant_factors(q.group), invariant_factors(zg.group));
  rep.match = static_cast<unsigned long long>(rep.autcent_order) == rep.hom_count_value;
  return rep;
}

HomcResult homc_enumerate(const FiniteGroup& g, const AutOptions& o) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls != 2) fail(ErrorCode::WrongClass, "Hom_c enumeration needs class exactly 2");

  SubgroupSet z = center(g);
  QuotientResult q = quotient_group(g, z);
  AbelianBasis basis = abelian_basis(q.group);
  const size_t d = basis.elements.size();

  // Coordinates of every quotient element in the basis.
  std::vector<std::vector<int>> coords(q.group.order);
  {
    std::vector<int> tup(d, 0);
    for (;;) {
      int e = q.group.identity;
      for (size_t i = 0; i < d; ++i)
        e = q.group.at(e, power_of(q.group, basis.elements[i], tup[i]));
      coords[e] = tup;
      size_t k = 0;
      while (k < d && ++tup[k] == basis.orders[k]) tup[k++] = 0;
      if (k == d) break;
    }
  }

  // f(gZ) must land in [g,G], which depends only on the coset: central
  // factors drop out of commutators.
  std::vector<std::vector<char>> allowed(q.group.order, std::vector<char>(g.order, 0));
  for (int e = 0; e < q.group.order; ++e)
    for (int c : commutator_set(g, q.section[e])) allowed[e][c] = 1;

  std::vector<std::vector<int>> candidates(d);
  for (size_t i = 0; i < d; ++i)
    for (int v : commutator_set(g, q.section[basis.elements[i]]))
      if (power_of(g, v, basis.orders[i]) == g.identity) candidates[i].push_back(v);

  HomcResult res;
  for (const auto& c : candidates)
    if (c.empty()) return res;
  std::vector<size_t> idx(d, 0);
  long long nodes = 0;
  for (;;) {
    if (++nodes > o.budget)
      fail(ErrorCode::SearchBudgetExceeded, "Hom_c enumeration exceeded the node budget");
    std::vector<int> f(q.group.order);
    bool ok = true;
    for (int e = 0; e < q.group.order && ok; ++e) {
      int v = g.identity;
      for (size_t i = 0; i < d; ++i)
        v = g.at(v, power_of(g, candidates[i][idx[i]], coords[e][i]));
      f[e] = v;
      if (!allowed[e][v]) ok = false;
    }
    if (ok) {
      ++res.count;
      res.maps.push_back(std::move(f));
    }
    size_t k = 0;
    while (k < d && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == d) break;
  }
  return res;
}

}  // namespace pgroup

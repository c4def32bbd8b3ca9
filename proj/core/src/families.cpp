#include <algorithm>

#include "pgroup/fp.hpp"
#include "pgroup/pcp.hpp"

namespace pgroup {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    if (r > (1LL << 62) / b) fail(ErrorCode::SizeCapExceeded, "parameter exponent overflow");
    r *= b;
  }
  return r;
}

// Mixed-radix digits of a cyclic-group exponent along a power chain
// v_0, v_1 = v_0^{step_0}, v_2 = v_1^{step_1}, ...: digit j has radix
// radices[j], and a = sum digit_j * weight_j with weight_{j+1} =
// weight_j * radices[j].
std::vector<int> chain_digits(long long a, const std::vector<long long>& radices) {
  std::vector<int> d(radices.size(), 0);
  for (size_t j = 0; j < radices.size(); ++j) {
    d[j] = static_cast<int>(a % radices[j]);
    a /= radices[j];
  }
  return d;
}

// Word over the chain generators (their presentation indices given by
// chain_index) for the element v_0^a.
NormalFormWord chain_word(long long a, const std::vector<long long>& radices,
                          const std::vector<int>& chain_index) {
  NormalFormWord w;
  const std::vector<int> d = chain_digits(a, radices);
  for (size_t j = 0; j < d.size(); ++j)
    if (d[j] != 0) w.letters.push_back({chain_index[j], d[j]});
  return w;
}

NormalFormWord nfw_letters(std::vector<std::pair<int, int>> letters) {
  NormalFormWord w;
  w.letters = std::move(letters);
  return w;
}

}  // namespace

PcPresentation pres_metacyclic_K(int p, int r, int s, int t) {
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (!(1 <= t && t < r) || !(0 <= s && s <= t))
    fail(ErrorCode::ParameterViolation, "need 1 <= t < r and 0 <= s <= t");
  if (p == 2 && t < 2) fail(ErrorCode::ParameterViolation, "need t >= 2 when p = 2");

  // <x> is cyclic of order p^{r+t}; refine it along the chain
  // x, x^{p^t}, x^{p^2t}, ... so every relation lands in later generators.
  const long long xord = ipow(p, r + t);
  std::vector<long long> radices;          // radix of each chain position
  std::vector<int> chain_index;            // presentation index of position j
  int jt = 0;
  while (jt < r + t) {
    radices.push_back(ipow(p, std::min(t, r + t - jt)));
    jt += t;
  }
  const int chain_len = static_cast<int>(radices.size());

  PcPresentation pr;
  pr.prime = p;
  pr.names.push_back("x");
  pr.names.push_back("y");
  for (int j = 1; j < chain_len; ++j)
    pr.names.push_back("u" + (j == 1 ? std::string() : std::to_string(j)));
  chain_index.push_back(0);  // x itself
  for (int j = 1; j < chain_len; ++j) chain_index.push_back(j + 1);

  const int n = pr.num_generators();
  pr.relative_orders.assign(n, 0);
  pr.relative_orders[0] = static_cast<int>(radices[0]);
  pr.relative_orders[1] = static_cast<int>(ipow(p, r));
  for (int j = 1; j < chain_len; ++j) pr.relative_orders[j + 1] = static_cast<int>(radices[j]);
  pr.power_words.assign(n, {});
  pr.comm_words.resize(n);
  for (int i = 0; i < n; ++i) pr.comm_words[i].assign(i, {});

  auto xpow = [&](long long e) { return chain_word(((e % xord) + xord) % xord, radices, chain_index); };

  pr.power_words[0] = xpow(ipow(p, t));                      // x^{p^t} = u
  pr.power_words[1] = xpow(ipow(p, r + s));                  // y^{p^r} = x^{p^{r+s}}
  for (int j = 1; j < chain_len; ++j)
    pr.power_words[j + 1] = xpow(ipow(p, (j + 1) * t));      // u_j^{p^t} = x^{p^{(j+1)t}}
  pr.comm_words[1][0] = xpow(-ipow(p, t));                   // [y,x] = x^{-p^t}
  for (int j = 1; j < chain_len; ++j) {
    pr.comm_words[j + 1][0] = {};                            // [u_j, x] = 1
    pr.comm_words[j + 1][1] = xpow(ipow(p, (j + 1) * t));    // [u_j, y] = x^{p^{(j+1)t}}
  }
  validate_presentation(pr);
  return pr;
}

FiniteGroup family_metacyclic_K(int p, int r, int s, int t, const RealizeOptions& opts) {
  return realize(pres_metacyclic_K(p, r, s, t), opts);
}

PcPresentation pres_two_generator_G(int p, int m, int n, int i, int j, int k, int r, int s) {
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (!(1 <= s && s < r)) fail(ErrorCode::ParameterViolation, "need 1 <= s < r");
  if (p == 2 && s < 2) fail(ErrorCode::ParameterViolation, "need s >= 2 when p = 2");
  if (m < 1 || n < 1 || i < 0 || j < 0 || k < 0)
    fail(ErrorCode::ParameterViolation, "need m, n >= 1 and i, j, k >= 0");

  const long long uord = ipow(p, r);
  std::vector<long long> radices;
  int ls = 0;
  while (ls < r) {
    radices.push_back(ipow(p, std::min(s, r - ls)));
    ls += s;
  }
  const int chain_len = static_cast<int>(radices.size());

  PcPresentation pr;
  pr.prime = p;
  pr.names = {"y", "x", "u"};
  for (int l = 1; l < chain_len; ++l) pr.names.push_back("u" + std::to_string(l));
  std::vector<int> chain_index;
  for (int l = 0; l < chain_len; ++l) chain_index.push_back(l + 2);

  const int ngen = pr.num_generators();
  pr.relative_orders.assign(ngen, 0);
  pr.relative_orders[0] = static_cast<int>(ipow(p, n));
  pr.relative_orders[1] = static_cast<int>(ipow(p, m));
  for (int l = 0; l < chain_len; ++l) pr.relative_orders[l + 2] = static_cast<int>(radices[l]);
  pr.power_words.assign(ngen, {});
  pr.comm_words.resize(ngen);
  for (int a = 0; a < ngen; ++a) pr.comm_words[a].assign(a, {});

  auto upow = [&](long long e) { return chain_word(((e % uord) + uord) % uord, radices, chain_index); };

  // y^{p^n} = x^j u^k, folding x^{p^m} = u^i into the x exponent.
  const long long pm = ipow(p, m);
  const long long jred = j % pm;
  const long long carry = j / pm;
  NormalFormWord ypow;
  if (jred > 0) ypow.letters.push_back({1, static_cast<int>(jred)});
  NormalFormWord utail = upow(k + static_cast<long long>(i) * carry);
  ypow.letters.insert(ypow.letters.end(), utail.letters.begin(), utail.letters.end());
  pr.power_words[0] = ypow;
  pr.power_words[1] = upow(i);  // x^{p^m} = u^i
  for (int l = 0; l < chain_len; ++l)
    pr.power_words[l + 2] = upow(ipow(p, l * s) * radices[l]);

  pr.comm_words[1][0] = upow(1);  // [x,y] = u
  for (int l = 0; l < chain_len; ++l) {
    pr.comm_words[l + 2][0] = upow(ipow(p, l * s) * ipow(p, s));  // [u_l, y] = u_l^{p^s}
    pr.comm_words[l + 2][1] = {};                                 // [u_l, x] = 1
  }
  validate_presentation(pr);
  return pr;
}

FiniteGroup family_two_generator_G(int p, int m, int n, int i, int j, int k, int r, int s,
                                   const RealizeOptions& opts) {
  return realize(pres_two_generator_G(p, m, n, i, j, k, r, s), opts);
}

namespace {

// Shared triple model (a, b, c) with product
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b') over a commutative ring of
// size q given by add/neg/mul tables.
template <typename Add, typename Neg, typename Mul>
FiniteGroup triple_group(int q, int p, Add add, Neg neg, Mul mul,
                         const std::vector<int>& slot_gens, int size_cap) {
  const long long n = static_cast<long long>(q) * q * q;
  if (n > size_cap) fail(ErrorCode::SizeCapExceeded, "group exceeds the size cap");
  auto enc = [&](int a, int b, int c) { return (a * q + b) * q + c; };
  FiniteGroup g;
  g.order = static_cast<int>(n);
  g.identity = 0;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < q; ++a1)
    for (int b1 = 0; b1 < q; ++b1)
      for (int c1 = 0; c1 < q; ++c1) {
        const int x = enc(a1, b1, c1);
        for (int a2 = 0; a2 < q; ++a2)
          for (int b2 = 0; b2 < q; ++b2) {
            const int ab = add(c1, mul(a1, b2));
            for (int c2 = 0; c2 < q; ++c2)
              g.mul[static_cast<size_t>(x) * n + enc(a2, b2, c2)] =
                  enc(add(a1, a2), add(b1, b2), add(ab, c2));
          }
      }
  g.inv.resize(n);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        g.inv[enc(a, b, c)] = enc(neg(a), neg(b), add(neg(c), mul(a, b)));
  g.labels.resize(n);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        g.labels[enc(a, b, c)] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")";
  for (int s : slot_gens) {
    g.generators.push_back(enc(s, 0, 0));
    g.generators.push_back(enc(0, s, 0));
  }
  g.prime = p;
  return g;
}

}  // namespace

FiniteGroup family_unitriangular(int p, int m, int size_cap) {
  if (p == 2) fail(ErrorCode::EvenPrime, "unitriangular family requires an odd prime");
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (m < 1) fail(ErrorCode::ParameterViolation, "need m >= 1");
  GaloisField f = make_galois_field(p, m);
  std::vector<int> basis;  // 1, x, x^2, ... as F_p-basis of GF(p^m)
  int b = 1;
  for (int i = 0; i < m; ++i) {
    basis.push_back(b);
    b *= p;
  }
  return triple_group(
      f.q, p, [&f](int x, int y) { return f.add(x, y); }, [&f](int x) { return f.neg(x); },
      [&f](int x, int y) { return f.mul(x, y); }, basis, size_cap);
}

FiniteGroup heisenberg_mod(int p, int e, int size_cap) {
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (e < 1) fail(ErrorCode::ParameterViolation, "need e >= 1");
  const int q = static_cast<int>(ipow(p, e));
  return triple_group(
      q, p, [q](int x, int y) { return (x + y) % q; }, [q](int x) { return (q - x) % q; },
      [q](int x, int y) { return static_cast<int>(static_cast<long long>(x) * y % q); },
      std::vector<int>{1}, size_cap);
}

PcPresentation pres_dihedral8() {
  PcPresentation pr;
  pr.prime = 2;
  pr.names = {"r", "s", "z"};
  pr.relative_orders = {2, 2, 2};
  pr.power_words.assign(3, {});
  pr.comm_words = {{}, {{}}, {{}, {}}};
  pr.power_words[0].letters = {{2, 1}};      // r^2 = z
  pr.comm_words[1][0].letters = {{2, 1}};    // [s,r] = z
  return pr;
}

PcPresentation pres_quaternion8() {
  PcPresentation pr;
  pr.prime = 2;
  pr.names = {"a", "b", "z"};
  pr.relative_orders = {2, 2, 2};
  pr.power_words.assign(3, {});
  pr.comm_words = {{}, {{}}, {{}, {}}};
  pr.power_words[0].letters = {{2, 1}};
  pr.power_words[1].letters = {{2, 1}};
  pr.comm_words[1][0].letters = {{2, 1}};
  return pr;
}

namespace {

PcPresentation order16_base() {
  PcPresentation pr;
  pr.prime = 2;
  pr.names = {"s", "r", "u", "v"};
  pr.relative_orders = {2, 2, 2, 2};
  pr.power_words.assign(4, {});
  pr.comm_words = {{}, {{}}, {{}, {}}, {{}, {}, {}}};
  pr.power_words[1].letters = {{2, 1}};  // r^2 = u
  pr.power_words[2].letters = {{3, 1}};  // u^2 = v
  return pr;
}

}  // namespace

PcPresentation pres_dihedral16() {
  PcPresentation pr = order16_base();
  pr.comm_words[1][0].letters = {{2, 1}, {3, 1}};  // [r,s] = u*v = r^6
  pr.comm_words[2][0].letters = {{3, 1}};          // [u,s] = v
  return pr;
}

PcPresentation pres_quaternion16() {
  PcPresentation pr = pres_dihedral16();
  pr.power_words[0].letters = {{3, 1}};  // s^2 = v
  return pr;
}

PcPresentation pres_modular16() {
  PcPresentation pr = order16_base();
  pr.comm_words[1][0].letters = {{3, 1}};  // [r,s] = v = r^4
  return pr;
}

PcPresentation pres_modular_p3(int p) {
  PcPresentation pr;
  pr.prime = p;
  pr.names = {"a", "b", "c"};
  pr.relative_orders = {p, p, p};
  pr.power_words.assign(3, {});
  pr.comm_words = {{}, {{}}, {{}, {}}};
  pr.power_words[0].letters = {{2, 1}};          // a^p = c
  pr.comm_words[1][0].letters = {{2, p - 1}};    // [b,a] = c^{-1}
  return pr;
}

FiniteGroup family_extraspecial(int p, int n, ExtraspecialKind kind, int size_cap) {
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (n < 1) fail(ErrorCode::ParameterViolation, "need n >= 1");
  const bool odd = p != 2;
  if (odd && (kind == ExtraspecialKind::DType || kind == ExtraspecialKind::QType))
    fail(ErrorCode::ParameterViolation, "D/Q kinds are the p = 2 central products");
  if (!odd && (kind == ExtraspecialKind::ExponentP || kind == ExtraspecialKind::ExponentP2))
    fail(ErrorCode::ParameterViolation, "exponent kinds require an odd prime");
  if (ipow(p, 2 * n + 1) > size_cap)
    fail(ErrorCode::SizeCapExceeded, "extraspecial group exceeds the size cap");

  std::vector<FiniteGroup> blocks;
  std::vector<int> amalgam;
  auto add_heis = [&]() {
    blocks.push_back(heisenberg_mod(p, 1, size_cap));
    amalgam.push_back(1);  // element (0,0,1)
  };
  auto add_pcp = [&](const PcPresentation& pr) {
    FiniteGroup b = realize(pr);
    amalgam.push_back(b.generators[2]);
    blocks.push_back(std::move(b));
  };
  switch (kind) {
    case ExtraspecialKind::ExponentP:
    case ExtraspecialKind::DType:
      add_heis();
      break;
    case ExtraspecialKind::ExponentP2:
      add_pcp(pres_modular_p3(p));
      break;
    case ExtraspecialKind::QType:
      add_pcp(pres_quaternion8());
      break;
  }
  while (static_cast<int>(blocks.size()) < n) add_heis();

  std::vector<const FiniteGroup*> ptrs;
  for (const FiniteGroup& b : blocks) ptrs.push_back(&b);
  return central_product(ptrs, amalgam, size_cap);
}

ExtraspecialKind extraspecial_kind_from_string(const std::string& s, int p) {
  if (s == "D") return ExtraspecialKind::DType;
  if (s == "Q") return ExtraspecialKind::QType;
  if (s == "p") return ExtraspecialKind::ExponentP;
  if (s == "p2") return ExtraspecialKind::ExponentP2;
  fail(ErrorCode::ParameterViolation,
       "unknown extraspecial kind '" + s + "' (use D, Q for p = 2 and p, p2 for odd primes)");
  (void)p;
}

namespace {

// z-chain shared by the presentation emitters: a central cyclic <z> of order
// p^e refined into generators z, z^p, z^{p^2}, ...
struct CentralChain {
  std::vector<std::string> names;
  std::vector<long long> radices;   // all p
  std::vector<int> indices;         // presentation indices, filled by caller
};

CentralChain central_chain(int p, int e, const std::string& base) {
  CentralChain c;
  for (int l = 0; l < e; ++l) {
    c.names.push_back(l == 0 ? base : base + std::to_string(l));
    c.radices.push_back(p);
  }
  return c;
}

}  // namespace

PcPresentation pres_heisenberg_mod(int p, int e) {
  if (!prime_power_base(p) || *prime_power_base(p) != p)
    fail(ErrorCode::ParameterViolation, "p must be prime");
  if (e < 1) fail(ErrorCode::ParameterViolation, "need e >= 1");
  const long long q = ipow(p, e);
  CentralChain chain = central_chain(p, e, "z");

  PcPresentation pr;
  pr.prime = p;
  pr.names = {"x", "y"};
  pr.names.insert(pr.names.end(), chain.names.begin(), chain.names.end());
  for (int l = 0; l < e; ++l) chain.indices.push_back(2 + l);
  const int n = pr.num_generators();
  pr.relative_orders = {static_cast<int>(q), static_cast<int>(q)};
  for (int l = 0; l < e; ++l) pr.relative_orders.push_back(p);
  pr.power_words.assign(n, {});
  pr.comm_words.resize(n);
  for (int i = 0; i < n; ++i) pr.comm_words[i].assign(i, {});

  auto zpow = [&](long long a) { return chain_word(((a % q) + q) % q, chain.radices, chain.indices); };
  for (int l = 0; l + 1 < e; ++l) pr.power_words[2 + l] = zpow(ipow(p, l + 1));
  pr.comm_words[1][0] = zpow(q - 1);  // [y,x] = z^{-1}
  validate_presentation(pr);
  return pr;
}

PcPresentation pres_unitriangular(int p, int m) {
  if (p == 2) fail(ErrorCode::EvenPrime, "unitriangular family requires an odd prime");
  if (m < 1) fail(ErrorCode::ParameterViolation, "need m >= 1");
  GaloisField f = make_galois_field(p, m);

  PcPresentation pr;
  pr.prime = p;
  for (int i = 0; i < m; ++i) pr.names.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) pr.names.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) pr.names.push_back("c" + std::to_string(i + 1));
  const int n = 3 * m;
  pr.relative_orders.assign(n, p);
  pr.power_words.assign(n, {});
  pr.comm_words.resize(n);
  for (int i = 0; i < n; ++i) pr.comm_words[i].assign(i, {});

  // [b_j, a_i] = c-word of -(beta_i * beta_j) in the field, where beta_k is
  // the k-th power basis element.
  std::vector<long long> radices(m, p);
  std::vector<int> cidx;
  for (int k = 0; k < m; ++k) cidx.push_back(2 * m + k);
  int bi = 1;
  std::vector<int> basis;
  for (int k = 0; k < m; ++k) {
    basis.push_back(bi);
    bi *= p;
  }
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      pr.comm_words[m + j][i] = chain_word(f.neg(f.mul(basis[i], basis[j])), radices, cidx);
  validate_presentation(pr);
  return pr;
}

PcPresentation pres_extraspecial(int p, int n, ExtraspecialKind kind) {
  const bool odd = p != 2;
  if (odd && (kind == ExtraspecialKind::DType || kind == ExtraspecialKind::QType))
    fail(ErrorCode::ParameterViolation, "D/Q kinds are the p = 2 central products");
  if (!odd && (kind == ExtraspecialKind::ExponentP || kind == ExtraspecialKind::ExponentP2))
    fail(ErrorCode::ParameterViolation, "exponent kinds require an odd prime");
  if (n < 1) fail(ErrorCode::ParameterViolation, "need n >= 1");

  PcPresentation pr;
  pr.prime = p;
  for (int i = 0; i < n; ++i) {
    pr.names.push_back("a" + std::to_string(i + 1));
    pr.names.push_back("b" + std::to_string(i + 1));
  }
  pr.names.push_back("z");
  const int ngen = 2 * n + 1;
  pr.relative_orders.assign(ngen, p);
  pr.power_words.assign(ngen, {});
  pr.comm_words.resize(ngen);
  for (int i = 0; i < ngen; ++i) pr.comm_words[i].assign(i, {});

  const int zidx = 2 * n;
  for (int i = 0; i < n; ++i)
    pr.comm_words[2 * i + 1][2 * i] = nfw_letters({{zidx, p - 1}});  // [b_i, a_i] = z^{-1}
  if (kind == ExtraspecialKind::ExponentP2) pr.power_words[0] = nfw_letters({{zidx, 1}});
  if (kind == ExtraspecialKind::DType || kind == ExtraspecialKind::QType)
    for (int i = 0; i < n; ++i) pr.power_words[2 * i] = nfw_letters({{zidx, 1}});  // a_i^2 = z
  if (kind == ExtraspecialKind::QType) pr.power_words[1] = nfw_letters({{zidx, 1}});  // b_1^2 = z
  validate_presentation(pr);
  return pr;
}

PcPresentation pres_y_product(int p, int e, int m) {
  if (m < 1 || e < 1) fail(ErrorCode::ParameterViolation, "need m >= 1 and e >= 1");
  const long long q = ipow(p, e);
  CentralChain chain = central_chain(p, e, "z");

  PcPresentation pr;
  pr.prime = p;
  for (int i = 0; i < m; ++i) {
    pr.names.push_back("x" + std::to_string(i + 1));
    pr.names.push_back("y" + std::to_string(i + 1));
  }
  pr.names.insert(pr.names.end(), chain.names.begin(), chain.names.end());
  for (int l = 0; l < e; ++l) chain.indices.push_back(2 * m + l);
  const int ngen = 2 * m + e;
  pr.relative_orders.assign(ngen, p);
  for (int i = 0; i < 2 * m; ++i) pr.relative_orders[i] = static_cast<int>(q);
  pr.power_words.assign(ngen, {});
  pr.comm_words.resize(ngen);
  for (int i = 0; i < ngen; ++i) pr.comm_words[i].assign(i, {});

  auto zpow = [&](long long a) { return chain_word(((a % q) + q) % q, chain.radices, chain.indices); };
  for (int l = 0; l + 1 < e; ++l) pr.power_words[2 * m + l] = zpow(ipow(p, l + 1));
  for (int i = 0; i < m; ++i) pr.comm_words[2 * i + 1][2 * i] = zpow(q - 1);
  validate_presentation(pr);
  return pr;
}

FiniteGroup family_y_product(int p, int e, int m, int size_cap) {
  if (m < 1) fail(ErrorCode::ParameterViolation, "need m >= 1");
  std::vector<FiniteGroup> blocks;
  for (int i = 0; i < m; ++i) blocks.push_back(heisenberg_mod(p, e, size_cap));
  std::vector<const FiniteGroup*> ptrs;
  std::vector<int> amalgam;
  for (const FiniteGroup& b : blocks) {
    ptrs.push_back(&b);
    amalgam.push_back(1);
  }
  return central_product(ptrs, amalgam, size_cap);
}

}  // namespace pgroup

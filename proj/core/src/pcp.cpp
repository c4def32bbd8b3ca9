#include "pgroup/pcp.hpp"

#include <algorithm>
#include <deque>

namespace pgroup {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(long long v, int p) {
  if (v < p) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

void validate_word(const PcPresentation& p, const NormalFormWord& w, int min_index,
                   const std::string& where) {
  int last = min_index - 1;
  for (auto [gen, exp] : w.letters) {
    if (gen < 0 || gen >= p.num_generators())
      fail(ErrorCode::UnknownGenerator, where + ": generator index out of range");
    if (gen <= last)
      fail(ErrorCode::SyntaxError, where + ": word is not in normal form (indices must increase)");
    if (gen < min_index)
      fail(ErrorCode::SyntaxError, where + ": relation word uses a generator of too small index");
    if (exp < 1 || exp >= p.relative_orders[gen])
      fail(ErrorCode::ExponentOutOfRange, where + ": exponent outside [1, relative order)");
    last = gen;
  }
}

}  // namespace

void validate_presentation(const PcPresentation& p) {
  const int n = p.num_generators();
  if (!is_prime(p.prime)) fail(ErrorCode::SyntaxError, "prime field is not prime");
  if (n == 0) fail(ErrorCode::SyntaxError, "presentation has no generators");
  if (static_cast<int>(p.relative_orders.size()) != n ||
      static_cast<int>(p.power_words.size()) != n ||
      static_cast<int>(p.comm_words.size()) != n)
    fail(ErrorCode::SyntaxError, "presentation arrays have inconsistent sizes");
  for (int i = 0; i < n; ++i) {
    if (p.names[i].empty()) fail(ErrorCode::SyntaxError, "empty generator name");
    for (int j = i + 1; j < n; ++j)
      if (p.names[i] == p.names[j])
        fail(ErrorCode::DuplicateRelation, "duplicate generator name " + p.names[i]);
    if (!is_power_of(p.relative_orders[i], p.prime))
      fail(ErrorCode::ExponentOutOfRange,
           "relative order of " + p.names[i] + " is not a power of the prime");
    validate_word(p, p.power_words[i], i + 1, "power relation of " + p.names[i]);
    if (static_cast<int>(p.comm_words[i].size()) != i)
      fail(ErrorCode::SyntaxError, "commutator table has wrong shape");
    for (int j = 0; j < i; ++j)
      validate_word(p, p.comm_words[i][j], i + 1,
                    "commutator [" + p.names[i] + "," + p.names[j] + "]");
  }
}

namespace {

struct Letter {
  int gen;
  long long exp;
};

// Collection from the left: repeatedly fix the leftmost violation, either an
// exponent at or above the relative order (rewrite with the power relation)
// or a descending adjacent generator pair (swap via g_j g_i = g_i g_j [g_j,g_i]).
class Collector {
 public:
  Collector(const PcPresentation& p, long long step_cap) : p_(p), step_cap_(step_cap) {}

  std::vector<int> collect(std::deque<Letter> word) const {
    long long steps = 0;
    for (;;) {
      if (++steps > step_cap_)
        fail(ErrorCode::InconsistentPresentation, "collection exceeded the step cap");
      // merge adjacent letters with equal generator
      for (size_t k = 0; k + 1 < word.size();) {
        if (word[k].gen == word[k + 1].gen) {
          word[k].exp += word[k + 1].exp;
          word.erase(word.begin() + static_cast<long>(k) + 1);
        } else {
          ++k;
        }
      }
      size_t fix = word.size();
      bool power = false;
      for (size_t k = 0; k < word.size(); ++k) {
        if (word[k].exp >= p_.relative_orders[word[k].gen]) {
          fix = k;
          power = true;
          break;
        }
        if (k + 1 < word.size() && word[k].gen > word[k + 1].gen) {
          fix = k;
          break;
        }
      }
      if (fix == word.size()) break;
      if (power) {
        const int g = word[fix].gen;
        word[fix].exp -= p_.relative_orders[g];
        const NormalFormWord& w = p_.power_words[g];
        auto pos = word.begin() + static_cast<long>(fix) + 1;
        if (word[fix].exp == 0) {
          pos = word.erase(word.begin() + static_cast<long>(fix));
        }
        std::deque<Letter> tail;
        for (auto [gen, exp] : w.letters) tail.push_back({gen, exp});
        word.insert(pos, tail.begin(), tail.end());
      } else {
        const Letter a = word[fix];      // g_j^a
        const Letter b = word[fix + 1];  // g_i^b
        const NormalFormWord& c = p_.commutator_word(a.gen, b.gen);
        std::deque<Letter> repl;
        if (a.exp > 1) repl.push_back({a.gen, a.exp - 1});
        repl.push_back({b.gen, 1});
        repl.push_back({a.gen, 1});
        for (auto [gen, exp] : c.letters) repl.push_back({gen, exp});
        if (b.exp > 1) repl.push_back({b.gen, b.exp - 1});
        word.erase(word.begin() + static_cast<long>(fix), word.begin() + static_cast<long>(fix) + 2);
        word.insert(word.begin() + static_cast<long>(fix), repl.begin(), repl.end());
      }
    }
    std::vector<int> exps(p_.num_generators(), 0);
    for (const Letter& l : word) exps[l.gen] = static_cast<int>(l.exp);
    return exps;
  }

 private:
  const PcPresentation& p_;
  long long step_cap_;
};

std::string word_label(const PcPresentation& p, const std::vector<int>& exps) {
  std::string s;
  for (int i = 0; i < p.num_generators(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += p.names[i];
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

FiniteGroup realize(const PcPresentation& p, const RealizeOptions& opts) {
  validate_presentation(p);
  const int n = p.num_generators();
  long long order = 1;
  for (int q : p.relative_orders) {
    order *= q;
    if (order > opts.size_cap)
      fail(ErrorCode::SizeCapExceeded, "presented group exceeds the size cap of " +
                                           std::to_string(opts.size_cap));
  }

  // Element index <-> exponent vector, index 0 = identity, last generator
  // varies fastest.
  std::vector<long long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * p.relative_orders[i + 1];
  auto index_of = [&](const std::vector<int>& exps) {
    long long idx = 0;
    for (int i = 0; i < n; ++i) idx += exps[i] * stride[i];
    return static_cast<int>(idx);
  };
  auto exps_of = [&](int idx) {
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) {
      exps[i] = static_cast<int>(idx / stride[i]);
      idx = static_cast<int>(idx % stride[i]);
    }
    return exps;
  };

  Collector coll(p, opts.collect_step_cap);

  // Right multiplication by each generator, by collection.
  const int N = static_cast<int>(order);
  std::vector<std::vector<int>> rmul(n, std::vector<int>(N));
  for (int x = 0; x < N; ++x) {
    const std::vector<int> exps = exps_of(x);
    for (int i = 0; i < n; ++i) {
      std::deque<Letter> word;
      for (int k = 0; k < n; ++k)
        if (exps[k] > 0) word.push_back({k, exps[k]});
      word.push_back({i, 1});
      rmul[i][x] = index_of(coll.collect(std::move(word)));
    }
  }

  FiniteGroup g;
  g.order = N;
  g.identity = 0;
  g.mul.resize(static_cast<size_t>(N) * N);
  // mul[x][y] for y in index order: strip the last letter of y.
  for (int x = 0; x < N; ++x) g.mul[static_cast<size_t>(x) * N] = x;
  for (int y = 1; y < N; ++y) {
    const std::vector<int> exps = exps_of(y);
    int last = n - 1;
    while (exps[last] == 0) --last;
    const int yprev = y - static_cast<int>(stride[last]);
    for (int x = 0; x < N; ++x)
      g.mul[static_cast<size_t>(x) * N + y] = rmul[last][g.at(x, yprev)];
  }

  g.inv.assign(N, -1);
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y)
      if (g.at(x, y) == 0) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0) fail(ErrorCode::InconsistentPresentation, "element without inverse");
  }

  g.labels.resize(N);
  for (int x = 0; x < N; ++x) g.labels[x] = word_label(p, exps_of(x));
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    g.generators.push_back(index_of(e));
  }
  g.prime = p.prime;

  try {
    validate(g);
  } catch (const Error& err) {
    fail(ErrorCode::InconsistentPresentation,
         std::string("realized table failed validation (") + err.what() + ")");
  }
  return g;
}

}  // namespace pgroup

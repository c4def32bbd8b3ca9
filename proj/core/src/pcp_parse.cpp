#include <cctype>
#include <map>
#include <sstream>

#include "pgroup/pcp.hpp"

namespace pgroup {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;
};

[[noreturn]] void parse_fail(ErrorCode code, const Cursor& c, const std::string& msg) {
  fail(code, msg + " (line " + std::to_string(c.line) + ", col " + std::to_string(c.col) + ")");
}

struct Token {
  std::string text;
  int line;
  int col;
};

// Line-oriented tokenizer; '#' starts a comment to end of line.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> cur;
  int line = 1, col = 1;
  size_t i = 0;
  auto flush = [&]() {
    if (!cur.empty()) lines.push_back(std::move(cur));
    cur.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      flush();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    const int start_col = col;
    std::string tok;
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        tok += text[i++];
        ++col;
      }
    } else {
      tok += text[i++];
      ++col;
    }
    cur.push_back({tok, line, start_col});
  }
  flush();
  return lines;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_name(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class LineParser {
 public:
  LineParser(const std::vector<Token>& toks) : toks_(toks) {}

  const Token& peek() const {
    if (idx_ >= toks_.size()) {
      static Token eol{"<end of line>", 0, 0};
      eol.line = toks_.empty() ? 0 : toks_.back().line;
      eol.col = toks_.empty() ? 0 : toks_.back().col + static_cast<int>(toks_.back().text.size());
      return eol;
    }
    return toks_[idx_];
  }
  bool done() const { return idx_ >= toks_.size(); }
  Token next() {
    const Token& t = peek();
    ++idx_;
    return t;
  }
  void expect(const std::string& lit) {
    const Token t = next();
    if (t.text != lit)
      fail(ErrorCode::SyntaxError, "expected '" + lit + "', found '" + t.text + "' (line " +
                                       std::to_string(t.line) + ", col " + std::to_string(t.col) +
                                       ")");
  }

 private:
  const std::vector<Token>& toks_;
  size_t idx_ = 0;
};

int lookup(const std::map<std::string, int>& names, const Token& t) {
  auto it = names.find(t.text);
  if (it == names.end())
    fail(ErrorCode::UnknownGenerator, "unknown generator '" + t.text + "' (line " +
                                          std::to_string(t.line) + ", col " +
                                          std::to_string(t.col) + ")");
  return it->second;
}

NormalFormWord parse_word(LineParser& lp, const std::map<std::string, int>& names) {
  NormalFormWord w;
  if (lp.peek().text == "1") {
    lp.next();
    if (!lp.done())
      fail(ErrorCode::SyntaxError, "unexpected token after '1' (line " +
                                       std::to_string(lp.peek().line) + ", col " +
                                       std::to_string(lp.peek().col) + ")");
    return w;
  }
  for (;;) {
    const Token name = lp.next();
    if (!is_name(name.text))
      fail(ErrorCode::SyntaxError, "expected a generator name, found '" + name.text + "' (line " +
                                       std::to_string(name.line) + ", col " +
                                       std::to_string(name.col) + ")");
    const int gen = lookup(names, name);
    int exp = 1;
    if (!lp.done() && lp.peek().text == "^") {
      lp.next();
      const Token e = lp.next();
      if (!is_number(e.text))
        fail(ErrorCode::SyntaxError, "expected an exponent, found '" + e.text + "' (line " +
                                         std::to_string(e.line) + ", col " +
                                         std::to_string(e.col) + ")");
      exp = std::stoi(e.text);
      if (exp < 1)
        fail(ErrorCode::ExponentOutOfRange, "exponents must be positive (line " +
                                                std::to_string(e.line) + ", col " +
                                                std::to_string(e.col) + ")");
    }
    w.letters.push_back({gen, exp});
    if (lp.done()) break;
    lp.expect("*");
  }
  return w;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) fail(ErrorCode::SyntaxError, "empty presentation");

  PcPresentation p;
  std::map<std::string, int> names;
  size_t li = 0;

  {
    LineParser lp(lines[li]);
    lp.expect("p");
    const Token t = lp.next();
    if (!is_number(t.text))
      fail(ErrorCode::SyntaxError, "expected a prime after 'p' (line " + std::to_string(t.line) +
                                       ", col " + std::to_string(t.col) + ")");
    p.prime = std::stoi(t.text);
    if (!lp.done())
      fail(ErrorCode::SyntaxError, "trailing tokens on the 'p' line (line " +
                                       std::to_string(lp.peek().line) + ")");
    ++li;
  }
  if (li >= lines.size()) fail(ErrorCode::SyntaxError, "missing 'gens' line");
  {
    LineParser lp(lines[li]);
    lp.expect("gens");
    while (!lp.done()) {
      const Token t = lp.next();
      if (!is_name(t.text))
        fail(ErrorCode::SyntaxError, "invalid generator name '" + t.text + "' (line " +
                                         std::to_string(t.line) + ", col " +
                                         std::to_string(t.col) + ")");
      if (names.count(t.text))
        fail(ErrorCode::DuplicateRelation, "generator '" + t.text + "' declared twice (line " +
                                               std::to_string(t.line) + ")");
      names[t.text] = static_cast<int>(p.names.size());
      p.names.push_back(t.text);
    }
    if (p.names.empty()) fail(ErrorCode::SyntaxError, "no generators declared");
    ++li;
  }

  const int n = p.num_generators();
  p.relative_orders.assign(n, 0);
  p.power_words.assign(n, {});
  p.comm_words.resize(n);
  for (int i = 0; i < n; ++i) p.comm_words[i].assign(i, {});
  std::vector<char> have_ord(n, 0), have_pow(n, 0);
  std::vector<std::vector<char>> have_comm(n);
  for (int i = 0; i < n; ++i) have_comm[i].assign(i, 0);

  for (; li < lines.size(); ++li) {
    LineParser lp(lines[li]);
    const Token kw = lp.next();
    if (kw.text == "ord") {
      const Token name = lp.next();
      const int g = lookup(names, name);
      if (have_ord[g])
        fail(ErrorCode::DuplicateRelation, "relative order of '" + name.text +
                                               "' given twice (line " + std::to_string(name.line) +
                                               ")");
      const Token v = lp.next();
      if (!is_number(v.text))
        fail(ErrorCode::SyntaxError, "expected a number after 'ord " + name.text + "' (line " +
                                         std::to_string(v.line) + ", col " +
                                         std::to_string(v.col) + ")");
      p.relative_orders[g] = std::stoi(v.text);
      have_ord[g] = 1;
      if (!lp.done())
        fail(ErrorCode::SyntaxError, "trailing tokens on 'ord' line (line " +
                                         std::to_string(kw.line) + ")");
    } else if (kw.text == "pow") {
      const Token name = lp.next();
      const int g = lookup(names, name);
      if (have_pow[g])
        fail(ErrorCode::DuplicateRelation, "power relation of '" + name.text +
                                               "' given twice (line " + std::to_string(name.line) +
                                               ")");
      lp.expect("=");
      p.power_words[g] = parse_word(lp, names);
      have_pow[g] = 1;
    } else if (kw.text == "comm") {
      lp.expect("[");
      const Token a = lp.next();
      const int gj = lookup(names, a);
      lp.expect(",");
      const Token b = lp.next();
      const int gi = lookup(names, b);
      lp.expect("]");
      if (gj <= gi)
        fail(ErrorCode::SyntaxError, "commutator [" + a.text + "," + b.text +
                                         "] must list the later generator first (line " +
                                         std::to_string(a.line) + ")");
      if (have_comm[gj][gi])
        fail(ErrorCode::DuplicateRelation, "commutator [" + a.text + "," + b.text +
                                               "] given twice (line " + std::to_string(a.line) +
                                               ")");
      lp.expect("=");
      p.comm_words[gj][gi] = parse_word(lp, names);
      have_comm[gj][gi] = 1;
    } else {
      fail(ErrorCode::SyntaxError, "unknown directive '" + kw.text + "' (line " +
                                       std::to_string(kw.line) + ", col " +
                                       std::to_string(kw.col) + ")");
    }
  }

  for (int i = 0; i < n; ++i)
    if (!have_ord[i])
      fail(ErrorCode::SyntaxError, "missing 'ord' line for generator '" + p.names[i] + "'");

  validate_presentation(p);
  return p;
}

namespace {

std::string render_word(const PcPresentation& p, const NormalFormWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto [gen, exp] : w.letters) {
    if (!s.empty()) s += "*";
    s += p.names[gen];
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s;
}

}  // namespace

std::string render_presentation(const PcPresentation& p) {
  std::ostringstream out;
  out << "p " << p.prime << "\n";
  out << "gens";
  for (const std::string& n : p.names) out << " " << n;
  out << "\n";
  for (int i = 0; i < p.num_generators(); ++i)
    out << "ord " << p.names[i] << " " << p.relative_orders[i] << "\n";
  for (int i = 0; i < p.num_generators(); ++i)
    if (!p.power_words[i].empty())
      out << "pow " << p.names[i] << " = " << render_word(p, p.power_words[i]) << "\n";
  for (int j = 0; j < p.num_generators(); ++j)
    for (int i = 0; i < j; ++i)
      if (!p.comm_words[j][i].empty())
        out << "comm [" << p.names[j] << "," << p.names[i]
            << "] = " << render_word(p, p.comm_words[j][i]) << "\n";
  return out.str();
}

}  // namespace pgroup

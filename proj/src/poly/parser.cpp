#include "dpv/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace dpv {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

struct Token {
  enum Kind { number, ident, op, end } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i))});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::op, std::string(1, c)});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::end, ""});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, const Ring& ring, const NamedPolys* named)
      : toks_(std::move(tokens)), ring_(ring), named_(named) {}

  Polynomial parse() {
    Polynomial r = sum();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg); }

  void check_no_implicit_product() const {
    const Token& t = peek();
    if (t.kind == Token::number || t.kind == Token::ident || (t.kind == Token::op && t.text == "("))
      fail("implicit multiplication before '" + t.text + "' (write '*')");
  }

  Polynomial sum() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    Polynomial t = product();
    acc = negate ? -t : t;
    while (true) {
      if (accept("+"))
        acc = acc + product();
      else if (accept("-"))
        acc = acc - product();
      else
        return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      if (accept("*")) {
        acc = acc * power();
      } else if (accept("/")) {
        Polynomial d = power();
        if (!d.is_constant()) fail("division by a polynomial in geometric variables");
        if (d.is_zero()) fail("division by zero");
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        check_no_implicit_product();
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept("^")) {
      if (peek().kind != Token::number) fail("exponent must be a non-negative integer");
      long long e = parse_int(toks_[pos_++].text);
      if (e > 0xFFFF) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = peek();
    if (t.kind == Token::number) {
      ++pos_;
      return Polynomial::constant(ring_, parse_int(t.text) % static_cast<long long>(ring_->prime()));
    }
    if (t.kind == Token::ident) {
      ++pos_;
      if (ring_->var_index(t.text)) return Polynomial::variable(ring_, t.text);
      if (ring_->param_index(t.text)) return Polynomial::parameter(ring_, t.text);
      if (named_) {
        auto it = named_->find(t.text);
        if (it != named_->end()) return embed(it->second, ring_);
      }
      fail("unknown identifier '" + t.text + "'");
    }
    if (accept("(")) {
      Polynomial r = sum();
      if (!accept(")")) fail("missing ')'");
      return r;
    }
    if (t.kind == Token::end) fail("unexpected end of expression");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ring& ring_;
  const NamedPolys* named_;
};

}  // namespace

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(strip_comment(line))};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

Ring parse_ring(std::string_view line) {
  auto words = split_words(line);
  if (words.empty() || words[0] != "ring") throw ParseError("expected 'ring' declaration");
  std::uint32_t p = 0;
  std::vector<std::string> vars, params;
  std::vector<std::vector<int>> weights;
  enum { none, geom, par } section = none;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w.rfind("p=", 0) == 0) {
      long long v = parse_int(std::string_view(w).substr(2));
      if (v <= 0) throw ParseError("characteristic must be positive");
      p = static_cast<std::uint32_t>(v);
    } else if (w == "geom") {
      section = geom;
    } else if (w == "params") {
      section = par;
    } else if (section == geom) {
      auto colon = w.find(':');
      std::string name = w.substr(0, colon);
      std::vector<int> wt;
      if (colon == std::string::npos) {
        wt.push_back(1);
      } else {
        std::string_view rest = std::string_view(w).substr(colon + 1);
        while (true) {
          auto comma = rest.find(',');
          wt.push_back(static_cast<int>(parse_int(rest.substr(0, comma))));
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      }
      if (name.empty() || !ident_start(name[0])) throw ParseError("bad variable name '" + name + "'");
      vars.push_back(std::move(name));
      weights.push_back(std::move(wt));
    } else if (section == par) {
      if (!ident_start(w[0])) throw ParseError("bad parameter name '" + w + "'");
      params.push_back(w);
    } else {
      throw ParseError("unexpected '" + w + "' in ring declaration");
    }
  }
  if (p == 0) throw ParseError("ring declaration needs p=<prime>");
  try {
    return RingContext::make(p, std::move(vars), std::move(weights), std::move(params));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring, const NamedPolys* named) {
  ExprParser parser(tokenize(text), ring, named);
  return parser.parse();
}

std::vector<std::pair<std::string, Polynomial>> parse_poly_lines(std::string_view text, const Ring& ring) {
  std::vector<std::pair<std::string, Polynomial>> out;
  NamedPolys named;
  std::size_t lineno = 0;
  std::istringstream is{std::string(text)};
  std::string raw;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = strip_comment(raw);
    if (line.empty() || line.rfind("ring", 0) == 0) continue;
    try {
      std::string name;
      std::string_view expr = line;
      if (line.rfind("poly", 0) == 0 && line.size() > 4 && std::isspace(static_cast<unsigned char>(line[4]))) {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'poly <name> = <expr>'");
        name = std::string(trim(line.substr(4, eq - 4)));
        if (name.empty() || !ident_start(name[0])) throw ParseError("bad polynomial name");
        expr = line.substr(eq + 1);
      } else {
        name = "g" + std::to_string(out.size() + 1);
      }
      Polynomial f = parse_polynomial(expr, ring, &named);
      named.insert_or_assign(name, f);
      out.emplace_back(name, std::move(f));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

PolyDocument parse_document(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    try {
      Ring ring = parse_ring(line);
      return PolyDocument{ring, parse_poly_lines(text, ring)};
    } catch (const ParseError& e) {
      if (e.line()) throw;
      throw ParseError(e.what(), lineno);
    }
  }
  throw ParseError("missing ring declaration");
}

}  // namespace dpv

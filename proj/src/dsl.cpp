#include "asymprime/dsl.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>

namespace asymprime::dsl {

namespace {

enum class Tok { ident, integer, semicolon, equals, comma, lparen, rparen, star, caret, invalid, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string count(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier '" + t.text + "'";
    case Tok::integer: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      if (digits.size() > 9) throw ParseError(start.line, start.column, "integer literal too large");
      out.push_back({Tok::integer, std::move(digits), start});
      advance(j - i);
      continue;
    }
    Tok kind = Tok::invalid;
    switch (c) {
      case ';': kind = Tok::semicolon; break;
      case '=': kind = Tok::equals; break;
      case ',': kind = Tok::comma; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      default: break;
    }
    if (kind == Tok::invalid) {
      // Report a whole UTF-8 sequence, not a lone lead byte.
      std::size_t j = i + 1;
      while (c >= 0x80 && j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
      throw ParseError(start.line, start.column,
                       "unexpected character '" + std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), start});
    advance(1);
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SourceProgram program() {
    SourceProgram p;
    p.ring_pos = peek().pos;
    keyword("ring");
    if (peek().kind != Tok::ident) fail(peek(), "expected a variable name after 'ring'");
    while (peek().kind == Tok::ident) {
      const Token& t = next();
      if (!variables_.insert(t.text).second) fail(t, "duplicate ring variable '" + t.text + "'");
      p.ring.push_back(t.text);
    }
    expect(Tok::semicolon, "expected ';' after the ring variables");

    bool analyzed = false;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind != Tok::ident) fail(t, "expected a statement, found " + describe(t));
      if (t.text == "ideal") {
        p.statements.emplace_back(ideal_stmt());
      } else if (t.text == "module") {
        p.statements.emplace_back(module_stmt());
      } else if (t.text == "filtration") {
        p.statements.emplace_back(filtration_stmt());
      } else if (t.text == "analyze") {
        p.statements.emplace_back(analyze_stmt());
        analyzed = true;
      } else {
        fail(t, "unknown statement '" + t.text + "'");
      }
    }
    if (!analyzed) fail(peek(), "program has no 'analyze' statement");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& reason) const {
    throw ParseError(t.pos.line, t.pos.column, reason);
  }

  const Token& expect(Tok kind, const std::string& reason) {
    if (peek().kind != kind) fail(peek(), reason + ", found " + describe(peek()));
    return next();
  }

  const Token& keyword(const std::string& word) {
    if (peek().kind != Tok::ident || peek().text != word) {
      fail(peek(), "expected '" + word + "', found " + describe(peek()));
    }
    return next();
  }

  std::string fresh_name(const std::string& what) {
    const Token& t = expect(Tok::ident, "expected " + what + " name");
    if (ideals_.count(t.text) || filtrations_.count(t.text)) {
      fail(t, "'" + t.text + "' is already bound");
    }
    return t.text;
  }

  std::string bound_ideal() {
    const Token& t = expect(Tok::ident, "expected an ideal name");
    if (!ideals_.count(t.text)) fail(t, "undefined ideal '" + t.text + "'");
    return t.text;
  }

  std::uint32_t integer(const std::string& reason) {
    const Token& t = expect(Tok::integer, reason);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  Gens gens() {
    Gens g;
    if (peek().kind == Tok::integer) {
      const Token& t = next();
      if (t.text != "0") fail(t, "the only numeric generator list is '0'");
      g.zero = true;
      return g;
    }
    g.monos.push_back(mono());
    while (peek().kind == Tok::comma) {
      next();
      g.monos.push_back(mono());
    }
    return g;
  }

  Mono mono() {
    Mono m;
    m.factors.push_back(factor());
    while (peek().kind == Tok::star) {
      next();
      m.factors.push_back(factor());
    }
    return m;
  }

  Factor factor() {
    const Token& t = expect(Tok::ident, "expected a variable");
    if (!variables_.count(t.text)) fail(t, "unknown variable '" + t.text + "'");
    Factor f{t.text, 1, t.pos};
    if (peek().kind == Tok::caret) {
      next();
      f.exponent = integer("expected a nonnegative integer exponent after '^'");
    }
    return f;
  }

  IdealStmt ideal_stmt() {
    IdealStmt s;
    s.pos = keyword("ideal").pos;
    s.name = fresh_name("an ideal");
    expect(Tok::equals, "expected '=' after the ideal name");
    s.gens = gens();
    expect(Tok::semicolon, "expected ';' after the generators");
    ideals_.insert(s.name);
    return s;
  }

  ModuleStmt module_stmt() {
    ModuleStmt s;
    s.pos = keyword("module").pos;
    if (have_module_) fail(peek(), "module N is already declared");
    const Token& n = expect(Tok::ident, "expected 'N' after 'module'");
    if (n.text != "N") fail(n, "the base module is always named 'N'");
    expect(Tok::equals, "expected '=' after 'N'");
    s.gens = gens();
    expect(Tok::semicolon, "expected ';' after the generators");
    have_module_ = true;
    return s;
  }

  Filt filt() {
    const Token& t = expect(Tok::ident, "expected a filtration expression");
    Filt f;
    f.pos = t.pos;
    const std::string word = t.text;
    if (word == "trivial") {
      f.kind = Filt::Kind::trivial;
      return f;
    }
    static const std::map<std::string, Filt::Kind> kinds = {
        {"powers", Filt::Kind::powers},
        {"saturation", Filt::Kind::saturation},
        {"closure", Filt::Kind::closure},
        {"intersect_powers", Filt::Kind::intersect_powers},
        {"product", Filt::Kind::product},
    };
    auto it = kinds.find(word);
    if (it == kinds.end()) fail(t, "unknown filtration '" + word + "'");
    f.kind = it->second;
    expect(Tok::lparen, "expected '(' after '" + word + "'");
    if (f.kind == Filt::Kind::product) {
      f.children.push_back(filt());
      do {
        expect(Tok::comma, "product needs at least two factors: expected ','");
        f.children.push_back(filt());
      } while (peek().kind == Tok::comma);
      for (const auto& c : f.children) {
        if (filtration_dim(c, 1) != 1) {
          throw ParseError(c.pos.line, c.pos.column,
                           "dimension mismatch: product factors must be one-dimensional");
        }
      }
    } else {
      f.args.push_back(bound_ideal());
      if (f.kind == Filt::Kind::saturation) {
        expect(Tok::comma, "saturation takes two ideals: expected ','");
        f.args.push_back(bound_ideal());
      } else if (f.kind == Filt::Kind::intersect_powers) {
        do {
          expect(Tok::comma, "intersect_powers needs at least two ideals: expected ','");
          f.args.push_back(bound_ideal());
        } while (peek().kind == Tok::comma);
      }
    }
    expect(Tok::rparen, "expected ')'");
    return f;
  }

  FiltrationStmt filtration_stmt() {
    FiltrationStmt s;
    s.pos = keyword("filtration").pos;
    s.name = fresh_name("a filtration");
    expect(Tok::equals, "expected '=' after the filtration name");
    s.filt = filt();
    expect(Tok::semicolon, "expected ';' after the filtration");
    filtrations_.emplace(s.name, s.filt);
    return s;
  }

  AnalyzeStmt analyze_stmt() {
    AnalyzeStmt s;
    s.pos = keyword("analyze").pos;
    const Token& f = expect(Tok::ident, "expected a filtration name after 'analyze'");
    auto it = filtrations_.find(f.text);
    if (it == filtrations_.end()) fail(f, "undefined filtration '" + f.text + "'");
    s.filtration = f.text;
    keyword("over");
    expect(Tok::lparen, "expected '(' before the ideal family");
    s.family.push_back(bound_ideal());
    while (peek().kind == Tok::comma) {
      next();
      s.family.push_back(bound_ideal());
    }
    expect(Tok::rparen, "expected ')' after the ideal family");
    const Token& g = keyword("grid");
    s.grid.push_back(integer("expected a grid bound"));
    while (peek().kind == Tok::comma) {
      next();
      s.grid.push_back(integer("expected a grid bound"));
    }
    const std::size_t d = s.family.size();
    if (s.grid.size() != d) {
      fail(g, "dimension mismatch: grid has " + count(s.grid.size(), "bound") + " for a family of " +
                  count(d, "ideal"));
    }
    const std::size_t fd = filtration_dim(it->second, d);
    if (fd != d) {
      fail(f, "dimension mismatch: filtration '" + f.text + "' has dimension " + std::to_string(fd) +
                  " but the family has " + count(d, "ideal"));
    }
    expect(Tok::semicolon, "expected ';' after the grid");
    return s;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> variables_;
  std::set<std::string> ideals_;
  std::map<std::string, Filt> filtrations_;
  bool have_module_ = false;
};

std::string print_gens(const Gens& g) {
  if (g.zero) return "0";
  std::string out;
  for (std::size_t i = 0; i < g.monos.size(); ++i) {
    if (i > 0) out += ", ";
    for (std::size_t j = 0; j < g.monos[i].factors.size(); ++j) {
      const auto& f = g.monos[i].factors[j];
      if (j > 0) out += '*';
      out += f.variable;
      if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
  }
  return out;
}

std::string print_filt(const Filt& f) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  switch (f.kind) {
    case Filt::Kind::trivial: return "trivial";
    case Filt::Kind::powers: return "powers(" + join(f.args) + ")";
    case Filt::Kind::saturation: return "saturation(" + join(f.args) + ")";
    case Filt::Kind::closure: return "closure(" + join(f.args) + ")";
    case Filt::Kind::intersect_powers: return "intersect_powers(" + join(f.args) + ")";
    case Filt::Kind::product: {
      std::vector<std::string> parts;
      for (const auto& c : f.children) parts.push_back(print_filt(c));
      return "product(" + join(parts) + ")";
    }
  }
  return "";
}

}  // namespace

std::size_t filtration_dim(const Filt& f, std::size_t context_dim) {
  switch (f.kind) {
    case Filt::Kind::trivial: return context_dim;
    case Filt::Kind::product: return f.children.size();
    default: return 1;
  }
}

SourceProgram parse(std::string_view text) { return Parser(lex(text)).program(); }

std::string pretty_print(const SourceProgram& program) {
  std::string out = "ring";
  for (const auto& v : program.ring) out += " " + v;
  out += ";\n";
  for (const auto& st : program.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, IdealStmt>) {
            out += "ideal " + s.name + " = " + print_gens(s.gens) + ";\n";
          } else if constexpr (std::is_same_v<T, ModuleStmt>) {
            out += "module N = " + print_gens(s.gens) + ";\n";
          } else if constexpr (std::is_same_v<T, FiltrationStmt>) {
            out += "filtration " + s.name + " = " + print_filt(s.filt) + ";\n";
          } else {
            out += "analyze " + s.filtration + " over (";
            for (std::size_t i = 0; i < s.family.size(); ++i) out += (i ? ", " : "") + s.family[i];
            out += ") grid ";
            for (std::size_t i = 0; i < s.grid.size(); ++i) {
              out += (i ? "," : "") + std::to_string(s.grid[i]);
            }
            out += ";\n";
          }
        },
        st);
  }
  return out;
}

}  // namespace asymprime::dsl

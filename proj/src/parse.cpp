#include "openpi/parse.hpp"

#include <cctype>

namespace openpi {

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : std::runtime_error([&] {
        std::string m = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) m += i + 1 == expected.size() ? " or " : ", ";
          m += expected[i];
        }
        return m + ", found " + found;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident, Zero, Dot, Bang, LParen, RParen, LBrack, RBrack, Eq, Bar, Plus, Lt, Gt,
  Or, And, Imp, Tilde, Tau, Nu, Tt, Ff, End
};

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "name";
    case Tok::Zero: return "'0'";
    case Tok::Dot: return "'.'";
    case Tok::Bang: return "'!'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Eq: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::Plus: return "'+'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Or: return "'\\/'";
    case Tok::And: return "'/\\'";
    case Tok::Imp: return "'=>'";
    case Tok::Tilde: return "'~'";
    case Tok::Tau: return "'tau'";
    case Tok::Nu: return "'nu'";
    case Tok::Tt: return "'tt'";
    case Tok::Ff: return "'ff'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l0 = line, c0 = col;
    auto emit = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l0, c0});
      advance(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      std::string w(s.substr(i, j - i));
      Tok k = w == "tau" ? Tok::Tau : w == "nu" ? Tok::Nu : w == "tt" ? Tok::Tt : w == "ff" ? Tok::Ff : Tok::Ident;
      emit(k, j - i);
      continue;
    }
    std::string_view rest = s.substr(i);
    if (rest.substr(0, 2) == "=>") { emit(Tok::Imp, 2); continue; }
    if (rest.substr(0, 2) == "\\/") { emit(Tok::Or, 2); continue; }
    if (rest.substr(0, 2) == "/\\") { emit(Tok::And, 2); continue; }
    switch (c) {
      case '0': emit(Tok::Zero, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '!': emit(Tok::Bang, 1); continue;
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '[': emit(Tok::LBrack, 1); continue;
      case ']': emit(Tok::RBrack, 1); continue;
      case '=': emit(Tok::Eq, 1); continue;
      case '|': emit(Tok::Bar, 1); continue;
      case '+': emit(Tok::Plus, 1); continue;
      case '<': emit(Tok::Lt, 1); continue;
      case '>': emit(Tok::Gt, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      default: throw ParseError(l0, c0, {"a token"}, std::string("'") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(lex(s)) {}

  Process whole_process() {
    Process p = sum();
    expect_end({Tok::Plus, Tok::Bar});
    return p;
  }

  Formula whole_formula() {
    Formula f = form();
    expect_end({Tok::Imp, Tok::Or, Tok::And});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(tok_text(t));
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(names), t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  Token expect(Tok k) {
    if (!at(k)) fail({k});
    return take();
  }

  Name name() { return Name(expect(Tok::Ident).text); }

  void expect_end(std::vector<Tok> continuations) {
    if (at(Tok::End)) return;
    continuations.push_back(Tok::End);
    fail(continuations);
  }

  // processes
  Process sum() {
    Process p = par();
    while (at(Tok::Plus)) {
      take();
      p = Process::sum(p, par());
    }
    return p;
  }

  Process par() {
    Process p = unary();
    while (at(Tok::Bar)) {
      take();
      p = Process::par(p, unary());
    }
    return p;
  }

  Process cont() {
    if (!at(Tok::Dot)) return Process::nil();
    take();
    return unary();
  }

  Process unary() {
    switch (peek().kind) {
      case Tok::Zero: take(); return Process::nil();
      case Tok::Tau: take(); return Process::tau(cont());
      case Tok::Ident: {
        Name a = name();
        if (at(Tok::Bang)) {
          take();
          Name b = name();
          return Process::out(a, b, cont());
        }
        if (at(Tok::LParen)) {
          take();
          Name x = name();
          expect(Tok::RParen);
          return Process::in(a, x, cont());
        }
        fail({Tok::Bang, Tok::LParen});
      }
      case Tok::LBrack: {
        take();
        Name x = name();
        expect(Tok::Eq);
        Name y = name();
        expect(Tok::RBrack);
        return Process::match(x, y, unary());
      }
      case Tok::Nu: {
        take();
        Name x = name();
        expect(Tok::Dot);
        return Process::nu(x, unary());
      }
      case Tok::LParen: {
        take();
        Process p = sum();
        if (!at(Tok::RParen)) fail({Tok::RParen, Tok::Plus, Tok::Bar});
        take();
        return p;
      }
      default: fail({Tok::Zero, Tok::Tau, Tok::Ident, Tok::LBrack, Tok::Nu, Tok::LParen});
    }
  }

  // formulae
  Formula form() {
    Formula f = disj();
    if (at(Tok::Imp)) {
      take();
      return Formula::imp(f, form());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (at(Tok::Or)) {
      take();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = funary();
    while (at(Tok::And)) {
      take();
      f = Formula::conj(f, funary());
    }
    return f;
  }

  Label modal(Tok close) {
    if (at(Tok::Tau)) {
      take();
      expect(close);
      return Label::tau();
    }
    if (!at(Tok::Ident)) fail({Tok::Tau, Tok::Ident});
    Name a = name();
    Label l;
    if (at(Tok::Bang)) {
      take();
      if (at(Tok::LParen)) {
        take();
        Name x = name();
        expect(Tok::RParen);
        l = Label::bound_out(a, x);
      } else if (at(Tok::Ident)) {
        l = Label::out(a, name());
      } else {
        fail({Tok::Ident, Tok::LParen});
      }
    } else if (at(Tok::LParen)) {
      take();
      Name x = name();
      expect(Tok::RParen);
      l = Label::in(a, x);
    } else {
      fail({Tok::Bang, Tok::LParen});
    }
    expect(close);
    return l;
  }

  Formula funary() {
    switch (peek().kind) {
      case Tok::Tilde: take(); return Formula::neg(funary());
      case Tok::Lt: {
        take();
        Label l = modal(Tok::Gt);
        return Formula::diam(l, funary());
      }
      case Tok::LBrack: {
        take();
        Label l = modal(Tok::RBrack);
        return Formula::box(l, funary());
      }
      case Tok::Tt: take(); return Formula::top();
      case Tok::Ff: take(); return Formula::bot();
      case Tok::Ident: {
        Name x = name();
        expect(Tok::Eq);
        return Formula::eq(x, name());
      }
      case Tok::LParen: {
        take();
        Formula f = form();
        if (!at(Tok::RParen)) fail({Tok::RParen, Tok::Imp, Tok::Or, Tok::And});
        take();
        return f;
      }
      default: fail({Tok::Tilde, Tok::Lt, Tok::LBrack, Tok::Tt, Tok::Ff, Tok::Ident, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum class Ctx { Top, SumL, SumR, ParL, ParR, Unary };

void print(std::string& out, const Process& p, Ctx ctx) {
  auto wrap = [&](bool parens, auto&& body) {
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (p.kind()) {
    case ProcessKind::Nil: out += '0'; return;
    case ProcessKind::Prefix:
      out += to_string(p.action());
      if (p.body().kind() != ProcessKind::Nil) {
        out += '.';
        print(out, p.body(), Ctx::Unary);
      }
      return;
    case ProcessKind::Match:
      out += '[' + p.name1().label() + '=' + p.name2().label() + ']';
      print(out, p.body(), Ctx::Unary);
      return;
    case ProcessKind::Nu:
      out += "nu " + p.name1().label() + ". ";
      print(out, p.body(), Ctx::Unary);
      return;
    case ProcessKind::Sum:
      wrap(ctx == Ctx::SumR || ctx == Ctx::ParL || ctx == Ctx::ParR || ctx == Ctx::Unary, [&] {
        print(out, p.left(), Ctx::SumL);
        out += " + ";
        print(out, p.right(), Ctx::SumR);
      });
      return;
    case ProcessKind::Par:
      wrap(ctx == Ctx::ParR || ctx == Ctx::Unary, [&] {
        print(out, p.left(), Ctx::ParL);
        out += " | ";
        print(out, p.right(), Ctx::ParR);
      });
      return;
  }
}

enum class FCtx { Top, ImpL, ImpR, OrL, OrR, AndL, AndR, Unary };

void print(std::string& out, const Formula& f, FCtx ctx) {
  auto wrap = [&](bool parens, auto&& body) {
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::Top: out += "tt"; return;
    case FormulaKind::Bot: out += "ff"; return;
    case FormulaKind::Eq:
      wrap(ctx != FCtx::Top && ctx != FCtx::ImpL && ctx != FCtx::ImpR,
           [&] { out += f.name1().label() + " = " + f.name2().label(); });
      return;
    case FormulaKind::Imp:
      if (f.is_negation()) {
        out += '~';
        print(out, f.left(), FCtx::Unary);
        return;
      }
      wrap(ctx != FCtx::Top && ctx != FCtx::ImpR, [&] {
        print(out, f.left(), FCtx::ImpL);
        out += " => ";
        print(out, f.right(), FCtx::ImpR);
      });
      return;
    case FormulaKind::Or:
      wrap(ctx == FCtx::OrR || ctx == FCtx::AndL || ctx == FCtx::AndR || ctx == FCtx::Unary, [&] {
        print(out, f.left(), FCtx::OrL);
        out += " \\/ ";
        print(out, f.right(), FCtx::OrR);
      });
      return;
    case FormulaKind::And:
      wrap(ctx == FCtx::AndR || ctx == FCtx::Unary, [&] {
        print(out, f.left(), FCtx::AndL);
        out += " /\\ ";
        print(out, f.right(), FCtx::AndR);
      });
      return;
    case FormulaKind::Diam:
    case FormulaKind::Box:
      out += f.kind() == FormulaKind::Diam ? '<' : '[';
      out += to_string(f.label());
      out += f.kind() == FormulaKind::Diam ? '>' : ']';
      print(out, f.body(), FCtx::Unary);
      return;
  }
}

}  // namespace

Process parse_process(std::string_view text) { return Parser(text).whole_process(); }
Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

std::string to_string(const Process& p) {
  std::string out;
  print(out, p, Ctx::Top);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print(out, f, FCtx::Top);
  return out;
}

std::string to_string(const Label& l) {
  switch (l.kind) {
    case LabelKind::Tau: return "tau";
    case LabelKind::Out: return l.channel.label() + "!" + l.object.label();
    case LabelKind::BoundOut: return l.channel.label() + "!(" + l.object.label() + ")";
    case LabelKind::In: return l.channel.label() + "(" + l.object.label() + ")";
  }
  return {};
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (auto& [a, b] : s.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += a.label() + "->" + b.label();
  }
  return out + "}";
}

}  // namespace openpi

#include "seplogic/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "seplogic/errors.hpp"

namespace seplogic {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Bar,
  Amp,
  Bang,
  Arrow,
  Equal,
  NotEqual,
  Exists,
  Forall,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      std::size_t line = line_;
      std::size_t column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back({Tok::End, "", line, column});
        return tokens;
      }
      tokens.push_back(next(line, column));
    }
  }

 private:
  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  Token next(std::size_t line, std::size_t column) {
    struct Fixed {
      std::string_view spelling;
      Tok kind;
    };
    static constexpr Fixed fixed[] = {
        {"->", Tok::Arrow},      {"!=", Tok::NotEqual}, {"→", Tok::Arrow},  {"≠", Tok::NotEqual},
        {"∀", Tok::Forall}, {"∃", Tok::Exists}, {"∧", Tok::Amp},  {"∨", Tok::Bar},
        {"¬", Tok::Bang},   {"(", Tok::LParen},    {")", Tok::RParen},      {"[", Tok::LBracket},
        {"]", Tok::RBracket},    {",", Tok::Comma},     {".", Tok::Dot},         {"|", Tok::Bar},
        {"&", Tok::Amp},         {"!", Tok::Bang},      {"=", Tok::Equal},
    };
    for (const auto& f : fixed) {
      if (starts_with(f.spelling)) {
        advance(f.spelling.size());
        return {f.kind, std::string(f.spelling), line, column};
      }
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        advance(1);
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "exists") return {Tok::Exists, word, line, column};
      if (word == "forall") return {Tok::Forall, word, line, column};
      return {Tok::Ident, word, line, column};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const Signature* signature) : tokens_(Lexer(text).run()), signature_(signature) {}

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()) + " after complete formula");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + " but found " + describe(peek()));
    return take();
  }

  Formula formula() {
    Formula lhs = disjunction_level();
    if (accept(Tok::Arrow)) return implication(lhs, formula());
    return lhs;
  }

  Formula disjunction_level() {
    Formula f = conjunction_level();
    while (accept(Tok::Bar)) f = disjunction(f, conjunction_level());
    return f;
  }

  Formula conjunction_level() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = conjunction(f, unary());
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Bang:
        take();
        return negation(unary());
      case Tok::Exists:
      case Tok::Forall: {
        bool universal = take().kind == Tok::Forall;
        Var v = expect(Tok::Ident, "a variable after the quantifier").text;
        accept(Tok::Dot);
        Formula body = formula();
        return universal ? forall(v, body) : exists(v, body);
      }
      case Tok::LParen: {
        take();
        Formula inner = formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return atom();
      case Tok::End:
        fail("expected a formula but found end of input");
      default:
        fail("expected a formula but found " + describe(peek()));
    }
  }

  Formula atom() {
    const Token& head = peek();
    if (head.text == "conn" && peek(1).kind == Tok::LParen) return conn_atom();
    if (head.text == "dp" && peek(1).kind == Tok::LBracket) return dp_atom();
    Token name = take();
    if (accept(Tok::Equal)) return eq(name.text, expect(Tok::Ident, "a variable").text);
    if (accept(Tok::NotEqual)) return neq(name.text, expect(Tok::Ident, "a variable").text);
    if (peek().kind != Tok::LParen) fail("expected '(', '=' or '!=' after " + describe(name));
    take();
    std::vector<Var> args;
    if (peek().kind != Tok::RParen) {
      do {
        args.push_back(expect(Tok::Ident, "a variable").text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')'");
    check_signature(name, args.size());
    return rel(name.text, std::move(args));
  }

  Formula conn_atom() {
    take();
    take();
    Var x = expect(Tok::Ident, "a variable").text;
    expect(Tok::Comma, "','");
    Var y = expect(Tok::Ident, "a variable").text;
    std::vector<Var> deleted;
    if (accept(Tok::Bar) && peek().kind == Tok::Ident) {
      do {
        deleted.push_back(expect(Tok::Ident, "a variable").text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')'");
    return conn(x, y, std::move(deleted));
  }

  Formula dp_atom() {
    take();
    take();
    std::vector<VarPair> pairs;
    do {
      expect(Tok::LParen, "'('");
      Var x = expect(Tok::Ident, "a variable").text;
      expect(Tok::Comma, "','");
      Var y = expect(Tok::Ident, "a variable").text;
      expect(Tok::RParen, "')'");
      pairs.emplace_back(std::move(x), std::move(y));
    } while (accept(Tok::Comma));
    expect(Tok::RBracket, "']'");
    return dp(std::move(pairs));
  }

  void check_signature(const Token& name, std::size_t arity) const {
    if (signature_ == nullptr) return;
    auto it = signature_->find(name.text);
    if (it == signature_->end()) {
      throw ParseError("unknown relation symbol " + name.text, name.line, name.column);
    }
    if (it->second != arity) {
      throw ParseError("relation " + name.text + " has arity " + std::to_string(it->second) + " but is applied to " +
                           std::to_string(arity) + " arguments",
                       name.line, name.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* signature_;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int precedence(const Formula& f) {
  return std::visit(overloaded{
                        [](const Quantified&) { return 0; },
                        [](const Binary& b) {
                          switch (b.op) {
                            case Connective::Implies:
                              return 1;
                            case Connective::Or:
                              return 2;
                            case Connective::And:
                              return 3;
                          }
                          return 1;
                        },
                        [](const Not&) { return 4; },
                        [](const auto&) { return 5; },
                    },
                    f.node());
}

void join(std::string& out, const std::vector<Var>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i];
  }
}

void print_to(std::string& out, const Formula& f);

void print_wrapped(std::string& out, const Formula& f, bool parens) {
  if (parens) out += '(';
  print_to(out, f);
  if (parens) out += ')';
}

void print_to(std::string& out, const Formula& f) {
  std::visit(overloaded{
                 [&](const Equals& e) { out += e.lhs + " = " + e.rhs; },
                 [&](const RelAtom& r) {
                   out += r.symbol + "(";
                   join(out, r.args);
                   out += ")";
                 },
                 [&](const ConnAtom& c) {
                   out += "conn(" + c.source + ", " + c.target + " |";
                   if (!c.deleted.empty()) out += ' ';
                   join(out, c.deleted);
                   out += ")";
                 },
                 [&](const DpAtom& d) {
                   out += "dp[";
                   for (std::size_t i = 0; i < d.pairs.size(); ++i) {
                     if (i) out += ", ";
                     out += "(" + d.pairs[i].first + ", " + d.pairs[i].second + ")";
                   }
                   out += "]";
                 },
                 [&](const Not& n) {
                   out += '!';
                   bool bare = n.operand.is<RelAtom>() || n.operand.is<ConnAtom>() || n.operand.is<DpAtom>() ||
                               n.operand.is<Not>();
                   print_wrapped(out, n.operand, !bare);
                 },
                 [&](const Binary& b) {
                   const int own = precedence(f);
                   const int left = precedence(b.lhs);
                   const int right = precedence(b.rhs);
                   const char* symbol = b.op == Connective::And ? " & " : b.op == Connective::Or ? " | " : " -> ";
                   if (b.op == Connective::Implies) {
                     print_wrapped(out, b.lhs, left <= own);
                     out += symbol;
                     print_wrapped(out, b.rhs, right < own);
                   } else {
                     print_wrapped(out, b.lhs, left < own);
                     out += symbol;
                     print_wrapped(out, b.rhs, right <= own);
                   }
                 },
                 [&](const Quantified& q) {
                   out += q.quantifier == Quantifier::Exists ? "exists " : "forall ";
                   out += q.var + ". ";
                   print_to(out, q.body);
                 },
             },
             f.node());
}

void check_shadowing(const Formula& f, std::set<Var>& scope, std::set<Var>& reported,
                     std::vector<std::string>& problems) {
  std::visit(overloaded{
                 [&](const Not& n) { check_shadowing(n.operand, scope, reported, problems); },
                 [&](const Binary& b) {
                   check_shadowing(b.lhs, scope, reported, problems);
                   check_shadowing(b.rhs, scope, reported, problems);
                 },
                 [&](const Quantified& q) {
                   bool fresh = scope.insert(q.var).second;
                   if (!fresh && reported.insert(q.var).second) {
                     problems.push_back("variable " + q.var + " is re-bound inside its own scope");
                   }
                   check_shadowing(q.body, scope, reported, problems);
                   if (fresh) scope.erase(q.var);
                 },
                 [](const auto&) {},
             },
             f.node());
}

std::vector<std::string> validate(const Formula& f, const Signature* signature) {
  std::vector<std::string> problems;
  auto free = free_variables(f);
  if (!free.empty()) {
    std::string list;
    for (const auto& v : free) list += (list.empty() ? "" : ", ") + v;
    problems.push_back("free variables: " + list);
  }
  std::map<std::string, std::set<std::size_t>> arities;
  for (const auto& [symbol, arity] : relation_uses(f)) arities[symbol].insert(arity);
  for (const auto& [symbol, used] : arities) {
    if (used.size() > 1) problems.push_back("relation " + symbol + " is used with inconsistent arities");
    if (signature == nullptr) continue;
    auto it = signature->find(symbol);
    if (it == signature->end()) {
      problems.push_back("relation " + symbol + " is not in the signature");
      continue;
    }
    for (std::size_t arity : used) {
      if (arity != it->second) {
        problems.push_back("relation " + symbol + " has arity " + std::to_string(it->second) + " but is used with " +
                           std::to_string(arity) + " arguments");
      }
    }
  }
  std::set<Var> scope;
  std::set<Var> reported;
  check_shadowing(f, scope, reported, problems);
  return problems;
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text, nullptr).run(); }

Formula parse(std::string_view text, const Signature& signature) { return Parser(text, &signature).run(); }

std::string print(const Formula& f) {
  std::string out;
  print_to(out, f);
  return out;
}

std::ostream& operator<<(std::ostream& out, const Formula& f) { return out << print(f); }

std::vector<std::string> validate_sentence(const Formula& f) { return validate(f, nullptr); }

std::vector<std::string> validate_sentence(const Formula& f, const Signature& signature) {
  return validate(f, &signature);
}

}  // namespace seplogic

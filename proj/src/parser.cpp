#include "regpow/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "regpow/integral_closure.hpp"
#include "regpow/stanley_reisner.hpp"

namespace regpow {

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
                       std::string detail)
    : Error([&] {
        std::ostringstream os;
        os << line << ':' << column << ": ";
        if (!detail.empty()) {
          os << detail;
        } else {
          os << "expected ";
          if (expected.size() > 1) os << "one of ";
          for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
          os << " but found " << found;
        }
        return os.str();
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

struct Token {
  enum class Type { word, variable, number, lparen, rparen, comma, star, caret, end };
  Type type = Type::end;
  std::string text;
  std::uint64_t value = 0;  // number value or variable index
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string describe(const Token& t) {
  switch (t.type) {
    case Token::Type::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ == text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.type = Token::Type::number;
        t.text = digits();
        t.value = to_uint(t);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) word += advance();
        if (word == "x" && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.type = Token::Type::variable;
          t.text = "x" + digits();
          Token num = t;
          num.text = t.text.substr(1);
          t.value = to_uint(num);
          if (t.value == 0)
            throw ParseError(t.line, t.column, {"variable index >= 1"}, describe(t),
                             "variable indices start at 1 (found x0)");
          if (t.value > max_parse_variables)
            throw ParseError(t.line, t.column, {"variable index <= 64"}, describe(t),
                             "variable index exceeds the supported maximum of " +
                                 std::to_string(max_parse_variables));
          // Reject trailing letters like x1y.
          if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(line_, column_, {"'*'", "','", "')'", "'^'"}, std::string("'") + text_[pos_] + "'");
        } else {
          t.type = Token::Type::word;
          t.text = word;
        }
      } else {
        switch (c) {
          case '(': t.type = Token::Type::lparen; break;
          case ')': t.type = Token::Type::rparen; break;
          case ',': t.type = Token::Type::comma; break;
          case '*': t.type = Token::Type::star; break;
          case '^': t.type = Token::Type::caret; break;
          default:
            throw ParseError(t.line, t.column, {"identifier", "number", "'('", "')'", "','", "'*'", "'^'"},
                             std::string("'") + c + "'", std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, advance());
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += advance();
    return s;
  }

  static std::uint64_t to_uint(const Token& t) {
    std::uint64_t v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > std::numeric_limits<Exponent>::max())
        throw ParseError(t.line, t.column, {"number below 2^32"}, "'" + t.text + "'",
                         "number " + t.text + " exceeds the 32-bit exponent range");
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const std::map<std::string, Expr::Kind>& keywords() {
  static const std::map<std::string, Expr::Kind> table = {
      {"ideal", Expr::Kind::ideal},         {"intersect", Expr::Kind::intersect},
      {"sum", Expr::Kind::sum},             {"product", Expr::Kind::product},
      {"power", Expr::Kind::power},         {"symbolic", Expr::Kind::symbolic},
      {"closure", Expr::Kind::closure},     {"sat", Expr::Kind::saturate},
      {"radical", Expr::Kind::radical},     {"arrangement", Expr::Kind::arrangement},
      {"ambient", Expr::Kind::ambient},
  };
  return table;
}

std::vector<std::string> keyword_list() {
  std::vector<std::string> out;
  for (const auto& [k, v] : keywords()) out.push_back("'" + k + "'");
  return out;
}

const char* keyword_of(Expr::Kind kind) {
  for (const auto& [k, v] : keywords())
    if (v == kind) return k.c_str();
  return "?";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expression();
    if (peek().type != Token::Type::end) fail({"end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type) fail({what});
    ++pos_;
  }

  unsigned number() {
    if (peek().type != Token::Type::number) fail({"unsigned integer"});
    return static_cast<unsigned>(take().value);
  }

  Expr expression() {
    if (peek().type != Token::Type::word) fail(keyword_list());
    const auto it = keywords().find(peek().text);
    if (it == keywords().end()) fail(keyword_list());
    take();
    Expr e;
    e.kind = it->second;
    expect(Token::Type::lparen, "'('");
    switch (e.kind) {
      case Expr::Kind::ideal:
        if (peek().type != Token::Type::rparen) {
          e.generators.push_back(monomial());
          while (peek().type == Token::Type::comma) {
            take();
            e.generators.push_back(monomial());
          }
        }
        break;
      case Expr::Kind::intersect:
        e.args.push_back(expression());
        expect(Token::Type::comma, "','");
        e.args.push_back(expression());
        while (peek().type == Token::Type::comma) {
          take();
          e.args.push_back(expression());
        }
        break;
      case Expr::Kind::sum:
      case Expr::Kind::product:
        e.args.push_back(expression());
        expect(Token::Type::comma, "','");
        e.args.push_back(expression());
        break;
      case Expr::Kind::power:
      case Expr::Kind::symbolic:
      case Expr::Kind::closure:
        e.args.push_back(expression());
        expect(Token::Type::comma, "','");
        e.params.push_back(number());
        break;
      case Expr::Kind::saturate:
      case Expr::Kind::radical:
        e.args.push_back(expression());
        break;
      case Expr::Kind::arrangement:
        e.params.push_back(number());
        expect(Token::Type::comma, "','");
        e.params.push_back(number());
        break;
      case Expr::Kind::ambient:
        e.params.push_back(number());
        if (e.params.front() == 0 || e.params.front() > max_parse_variables) {
          const Token& t = tokens_[pos_ - 1];
          throw ParseError(t.line, t.column, {"ambient size in 1..64"}, describe(t),
                           "ambient size must be between 1 and " + std::to_string(max_parse_variables));
        }
        expect(Token::Type::comma, "','");
        e.args.push_back(expression());
        break;
    }
    if (peek().type != Token::Type::rparen) {
      if (e.kind == Expr::Kind::ideal) fail({"','", "')'"});
      if (e.kind == Expr::Kind::intersect) fail({"','", "')'"});
      fail({"')'"});
    }
    take();
    return e;
  }

  SparseMonomial monomial() {
    if (peek().type == Token::Type::number) {
      if (peek().value != 1) fail({"variable", "'1'"});
      take();
      return {};
    }
    std::map<std::size_t, Exponent> acc;
    term(acc);
    while (peek().type == Token::Type::star) {
      take();
      term(acc);
    }
    SparseMonomial out;
    for (const auto& [v, k] : acc)
      if (k > 0) out.emplace_back(v, k);
    return out;
  }

  void term(std::map<std::size_t, Exponent>& acc) {
    if (peek().type != Token::Type::variable) fail({"variable"});
    const Token var = take();
    Exponent k = 1;
    if (peek().type == Token::Type::caret) {
      take();
      k = number();
    }
    Exponent& slot = acc[var.value];
    if (__builtin_add_overflow(slot, k, &slot))
      throw ParseError(var.line, var.column, {"smaller exponent"}, describe(var), "exponent overflow");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print(const Expr& e, std::ostringstream& os) {
  os << keyword_of(e.kind) << '(';
  switch (e.kind) {
    case Expr::Kind::ideal:
      for (std::size_t g = 0; g < e.generators.size(); ++g) {
        if (g) os << ", ";
        if (e.generators[g].empty()) os << '1';
        for (std::size_t k = 0; k < e.generators[g].size(); ++k) {
          if (k) os << '*';
          os << 'x' << e.generators[g][k].first;
          if (e.generators[g][k].second != 1) os << '^' << e.generators[g][k].second;
        }
      }
      break;
    case Expr::Kind::arrangement:
      os << e.params[0] << ", " << e.params[1];
      break;
    case Expr::Kind::ambient:
      os << e.params[0] << ", ";
      print(e.args[0], os);
      break;
    default:
      for (std::size_t a = 0; a < e.args.size(); ++a) {
        if (a) os << ", ";
        print(e.args[a], os);
      }
      for (unsigned p : e.params) os << ", " << p;
      break;
  }
  os << ')';
}

void scan_ambient(const Expr& e, std::size_t& max_index, std::size_t& declared) {
  for (const auto& g : e.generators)
    for (const auto& [v, k] : g) max_index = std::max(max_index, v);
  if (e.kind == Expr::Kind::arrangement) max_index = std::max<std::size_t>(max_index, e.params[0]);
  if (e.kind == Expr::Kind::ambient) {
    if (declared != 0 && declared != e.params[0]) throw DomainError("conflicting ambient declarations");
    declared = e.params[0];
  }
  for (const auto& a : e.args) scan_ambient(a, max_index, declared);
}

unsigned positive_param(const Expr& e, const char* what) {
  if (e.params.front() == 0) throw DomainError(std::string(what) + " needs an exponent >= 1");
  return e.params.front();
}

}  // namespace

Expr parse_ideal(std::string_view text) { return Parser(Lexer(text).run()).parse_all(); }

std::string pretty_print(const Expr& e) {
  std::ostringstream os;
  print(e, os);
  return os.str();
}

std::size_t infer_ambient(const Expr& e) {
  std::size_t max_index = 0;
  std::size_t declared = 0;
  scan_ambient(e, max_index, declared);
  if (declared != 0) {
    if (max_index > declared)
      throw DomainError("expression uses x" + std::to_string(max_index) + " but declares only " +
                        std::to_string(declared) + " variables");
    return declared;
  }
  return std::max<std::size_t>(max_index, 1);
}

MonomialIdeal evaluate(const Expr& e, std::size_t nvars, const Limits& limits) {
  switch (e.kind) {
    case Expr::Kind::ideal: {
      std::vector<Monomial> gens;
      for (const auto& g : e.generators) {
        std::vector<Exponent> exps(nvars, 0);
        for (const auto& [v, k] : g) {
          if (v > nvars) throw AmbientMismatch("x" + std::to_string(v) + " lies outside the ambient ring");
          exps[v - 1] = k;
        }
        gens.emplace_back(std::move(exps));
      }
      return MonomialIdeal(nvars, std::move(gens));
    }
    case Expr::Kind::intersect: {
      std::vector<MonomialIdeal> parts;
      for (const auto& a : e.args) parts.push_back(evaluate(a, nvars, limits));
      return intersect(parts);
    }
    case Expr::Kind::sum: return sum(evaluate(e.args[0], nvars, limits), evaluate(e.args[1], nvars, limits));
    case Expr::Kind::product:
      return multiply(evaluate(e.args[0], nvars, limits), evaluate(e.args[1], nvars, limits));
    case Expr::Kind::power: return power(evaluate(e.args[0], nvars, limits), e.params[0]);
    case Expr::Kind::symbolic:
      return symbolic_power(evaluate(e.args[0], nvars, limits), positive_param(e, "symbolic"), limits);
    case Expr::Kind::closure:
      return integral_closure_power(evaluate(e.args[0], nvars, limits), positive_param(e, "closure"), limits);
    case Expr::Kind::saturate: return saturate_irrelevant(evaluate(e.args[0], nvars, limits));
    case Expr::Kind::radical: return radical(evaluate(e.args[0], nvars, limits));
    case Expr::Kind::arrangement: {
      const std::size_t n = e.params[0];
      const MonomialIdeal small = coordinate_arrangement_ideal(n, e.params[1]);
      if (n == nvars) return small;
      if (n > nvars) throw AmbientMismatch("arrangement does not fit in the ambient ring");
      std::vector<Monomial> gens;
      for (const auto& g : small.generators()) {
        std::vector<Exponent> exps(g.exponents().begin(), g.exponents().end());
        exps.resize(nvars, 0);
        gens.emplace_back(std::move(exps));
      }
      return MonomialIdeal(nvars, std::move(gens));
    }
    case Expr::Kind::ambient: return evaluate(e.args[0], nvars, limits);
  }
  throw Error("unknown expression kind");
}

MonomialIdeal evaluate_text(std::string_view text, std::size_t nvars, const Limits& limits) {
  const Expr e = parse_ideal(text);
  const std::size_t inferred = infer_ambient(e);
  if (nvars != 0 && nvars < inferred) throw AmbientMismatch("requested ring is smaller than the expression needs");
  return evaluate(e, nvars != 0 ? nvars : inferred, limits);
}

}  // namespace regpow

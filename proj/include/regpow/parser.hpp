#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regpow/error.hpp"
#include "regpow/ideal.hpp"
#include "regpow/parallel.hpp"

namespace regpow {

/// Monomial literal before the ambient ring is known: (1-based variable,
/// exponent) pairs, sorted by variable, exponents positive.
using SparseMonomial = std::vector<std::pair<std::size_t, Exponent>>;

/// Ideal expression syntax tree.
///
///   expr := 'ideal' '(' [ mono { ',' mono } ] ')'
///         | 'intersect' '(' expr ',' expr { ',' expr } ')'
///         | ('sum' | 'product') '(' expr ',' expr ')'
///         | ('power' | 'symbolic' | 'closure') '(' expr ',' uint ')'
///         | ('sat' | 'radical') '(' expr ')'
///         | 'arrangement' '(' uint ',' uint ')'
///         | 'ambient' '(' uint ',' expr ')'
///   mono := '1' | term { '*' term }
///   term := var [ '^' uint ]
///   var  := 'x' uint            (index >= 1, no whitespace inside)
struct Expr {
  enum class Kind { ideal, intersect, sum, product, power, symbolic, closure, saturate, radical, arrangement, ambient };

  Kind kind = Kind::ideal;
  std::vector<SparseMonomial> generators;
  std::vector<Expr> args;
  /// power/symbolic/closure: {k}; arrangement: {n, e}; ambient: {n}.
  std::vector<unsigned> params;

  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
             std::string detail = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Largest variable index that may appear in an expression.
inline constexpr std::size_t max_parse_variables = 64;

Expr parse_ideal(std::string_view text);
/// Canonical text; parse_ideal(pretty_print(e)) == e.
std::string pretty_print(const Expr& e);

/// The declared ambient when present, else the largest variable index
/// (arrangement(n, e) counts as n). At least 1.
std::size_t infer_ambient(const Expr& e);
MonomialIdeal evaluate(const Expr& e, std::size_t nvars, const Limits& limits = {});
/// Parses, infers the ambient unless `nvars` is nonzero, and evaluates.
MonomialIdeal evaluate_text(std::string_view text, std::size_t nvars = 0, const Limits& limits = {});

}  // namespace regpow

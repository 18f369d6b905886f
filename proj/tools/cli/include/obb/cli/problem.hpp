#pragma once

// Problem files: a line-oriented text format for a graded free module, an
// ordering and a list of generators.
//
//   # comment
//   vars: x, y, z
//   grading: 1 1 1          (one line per row; default all ones)
//   rank: 1                 (default 1)
//   shifts: 0               (one degree per component, "a,b" when m > 1)
//   ordering: degrevlex     (lex | deglex | degrevlex, optional :top/:pot)
//   gens:
//   x^3*z^2 + x^2*y^2*z, x^3*y^8
//   y^10*z^2
//
// Generators are separated by commas or line breaks; vectors of a module
// of rank r > 1 are written [f_1, ..., f_r].

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/error.hpp"
#include "obb/ordering.hpp"

namespace obb::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::kParse, std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct Problem {
  std::vector<std::string> vars;
  ContextPtr ctx;
  OrderingSpec ordering;
  std::vector<ModuleVector> generators;
  /// Non-fatal findings, e.g. a grading that is not positive. Engine
  /// commands turn that one into an error.
  std::vector<std::string> warnings;

  friend bool operator==(const Problem& a, const Problem& b);
};

/// Throws ParseError with 1-based line and column.
Problem parse_problem(std::string_view text);

std::string render_problem(const Problem& p);

/// One polynomial (or bracketed vector) over the problem's variables.
ModuleVector parse_vector(std::string_view text, const Problem& p);

std::string format_coefficient(const Coefficient& c);
std::string format_term(const Term& t, const std::vector<std::string>& vars);
/// Terms in descending order under `order`; vectors of rank r > 1 are
/// printed as [f_1, ..., f_r].
std::string format_vector(const ModuleVector& v,
                          const std::vector<std::string>& vars,
                          const TermOrder& order);

/// Adds a new variable h, smallest in the ordering, and homogenizes each
/// generator to its maximal degree. Requires the standard grading.
Problem homogenize(const Problem& p);

/// The cyclic-n system in x1..xn under degrevlex. Requires n >= 2.
Problem gen_cyclic(std::size_t n);

}  // namespace obb::cli

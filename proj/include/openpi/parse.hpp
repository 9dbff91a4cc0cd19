// Concrete syntax for processes, formulae and labels.
//
//   P ::= 0 | tau.P | a!b.P | a(x).P | [x=y]P | nu x.P | P|P | P+P | (P)
//   F ::= tt | ff | x=y | F/\F | F\/F | F=>F | ~F | <l>F | [l]F | (F)
//   l ::= tau | a!b | a!(x) | a(x)
//
// Prefixes, matches and restriction bind tightest, then |, then +. A trailing
// ".0" may be omitted. For formulae, modalities and ~ bind tightest, then /\,
// then \/, then the right-associative =>.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "openpi/syntax.hpp"

namespace openpi {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_, column_;
  std::vector<std::string> expected_;
  std::string found_;
};

Process parse_process(std::string_view text);
Formula parse_formula(std::string_view text);

std::string to_string(const Process& p);
std::string to_string(const Formula& f);
std::string to_string(const Label& l);
/// "{y->x, w->x}", ordered by label of the source.
std::string to_string(const Substitution& s);

}  // namespace openpi

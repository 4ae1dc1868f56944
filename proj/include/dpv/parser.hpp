#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpv/polynomial.hpp"

namespace dpv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using NamedPolys = std::map<std::string, Polynomial, std::less<>>;

/// Parses `ring p=3 geom x0:1 x1:1 y:2 z:3 params s0 s1 s2 s3`. A weight may
/// be a comma-separated vector (`x:1,0`) for multigradings; omitted weights
/// default to 1.
Ring parse_ring(std::string_view line);

/// Parses an expression over `ring`: integers, variables, parameters, names
/// from `named`, `+ - * / ^` and parentheses. Implicit multiplication is an
/// error; division is only by coefficient-field elements.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, const NamedPolys* named = nullptr);

/// A ring declaration followed by `poly <name> = <expr>` lines. Bare
/// expression lines are accepted as unnamed generators. `#` starts a comment.
struct PolyDocument {
  Ring ring;
  std::vector<std::pair<std::string, Polynomial>> polys;
};

PolyDocument parse_document(std::string_view text);
/// Polynomial lines against an already known ring.
std::vector<std::pair<std::string, Polynomial>> parse_poly_lines(std::string_view text, const Ring& ring);

/// Whitespace-split tokens of a line with `#` comments removed.
std::vector<std::string> split_words(std::string_view line);
std::string_view strip_comment(std::string_view line);

}  // namespace dpv

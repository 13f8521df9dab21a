#pragma once

// Text form of path-algebra elements.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' int)?
//   primary:= int | int '/' int | name ['*'] | e_<label> | '(' expr ')'
//
// A '*' directly after an arrow name marks the dual arrow when the next
// non-blank character cannot start a factor, so "a*a*" is a times a* and
// "a**a" is a* times a. Names of the form dX, where X is an arrow, are read
// as X* (an alternate spelling some tables use).

#include "preproj/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace preproj {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

using Bindings = std::map<std::string, PolyQ, std::less<>>;

/// Parses over the rationals. Bindings supply named subexpressions.
PolyQ parse_poly(std::string_view text, const AlphabetPtr& A, const Bindings& bindings = {});

/// Parses and converts into the domain (throws DomainError when a coefficient
/// does not belong to it).
template <class D>
Poly<D> parse_poly_in(std::string_view text, const AlphabetPtr& A, const D& dom, const Bindings& bindings = {}) {
  return convert(parse_poly(text, A, bindings), dom);
}

/// Resolves a single letter name, accepting "a", "a*" and the "da" alias.
std::optional<int> resolve_letter(const Alphabet& A, std::string_view name);

template <class D>
std::string format_poly(const Poly<D>& p);

extern template std::string format_poly(const PolyQ&);
extern template std::string format_poly(const PolyP&);

}  // namespace preproj

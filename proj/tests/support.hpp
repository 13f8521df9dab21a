#pragma once

// Small helpers shared by the unit tests.

#include "preproj/groebner.hpp"
#include "preproj/parse.hpp"
#include "preproj/presentation.hpp"

#include <random>
#include <string>

namespace testing_support {

using namespace preproj;

inline Presentation additive(std::string_view name, ScalarDomain d = ScalarDomain::rationals()) {
  return additive_relations(DoubledQuiver(builtin_dynkin(name)), d);
}

inline Presentation multiplicative(std::string_view name, ScalarDomain d = ScalarDomain::rationals()) {
  Quiver q = builtin_dynkin(name);
  return multiplicative_relations(star_decompose(q), DoubledQuiver(q), d);
}

inline PolyQ P(const AlphabetPtr& A, std::string_view text) { return parse_poly(text, A); }

inline Path word(const Alphabet& A, std::string_view spaced) {
  // "a a* b" -> path; empty string is not allowed here.
  Path p;
  std::size_t i = 0;
  while (i < spaced.size()) {
    while (i < spaced.size() && spaced[i] == ' ') ++i;
    std::size_t j = i;
    while (j < spaced.size() && spaced[j] != ' ') ++j;
    if (j > i) p.w.push_back(static_cast<Letter>(*A.find(spaced.substr(i, j - i))));
    i = j;
  }
  p.v = static_cast<std::uint16_t>(A.source(p.w.front()));
  return p;
}

/// Random composable path of length len starting at a random vertex; may come
/// out shorter when a vertex has no outgoing letters.
inline Path random_path(const Alphabet& A, std::mt19937_64& rng, int len) {
  Path p(static_cast<int>(rng() % A.num_vertices()));
  int v = p.v;
  for (int k = 0; k < len; ++k) {
    const auto& out = A.out_letters(v);
    if (out.empty()) break;
    int l = out[rng() % out.size()];
    p.w.push_back(static_cast<Letter>(l));
    v = A.target(l);
  }
  return p;
}

/// Random element with small integer coefficients and paths up to max_len.
inline PolyQ random_poly(const AlphabetPtr& A, std::mt19937_64& rng, int terms, int max_len) {
  std::vector<Term<RationalDomain>> ts;
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(rng() % 7) - 3;
    ts.push_back({random_path(*A, rng, static_cast<int>(rng() % (max_len + 1))), mpq_class(c)});
  }
  return PolyQ::from_terms(A, RationalDomain::rationals(), std::move(ts));
}

}  // namespace testing_support

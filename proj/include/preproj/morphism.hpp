#pragma once

// Algebra maps out of a path algebra given by images of vertices and letters,
// the structural predicates used to certify that such a map is an
// isomorphism, and the shipped isomorphism tables for types D and E.

#include "preproj/groebner.hpp"
#include "preproj/parallel.hpp"
#include "preproj/parse.hpp"
#include "preproj/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace preproj {

class MorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorImages {
  AlphabetPtr source;
  AlphabetPtr target;
  std::vector<int> vertex_map;               // source vertex index -> target vertex index
  std::vector<std::optional<PolyQ>> images;  // per source letter

  /// Identity on vertices (by label) and letters (by name).
  static GeneratorImages identity(const AlphabetPtr& source, const AlphabetPtr& target);
  void set(std::string_view letter, PolyQ image);
  const PolyQ& image(int letter) const;
};

/// The unique algebra map extending the generator images. Terms longer than
/// max_len are dropped from products when max_len >= 0.
PolyQ apply(const GeneratorImages& m, const PolyQ& p, int max_len = -1);

/// normal_form(apply(m, p)), reducing after every multiplication.
PolyQ apply_reduced(const GeneratorImages& m, const PolyQ& p, const GroebnerBasis<RationalDomain>& target,
                    int max_len = -1);

bool is_vertex_preserving(const GeneratorImages& m);
/// Each letter goes to a path from the image of its source to the image of its target.
bool is_decomposition_preserving(const GeneratorImages& m);

/// c_a for each source letter when every image reduces to c_a * a plus longer
/// terms (a the target letter of the same name); nullopt otherwise.
std::optional<std::vector<mpq_class>> triangular_coefficients(const GeneratorImages& m,
                                                              const GroebnerBasis<RationalDomain>& target);
bool is_triangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target);
bool is_unitriangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target);

/// Post-composes with a -> a / c_a. Throws MorphismError when m is not
/// triangular or when c_a c_a* differs between arrows at a common vertex.
GeneratorImages rescale_to_unitriangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target);

struct DescentFailure {
  int vertex;             // vertex index of the source relation, -1 if mixed
  std::string remainder;  // normal form of the image
};

struct DescentCertificate {
  bool descends = false;
  int truncation = -1;
  std::size_t relations_checked = 0;
  std::vector<DescentFailure> failures;
};

/// Checks normal_form(apply(m, r)) == 0 for every relation r of `source`.
/// A truncation degree below the target's top degree is rejected as unsound.
DescentCertificate verify_descends(const GeneratorImages& m, const Presentation& source,
                                   const GroebnerBasis<RationalDomain>& target, int truncation = -1,
                                   Execution ex = Execution::Parallel);

/// Map files: `vertex i -> j`, `let NAME = expr`, `arrow X -> expr`, `#`
/// comments, and an optional `order x y ...` line naming the letter order the
/// source presentation is built with. Vertices and letters not mentioned map
/// to themselves.
GeneratorImages parse_map(std::string_view text, const AlphabetPtr& source, const AlphabetPtr& target);
std::vector<std::string> map_letter_order(std::string_view text);

/// Union of the prime factors of all coefficient denominators.
std::vector<unsigned> denominator_primes(const GeneratorImages& m);

struct PaperIsoTable {
  std::string name;
  DoubledQuiver doubled;  // source and target share it, letter order included
  GeneratorImages map;
  std::vector<unsigned> bad_primes;
};

/// "D<n>" (n >= 4), "D4-small", "E6", "E7", "E8", and "E6-alt", "E7-alt",
/// "E8-alt" for the alternate spellings of the type E tables.
PaperIsoTable paper_iso(const std::string& name);
std::vector<std::string> paper_iso_names();

/// The type D map built from the polynomials p(x) = sum_{i<=n-3} (-x/2)^i
/// and q(x) = 1 + x/2.
GeneratorImages type_d_iso(const DoubledQuiver& dq);

}  // namespace preproj

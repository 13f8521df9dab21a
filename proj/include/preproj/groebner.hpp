#pragma once

// Noncommutative Groebner bases for quotients of path algebras under the
// degree-lexicographic order given by the alphabet's letter ranks.

#include "preproj/poly.hpp"
#include "preproj/presentation.hpp"
#include "preproj/subword_index.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace preproj {

class GroebnerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class D>
struct GBElement {
  Path lead;
  std::vector<Term<D>> terms;  // descending, terms[0] is the monic lead
};

struct BuchbergerOptions {
  int cap = 64;                       // largest overlap degree processed
  bool adaptive = true;               // raise the cap to 2*d0 once an empty degree d0 shows up
  std::size_t max_layer_words = 4'000'000;
};

struct BuchbergerStats {
  std::size_t overlaps_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t elements_added = 0;
  std::size_t elements_discarded = 0;
};

/// Graded list of normal words plus a lookup table.
struct NormalWordBasis {
  std::vector<std::vector<Path>> by_degree;
  std::unordered_map<Path, int, PathHash> index;  // position in `all`
  std::vector<Path> all;                          // concatenation of by_degree
  std::size_t total() const { return all.size(); }
  std::vector<std::size_t> graded_dims() const;
  int top_degree() const;
};

template <class D>
class GroebnerBasis {
 public:
  using Scalar = typename D::Scalar;

  GroebnerBasis(AlphabetPtr A, D dom) : alph_(std::move(A)), dom_(std::move(dom)) {
    index_ = SubwordIndex(alph_->num_letters(), alph_->num_vertices());
  }

  const AlphabetPtr& alphabet() const { return alph_; }
  const D& domain() const { return dom_; }
  const std::vector<GBElement<D>>& elements() const { return elems_; }
  Poly<D> element(std::size_t i) const {
    return Poly<D>::from_terms(alph_, dom_, elems_[i].terms);
  }

  int cap = 0;
  bool complete = false;
  bool leading_coeff_units = true;
  bool homogeneous = false;
  int first_empty_degree = -1;   // d0, or -1 when not found
  std::string diagnostic;
  BuchbergerStats stats;

  bool is_normal(const Path& p) const { return !index_.find(*alph_, p); }

  /// Fully reduced remainder of p. When the basis is not complete a zero
  /// remainder still certifies membership, a nonzero one certifies nothing.
  Poly<D> normal_form(const Poly<D>& p) const;
  std::vector<Term<D>> reduce(std::vector<Term<D>> terms) const;

  struct Membership {
    bool member;
    bool certified;  // false when the answer is "not a member" from an incomplete basis
  };
  Membership is_member(const Poly<D>& p) const;

  /// Normal words, degree by degree, up to the first empty degree. Throws
  /// GroebnerError if no empty degree appears by max_degree.
  NormalWordBasis enumerate_basis(int max_degree = -1) const;

  // Used by the completion procedure.
  void install(std::vector<GBElement<D>> elems);
  const SubwordIndex& index() const { return index_; }

 private:
  AlphabetPtr alph_;
  D dom_;
  std::vector<GBElement<D>> elems_;
  SubwordIndex index_;
};

/// Completion of the two-sided ideal generated by `relations` (each is first
/// split into its e_i * e_j pieces).
template <class D>
GroebnerBasis<D> buchberger(const AlphabetPtr& A, const D& dom, const std::vector<Poly<D>>& relations,
                            const BuchbergerOptions& opts = {});

/// Converts the presentation's relations into the domain D and completes.
template <class D>
GroebnerBasis<D> groebner_of(const Presentation& pres, const D& dom, const BuchbergerOptions& opts = {}) {
  std::vector<Poly<D>> rels;
  for (const auto& r : pres.relations) rels.push_back(convert(r.poly, dom));
  return buchberger(pres.alphabet(), dom, rels, opts);
}

/// Normal words reachable by one-letter extensions from the lazy paths, using
/// only the leading-word index (no completeness needed).
NormalWordBasis enumerate_normal_words(const Alphabet& A, const SubwordIndex& index, int max_degree,
                                       std::size_t max_layer_words = 4'000'000);

/// (N, M): N sums dim e_s(a) Pi^{>=3} e_t(a) over doubled arrows, M sums
/// dim e_i Pi^{>=4} e_i over vertices.
std::pair<std::size_t, std::size_t> corrected_space_dims(const Alphabet& A, const NormalWordBasis& basis);

extern template class GroebnerBasis<RationalDomain>;
extern template class GroebnerBasis<PrimeField>;
extern template GroebnerBasis<RationalDomain> buchberger(const AlphabetPtr&, const RationalDomain&,
                                                         const std::vector<PolyQ>&, const BuchbergerOptions&);
extern template GroebnerBasis<PrimeField> buchberger(const AlphabetPtr&, const PrimeField&,
                                                     const std::vector<PolyP>&, const BuchbergerOptions&);

}  // namespace preproj

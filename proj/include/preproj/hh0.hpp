#pragma once

// Zeroth Hochschild homology A/[A,A] of a finite-dimensional quotient of a
// path algebra, computed on the normal-word basis of a Groebner basis.
//
// Only cycles survive (a path i -> j with i != j equals [e_i, p]), so the
// columns are normal cycles. The commutator space is spanned by [x, m] for
// letters x and normal words m; the all-pairs span [m1, m2] is kept as a
// slower cross-check.

#include "preproj/groebner.hpp"
#include "preproj/linalg.hpp"
#include "preproj/parallel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

enum class HH0Method { FieldLinearAlgebra, MultiPrime, IntegralSNF };
enum class CommutatorSpan { Generators, AllPairs };

struct HH0Degree {
  int degree = 0;
  std::size_t rank = 0;                         // dimension over a field, free rank over Z
  std::vector<mpz_class> torsion;               // invariant factors > 1 (SNF path)
  std::map<unsigned, std::size_t> p_torsion;    // p -> number of Z/p^{>=1} summands (multi-prime path)
};

struct HH0Report {
  std::string domain;
  HH0Method method = HH0Method::FieldLinearAlgebra;
  bool filtered = false;           // per-degree entries are a non-canonical breakdown
  std::vector<HH0Degree> degrees;  // ascending degree, zero entries omitted except degree 0
  HH0Degree total;

  std::string method_name() const;
  std::size_t torsion_summands() const;
  /// Rank plus torsion in positive degree (total minus the degree-0 entry).
  bool positive_part_vanishes() const;
};

/// Columns (normal cycles) and commutator rows of one block: a degree of a
/// graded algebra, or the whole algebra when filtered.
template <class D>
struct TraceBlock {
  int degree = -1;  // -1 for the single filtered block
  std::vector<Path> cols;
  std::vector<SparseRow<D>> rows;
};

template <class D>
class TraceSpace {
 public:
  using Scalar = typename D::Scalar;

  TraceSpace(const GroebnerBasis<D>& gb, const NormalWordBasis& basis, CommutatorSpan span = CommutatorSpan::Generators,
             Execution ex = Execution::Parallel);

  bool graded() const { return graded_; }
  const std::vector<TraceBlock<D>>& blocks() const { return blocks_; }

  /// Field dimensions (D a field) or SNF data (D = Integers).
  HH0Report report() const;

  /// True iff the cycle part of normal_form(p) lies in the commutator span.
  bool is_zero_class(const Poly<D>& p) const;
  /// Same test for many elements, eliminating each block once.
  std::vector<bool> zero_classes(const std::vector<Poly<D>>& ps) const;

 private:
  SparseRow<D> to_row(const Poly<D>& p, int block) const;
  bool integral() const;

  const GroebnerBasis<D>& gb_;
  bool graded_;
  std::vector<TraceBlock<D>> blocks_;
  std::unordered_map<Path, std::pair<int, int>, PathHash> col_of_;  // -> (block, column)
};

/// HH0 over Q or F_p.
HH0Report hh0_field(const Presentation& pres, const ScalarDomain& field,
                    CommutatorSpan span = CommutatorSpan::Generators);

/// HH0 over Z. Uses Smith normal form when the Groebner basis over Z has unit
/// leading coefficients; otherwise compares dimensions over Q and F_p for the
/// given primes. Throws GroebnerError when neither applies.
HH0Report hh0_integers(const Presentation& pres, const std::vector<unsigned>& primes, bool allow_snf = true);

/// Whether the class of a combination of cycles vanishes in HH0 over `domain`
/// (Q, F_p, or Z with unit leading coefficients).
bool class_in_hh0_is_zero(const PolyQ& p, const Presentation& pres, const ScalarDomain& domain);

/// True when HH0 vanishes in positive degree while the positive part of the
/// algebra is nonzero: then [A,A] holds a nonzero ideal and no symmetric
/// Frobenius form exists.
bool frobenius_obstruction(const HH0Report& report, const Presentation& pres);

std::string format_report(const HH0Report& r);

extern template class TraceSpace<RationalDomain>;
extern template class TraceSpace<PrimeField>;

}  // namespace preproj

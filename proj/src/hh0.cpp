#include "preproj/hh0.hpp"

#include <algorithm>
#include <sstream>

namespace preproj {

std::string HH0Report::method_name() const {
  switch (method) {
    case HH0Method::FieldLinearAlgebra: return "field-linear-algebra";
    case HH0Method::MultiPrime: return "multi-prime";
    case HH0Method::IntegralSNF: return "integral-SNF";
  }
  return "?";
}

std::size_t HH0Report::torsion_summands() const {
  std::size_t n = total.torsion.size();
  for (const auto& [p, k] : total.p_torsion) n += k;
  return n;
}

bool HH0Report::positive_part_vanishes() const {
  for (const auto& d : degrees)
    if (d.degree > 0 && (d.rank > 0 || !d.torsion.empty())) return false;
  for (const auto& d : degrees)
    for (const auto& [p, k] : d.p_torsion)
      if (d.degree > 0 && k > 0) return false;
  if (filtered) {
    // The breakdown is not canonical; compare totals with the degree-0 entry.
    std::size_t zero = degrees.empty() || degrees.front().degree != 0 ? 0 : degrees.front().rank;
    return total.rank == zero && torsion_summands() == 0;
  }
  return true;
}

// ------------------------------------------------------------ trace space

template <class D>
bool TraceSpace<D>::integral() const {
  if constexpr (std::is_same_v<D, RationalDomain>) return gb_.domain().kind() == RationalDomain::Kind::Integers;
  return false;
}

template <class D>
TraceSpace<D>::TraceSpace(const GroebnerBasis<D>& gb, const NormalWordBasis& basis, CommutatorSpan span, Execution ex)
    : gb_(gb), graded_(gb.homogeneous) {
  if (!gb.complete) throw GroebnerError("trace space needs a complete Groebner basis");
  if constexpr (std::is_same_v<D, RationalDomain>) {
    if (gb.domain().kind() == RationalDomain::Kind::Localized)
      throw DomainError("trace space over a localization is not supported");
  }
  const Alphabet& A = *gb.alphabet();
  const D& dom = gb.domain();

  int nblocks = graded_ ? static_cast<int>(basis.by_degree.size()) : 1;
  blocks_.resize(nblocks);
  for (int b = 0; b < nblocks; ++b) blocks_[b].degree = graded_ ? b : -1;
  for (const auto& w : basis.all) {
    if (!is_cycle(A, w)) continue;
    blocks_[graded_ ? w.length() : 0].cols.push_back(w);
  }
  // Largest word first, so that elimination pivots on leading words.
  for (int b = 0; b < nblocks; ++b) {
    auto& cols = blocks_[b].cols;
    std::sort(cols.begin(), cols.end(), [](const Path& x, const Path& y) { return y < x; });
    for (std::size_t c = 0; c < cols.size(); ++c) col_of_.emplace(cols[c], std::make_pair(b, static_cast<int>(c)));
  }

  // Commutator jobs (left factor, right factor).
  std::vector<std::pair<Path, const Path*>> jobs;
  if (span == CommutatorSpan::Generators) {
    for (int x = 0; x < A.num_letters(); ++x)
      for (const auto& m : basis.all)
        if (path_source(A, m) == A.target(x) && path_target(A, m) == A.source(x)) jobs.push_back({letter_path(A, x), &m});
  } else {
    for (const auto& m1 : basis.all)
      for (const auto& m2 : basis.all)
        if (m1 < m2 && composable(A, m1, m2) && composable(A, m2, m1)) jobs.push_back({m1, &m2});
  }
  const AlphabetPtr& Ap = gb.alphabet();
  std::vector<Poly<D>> results(jobs.size(), Poly<D>::zero(Ap, dom));
  for_each_index(jobs.size(), ex, [&](std::size_t i) {
    const auto& [u, v] = jobs[i];
    Poly<D> c = Poly<D>::monomial(Ap, dom, concat(u, *v), dom.one());
    c -= Poly<D>::monomial(Ap, dom, concat(*v, u), dom.one());
    results[i] = gb.normal_form(c);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (results[i].is_zero()) continue;
    int b = graded_ ? jobs[i].first.length() + jobs[i].second->length() : 0;
    auto row = to_row(results[i], b);
    if (!row.empty()) blocks_[b].rows.push_back(std::move(row));
  }
}

template <class D>
SparseRow<D> TraceSpace<D>::to_row(const Poly<D>& p, int block) const {
  SparseRow<D> row;
  for (const auto& t : p.terms()) {
    auto it = col_of_.find(t.m);
    if (it == col_of_.end()) continue;  // not a cycle
    if (it->second.first != block) continue;
    row.emplace_back(it->second.second, t.c);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

namespace {

template <class D>
IntRow dense_integer_row(const SparseRow<D>& r, int ncols) {
  IntRow out(ncols, mpz_class(0));
  if constexpr (std::is_same_v<D, RationalDomain>) {
    for (const auto& [c, v] : r) {
      if (v.get_den() != 1) throw DomainError("non-integral commutator coefficient");
      out[c] = v.get_num();
    }
  }
  return out;
}

}  // namespace

template <class D>
HH0Report TraceSpace<D>::report() const {
  HH0Report rep;
  rep.domain = gb_.domain().name();
  rep.method = integral() ? HH0Method::IntegralSNF : HH0Method::FieldLinearAlgebra;
  rep.filtered = !graded_;
  std::map<int, std::size_t> breakdown;
  for (const auto& blk : blocks_) {
    int n = static_cast<int>(blk.cols.size());
    std::vector<char> pivot(n, 0);
    std::size_t rank;
    std::vector<mpz_class> torsion;
    if (integral()) {
      IntegerLattice L(n);
      for (const auto& r : blk.rows) L.add_row(dense_integer_row<D>(r, n));
      rank = static_cast<std::size_t>(L.free_rank());
      torsion = L.torsion();
      for (const auto& row : L.basis())
        for (int c = 0; c < n; ++c)
          if (sgn(row[c]) != 0) {
            pivot[c] = 1;
            break;
          }
    } else {
      SparseEchelon<D> E(gb_.domain(), n);
      for (const auto& r : blk.rows) E.add_row(r);
      rank = static_cast<std::size_t>(n - E.rank());
      for (int c = 0; c < n; ++c) pivot[c] = E.is_pivot(c);
    }
    if (graded_) {
      if (rank > 0 || !torsion.empty() || blk.degree == 0) rep.degrees.push_back({blk.degree, rank, torsion, {}});
    } else {
      for (int c = 0; c < n; ++c)
        if (!pivot[c]) ++breakdown[blk.cols[c].length()];
      rep.total.torsion = torsion;
    }
    rep.total.rank += rank;
    if (graded_) rep.total.torsion.insert(rep.total.torsion.end(), torsion.begin(), torsion.end());
  }
  if (!graded_) {
    if (!breakdown.count(0)) breakdown[0] = 0;
    for (const auto& [d, k] : breakdown) rep.degrees.push_back({d, k, {}, {}});
  }
  rep.total.degree = -1;
  return rep;
}

template <class D>
bool TraceSpace<D>::is_zero_class(const Poly<D>& p) const {
  return zero_classes({p}).front();
}

template <class D>
std::vector<bool> TraceSpace<D>::zero_classes(const std::vector<Poly<D>>& ps) const {
  std::vector<Poly<D>> reduced;
  for (const auto& p : ps) reduced.push_back(gb_.normal_form(p));
  std::vector<bool> zero(ps.size(), true);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = blocks_[b];
    std::vector<std::pair<std::size_t, SparseRow<D>>> todo;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (!zero[i]) continue;
      auto v = to_row(reduced[i], static_cast<int>(b));
      if (!v.empty()) todo.emplace_back(i, std::move(v));
    }
    if (todo.empty()) continue;
    int n = static_cast<int>(blk.cols.size());
    if (integral()) {
      IntegerLattice L(n);
      for (const auto& row : blk.rows) L.add_row(dense_integer_row<D>(row, n));
      for (const auto& [i, v] : todo) zero[i] = L.contains(dense_integer_row<D>(v, n));
    } else {
      SparseEchelon<D> E(gb_.domain(), n);
      for (const auto& row : blk.rows) E.add_row(row);
      for (const auto& [i, v] : todo) zero[i] = E.in_span(v);
    }
  }
  return zero;
}

template class TraceSpace<RationalDomain>;
template class TraceSpace<PrimeField>;

// ------------------------------------------------------------ entry points

namespace {

template <class D>
HH0Report field_report(const Presentation& pres, const D& dom, CommutatorSpan span) {
  auto gb = groebner_of(pres, dom);
  if (!gb.complete) throw GroebnerError("incomplete Groebner basis: " + gb.diagnostic);
  auto basis = gb.enumerate_basis();
  return TraceSpace<D>(gb, basis, span).report();
}

}  // namespace

HH0Report hh0_field(const Presentation& pres, const ScalarDomain& field, CommutatorSpan span) {
  switch (field.kind) {
    case ScalarDomain::Kind::Rationals: return field_report(pres, RationalDomain::rationals(), span);
    case ScalarDomain::Kind::PrimeField: return field_report(pres, field.prime_field(), span);
    default: throw DomainError("hh0_field needs Q or F_p, got " + field.name());
  }
}

HH0Report hh0_integers(const Presentation& pres, const std::vector<unsigned>& primes, bool allow_snf) {
  if (allow_snf) {
    try {
      return field_report(pres, RationalDomain::integers(), CommutatorSpan::Generators);
    } catch (const GroebnerError&) {
      if (primes.empty()) throw;
    }
  }
  if (primes.empty()) throw GroebnerError("no primes given for the multi-prime comparison");
  HH0Report q = hh0_field(pres, ScalarDomain::rationals());
  HH0Report out = q;
  out.domain = "Z";
  out.method = HH0Method::MultiPrime;
  for (unsigned p : primes) {
    HH0Report fp = hh0_field(pres, ScalarDomain::prime_field(p));
    if (fp.total.rank < q.total.rank) throw DomainError("dimension over F_p below rank over Q");
    std::size_t extra = fp.total.rank - q.total.rank;
    if (extra) out.total.p_torsion[p] = extra;
    if (q.filtered) continue;
    for (const auto& d : fp.degrees) {
      auto it = std::find_if(out.degrees.begin(), out.degrees.end(), [&](const HH0Degree& e) { return e.degree == d.degree; });
      std::size_t base = it == out.degrees.end() ? 0 : it->rank;
      if (d.rank < base) throw DomainError("dimension over F_p below rank over Q");
      if (d.rank == base) continue;
      if (it == out.degrees.end()) {
        out.degrees.push_back({d.degree, 0, {}, {}});
        it = out.degrees.end() - 1;
      }
      it->p_torsion[p] = d.rank - base;
    }
  }
  std::sort(out.degrees.begin(), out.degrees.end(), [](const auto& x, const auto& y) { return x.degree < y.degree; });
  return out;
}

namespace {

template <class D>
bool zero_class(const PolyQ& p, const Presentation& pres, const D& dom) {
  auto gb = groebner_of(pres, dom);
  if (!gb.complete) throw GroebnerError("incomplete Groebner basis: " + gb.diagnostic);
  auto basis = gb.enumerate_basis();
  TraceSpace<D> ts(gb, basis);
  return ts.is_zero_class(convert(p, dom));
}

}  // namespace

bool class_in_hh0_is_zero(const PolyQ& p, const Presentation& pres, const ScalarDomain& domain) {
  if (p.alphabet() != pres.alphabet()) throw DomainError("class_in_hh0: polynomial over a different alphabet");
  switch (domain.kind) {
    case ScalarDomain::Kind::Rationals: return zero_class(p, pres, RationalDomain::rationals());
    case ScalarDomain::Kind::PrimeField: return zero_class(p, pres, domain.prime_field());
    case ScalarDomain::Kind::Integers: return zero_class(p, pres, RationalDomain::integers());
    default: throw DomainError("class_in_hh0: unsupported domain " + domain.name());
  }
}

bool frobenius_obstruction(const HH0Report& report, const Presentation& pres) {
  if (pres.doubled.base().num_arrows() == 0) return false;  // A_1: the positive part is zero
  return report.positive_part_vanishes();
}

std::string format_report(const HH0Report& r) {
  std::ostringstream os;
  os << "degree | dim/rank | torsion\n";
  for (const auto& d : r.degrees) {
    os << d.degree << " | " << d.rank << " | ";
    bool any = false;
    for (const auto& t : d.torsion) {
      os << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
    for (const auto& [p, k] : d.p_torsion) {
      os << (any ? " + " : "") << k << "x Z/" << p << "^{>=1}";
      any = true;
    }
    if (!any) os << "-";
    os << '\n';
  }
  if (r.filtered) os << "(length breakdown of a filtered algebra: not canonical)\n";
  os << "total | " << r.total.rank << " | ";
  bool any = false;
  for (const auto& t : r.total.torsion) {
    os << (any ? " + " : "") << "Z/" << t;
    any = true;
  }
  for (const auto& [p, k] : r.total.p_torsion) {
    os << (any ? " + " : "") << k << "x Z/" << p << "^{>=1}";
    any = true;
  }
  if (!any) os << "-";
  os << '\n';
  return os.str();
}

}  // namespace preproj

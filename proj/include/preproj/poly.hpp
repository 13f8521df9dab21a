#pragma once

// Elements of a path algebra: finite linear combinations of paths with
// coefficients in a domain policy D. Terms are kept sorted in decreasing
// monomial order with no zero coefficients, so equality is structural.

#include "preproj/path.hpp"
#include "preproj/scalar.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace preproj {

template <class D>
struct Term {
  Path m;
  typename D::Scalar c;
};

template <class D>
class Poly {
 public:
  using Scalar = typename D::Scalar;
  using TermT = Term<D>;

  Poly(AlphabetPtr alphabet, D domain) : alph_(std::move(alphabet)), dom_(std::move(domain)) {}

  static Poly zero(const AlphabetPtr& A, const D& dom) { return Poly(A, dom); }
  /// The unit sum of all lazy paths.
  static Poly one(const AlphabetPtr& A, const D& dom) {
    Poly p(A, dom);
    for (int v = A->num_vertices() - 1; v >= 0; --v) p.terms_.push_back({Path(v), dom.one()});
    return p;
  }
  static Poly vertex(const AlphabetPtr& A, const D& dom, int v) {
    Poly p(A, dom);
    p.terms_.push_back({Path(v), dom.one()});
    return p;
  }
  static Poly letter(const AlphabetPtr& A, const D& dom, int l) {
    Poly p(A, dom);
    p.terms_.push_back({letter_path(*A, l), dom.one()});
    return p;
  }
  static Poly monomial(const AlphabetPtr& A, const D& dom, Path m, Scalar c) {
    Poly p(A, dom);
    if (!D::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Takes arbitrary (unsorted, repeated, zero) terms and normalizes them.
  static Poly from_terms(const AlphabetPtr& A, const D& dom, std::vector<TermT> terms) {
    Poly p(A, dom);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const AlphabetPtr& alphabet() const { return alph_; }
  const D& domain() const { return dom_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermT& lead() const { return terms_.front(); }

  /// Largest path length, -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.length(); }
  int min_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = d < 0 ? t.m.length() : std::min(d, t.m.length());
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

  Scalar coefficient(const Path& m) const {
    for (const auto& t : terms_)
      if (t.m == m) return t.c;
    return dom_.zero();
  }

  Poly& operator+=(const Poly& o) { return merge(o, false); }
  Poly& operator-=(const Poly& o) { return merge(o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.c = a.dom_.neg(t.c);
    return a;
  }

  Poly scaled(const Scalar& s) const {
    Poly r(alph_, dom_);
    if (D::is_zero(s)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Scalar c = dom_.mul(t.c, s);
      if (!D::is_zero(c)) r.terms_.push_back({t.m, std::move(c)});
    }
    return r;
  }

  /// Product, dropping any path longer than max_len (no truncation if < 0).
  Poly mul(const Poly& o, int max_len = -1) const {
    check_compatible(o);
    std::vector<TermT> out;
    out.reserve(terms_.size() * o.terms_.size());
    const Alphabet& A = *alph_;
    for (const auto& x : terms_) {
      int tx = path_target(A, x.m);
      for (const auto& y : o.terms_) {
        if (path_source(A, y.m) != tx) continue;
        if (max_len >= 0 && x.m.length() + y.m.length() > max_len) continue;
        out.push_back({concat(x.m, y.m), dom_.mul(x.c, y.c)});
      }
    }
    return from_terms(alph_, dom_, std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }

  Poly pow(int k, int max_len = -1) const {
    if (k < 0) throw DomainError("negative exponent");
    Poly r = one(alph_, dom_), base = *this;
    while (k > 0) {
      if (k & 1) r = r.mul(base, max_len);
      k >>= 1;
      if (k) base = base.mul(base, max_len);
    }
    return r;
  }

  /// e_i * p * e_j.
  Poly peirce(int i, int j) const {
    Poly r(alph_, dom_);
    for (const auto& t : terms_)
      if (path_source(*alph_, t.m) == i && path_target(*alph_, t.m) == j) r.terms_.push_back(t);
    return r;
  }

  Poly truncated(int max_len) const {
    Poly r(alph_, dom_);
    for (const auto& t : terms_)
      if (t.m.length() <= max_len) r.terms_.push_back(t);
    return r;
  }

  Poly homogeneous_part(int d) const {
    Poly r(alph_, dom_);
    for (const auto& t : terms_)
      if (t.m.length() == d) r.terms_.push_back(t);
    return r;
  }

  bool is_peirce_uniform() const {
    if (terms_.empty()) return true;
    int s = path_source(*alph_, terms_[0].m), t = path_target(*alph_, terms_[0].m);
    for (const auto& x : terms_)
      if (path_source(*alph_, x.m) != s || path_target(*alph_, x.m) != t) return false;
    return true;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  void check_compatible(const Poly& o) const {
    if (!(dom_ == o.dom_)) throw DomainError("domain mismatch: " + dom_.name() + " vs " + o.dom_.name());
    if (alph_ != o.alph_) throw DomainError("polynomials live over different alphabets");
  }

  std::vector<TermT>& mutable_terms() { return terms_; }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const TermT& x, const TermT& y) { return compare(x.m, y.m) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      Scalar c = std::move(terms_[i].c);
      while (j < terms_.size() && terms_[j].m == terms_[i].m) {
        dom_.add_to(c, terms_[j].c);
        ++j;
      }
      if (!D::is_zero(c)) {
        if (out != i) terms_[out].m = std::move(terms_[i].m);
        terms_[out].c = std::move(c);
        ++out;
      }
      i = j;
    }
    terms_.resize(out);
  }

 private:
  Poly& merge(const Poly& o, bool subtract) {
    check_compatible(o);
    std::vector<TermT> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : compare(terms_[i].m, o.terms_[j].m);
      if (c > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        out.push_back({t.m, subtract ? dom_.neg(t.c) : t.c});
      } else {
        Scalar s = std::move(terms_[i].c);
        if (subtract) dom_.sub_from(s, o.terms_[j].c);
        else dom_.add_to(s, o.terms_[j].c);
        if (!D::is_zero(s)) out.push_back({std::move(terms_[i].m), std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  AlphabetPtr alph_;
  D dom_;
  std::vector<TermT> terms_;
};

using PolyQ = Poly<RationalDomain>;
using PolyP = Poly<PrimeField>;

/// Sum_{k=0}^{bound} (-x)^k. Requires x to have no lazy-path terms and every
/// term to be a cycle.
template <class D>
Poly<D> geometric_inverse(const Poly<D>& x, int bound) {
  for (const auto& t : x.terms()) {
    if (t.m.empty()) throw DomainError("geometric_inverse: argument has a nonzero constant term");
    if (!is_cycle(*x.alphabet(), t.m)) throw DomainError("geometric_inverse: argument has a non-cycle term");
  }
  Poly<D> neg = -x;
  Poly<D> acc = Poly<D>::one(x.alphabet(), x.domain());
  Poly<D> power = acc;
  for (int k = 1; k <= bound; ++k) {
    power = power * neg;
    acc += power;
  }
  return acc;
}

/// Coefficient-wise change of domain (via the rationals).
template <class D2, class D1>
Poly<D2> convert(const Poly<D1>& p, const D2& target) {
  std::vector<Term<D2>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.m, target.from_rational(p.domain().to_rational(t.c))});
  return Poly<D2>::from_terms(p.alphabet(), target, std::move(terms));
}

}  // namespace preproj

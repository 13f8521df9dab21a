#include "preproj/groebner.hpp"

#include <algorithm>
#include <cstring>
#include <queue>

namespace preproj {

// ------------------------------------------------------------ basis helpers

std::vector<std::size_t> NormalWordBasis::graded_dims() const {
  std::vector<std::size_t> d;
  for (const auto& layer : by_degree) d.push_back(layer.size());
  return d;
}

int NormalWordBasis::top_degree() const {
  for (int d = static_cast<int>(by_degree.size()) - 1; d >= 0; --d)
    if (!by_degree[d].empty()) return d;
  return -1;
}

NormalWordBasis enumerate_normal_words(const Alphabet& A, const SubwordIndex& index, int max_degree,
                                       std::size_t max_layer_words) {
  NormalWordBasis B;
  std::vector<Path> layer;
  for (int v = 0; v < A.num_vertices(); ++v)
    if (!index.vertex_killed(v)) layer.push_back(Path(v));
  for (int d = 0;; ++d) {
    std::sort(layer.begin(), layer.end());
    B.by_degree.push_back(layer);
    if (layer.empty() || d == max_degree) break;
    std::vector<Path> next;
    for (const auto& w : layer) {
      for (int x : A.out_letters(path_target(A, w))) {
        Path nw = w;
        nw.w.push_back(static_cast<Letter>(x));
        if (nw.w.size() == 1) nw.v = static_cast<std::uint16_t>(A.source(x));
        if (!index.suffix_reducible(A, nw)) next.push_back(std::move(nw));
      }
      if (next.size() > max_layer_words)
        throw GroebnerError("normal-word layer exceeds " + std::to_string(max_layer_words) + " words");
    }
    layer = std::move(next);
  }
  for (const auto& layer_d : B.by_degree)
    for (const auto& w : layer_d) {
      B.index.emplace(w, static_cast<int>(B.all.size()));
      B.all.push_back(w);
    }
  return B;
}

std::pair<std::size_t, std::size_t> corrected_space_dims(const Alphabet& A, const NormalWordBasis& basis) {
  std::size_t N = 0, M = 0;
  for (std::size_t d = 3; d < basis.by_degree.size(); ++d)
    for (const auto& w : basis.by_degree[d]) {
      int s = path_source(A, w), t = path_target(A, w);
      for (int x = 0; x < A.num_letters(); ++x)
        if (A.source(x) == s && A.target(x) == t) ++N;
      if (d >= 4 && s == t) ++M;
    }
  return {N, M};
}

// ------------------------------------------------------------ reduction

namespace {

template <class D>
std::vector<Term<D>> reduce_with(const Alphabet& A, const D& dom, const std::vector<GBElement<D>>& G,
                                 const SubwordIndex& idx, std::vector<Term<D>> heap) {
  auto less = [](const Term<D>& x, const Term<D>& y) { return compare(x.m, y.m) < 0; };
  std::make_heap(heap.begin(), heap.end(), less);
  std::vector<Term<D>> out;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Term<D> top = std::move(heap.back());
    heap.pop_back();
    while (!heap.empty() && heap.front().m == top.m) {
      std::pop_heap(heap.begin(), heap.end(), less);
      dom.add_to(top.c, heap.back().c);
      heap.pop_back();
    }
    if (D::is_zero(top.c)) continue;
    auto match = idx.find(A, top.m);
    if (!match) {
      out.push_back(std::move(top));
      continue;
    }
    const GBElement<D>& g = G[match->id];
    const Word& w = top.m.w;
    Word left(w.begin(), w.begin() + match->pos);
    Word right(w.begin() + match->pos + match->len, w.end());
    int base = match->pos == 0 ? path_source(A, top.m) : A.target(w[match->pos - 1]);
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
      heap.push_back({sandwich(A, left, g.terms[k].m, right, base), dom.neg(dom.mul(top.c, g.terms[k].c))});
      std::push_heap(heap.begin(), heap.end(), less);
    }
  }
  return out;
}

bool contains_subword(const Alphabet& A, const Path& big, const Path& small) {
  if (small.empty()) {
    if (path_source(A, big) == small.v) return true;
    for (Letter l : big.w)
      if (A.target(l) == small.v) return true;
    return false;
  }
  if (small.w.size() > big.w.size()) return false;
  auto it = std::search(big.w.begin(), big.w.end(), small.w.begin(), small.w.end());
  return it != big.w.end();
}

struct Item {
  int deg;
  std::uint64_t seq;
  int input = -1;  // index into pending polys, or -1 for an overlap
  int i = -1, j = -1, k = 0;
};

struct ItemAfter {
  bool operator()(const Item& x, const Item& y) const {
    if (x.deg != y.deg) return x.deg > y.deg;
    return x.seq > y.seq;
  }
};

}  // namespace

template <class D>
std::vector<Term<D>> GroebnerBasis<D>::reduce(std::vector<Term<D>> terms) const {
  return reduce_with(*alph_, dom_, elems_, index_, std::move(terms));
}

template <class D>
Poly<D> GroebnerBasis<D>::normal_form(const Poly<D>& p) const {
  if (p.alphabet() != alph_) throw DomainError("normal_form: polynomial over a different alphabet");
  if (!(p.domain() == dom_)) throw DomainError("normal_form: domain mismatch");
  auto out = reduce(p.terms());
  Poly<D> r(alph_, dom_);
  r.mutable_terms() = std::move(out);
  return r;
}

template <class D>
typename GroebnerBasis<D>::Membership GroebnerBasis<D>::is_member(const Poly<D>& p) const {
  bool zero = normal_form(p).is_zero();
  return {zero, zero || complete};
}

template <class D>
NormalWordBasis GroebnerBasis<D>::enumerate_basis(int max_degree) const {
  int limit = max_degree >= 0 ? max_degree : (first_empty_degree >= 0 ? first_empty_degree : std::max(cap, 1) * 4);
  NormalWordBasis B = enumerate_normal_words(*alph_, index_, limit);
  if (!B.by_degree.back().empty())
    throw GroebnerError("algebra appears infinite-dimensional: normal words persist at degree " + std::to_string(limit));
  return B;
}

template <class D>
void GroebnerBasis<D>::install(std::vector<GBElement<D>> elems) {
  elems_ = std::move(elems);
  index_.clear();
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.insert(elems_[i].lead, static_cast<int>(i));
}

// ------------------------------------------------------------ completion

template <class D>
GroebnerBasis<D> buchberger(const AlphabetPtr& Aptr, const D& dom, const std::vector<Poly<D>>& relations,
                            const BuchbergerOptions& opts) {
  const Alphabet& A = *Aptr;
  GroebnerBasis<D> out(Aptr, dom);

  std::vector<std::vector<Term<D>>> pending;
  bool homogeneous = true;
  for (const auto& r : relations) {
    if (r.alphabet() != Aptr) throw DomainError("relation over a different alphabet");
    for (int i = 0; i < A.num_vertices(); ++i)
      for (int j = 0; j < A.num_vertices(); ++j) {
        Poly<D> piece = r.peirce(i, j);
        if (piece.is_zero()) continue;
        homogeneous = homogeneous && piece.is_homogeneous();
        pending.push_back(piece.terms());
      }
  }
  out.homogeneous = homogeneous;

  std::vector<GBElement<D>> G;
  std::vector<char> alive;
  SubwordIndex idx(A.num_letters(), A.num_vertices());
  std::priority_queue<Item, std::vector<Item>, ItemAfter> queue;
  std::vector<Item> skipped;
  std::uint64_t seq = 0;
  int cap = opts.cap;
  int d0 = -1;

  // Inputs go in ascending order of leading word for a deterministic run.
  std::vector<int> input_order(pending.size());
  {
    for (std::size_t i = 0; i < input_order.size(); ++i) input_order[i] = static_cast<int>(i);
    std::stable_sort(input_order.begin(), input_order.end(), [&](int x, int y) {
      return compare(pending[x].front().m, pending[y].front().m) < 0;
    });
  }

  auto push_item = [&](Item it) {
    if (it.deg > cap) skipped.push_back(it);
    else queue.push(it);
  };
  for (int i : input_order) push_item({pending[i].front().m.length(), seq++, i});

  auto add_overlaps = [&](int a, int b) {
    const Word& u = G[a].lead.w;
    const Word& v = G[b].lead.w;
    int lu = static_cast<int>(u.size()), lv = static_cast<int>(v.size());
    for (int k = 1; k < std::min(lu, lv); ++k) {
      if (std::memcmp(u.data() + (lu - k), v.data(), k) == 0) push_item({lu + lv - k, seq++, -1, a, b, k});
    }
  };

  auto add_element = [&](std::vector<Term<D>> terms) {
    int id = static_cast<int>(G.size());
    const Path& lead = terms.front().m;
    for (std::size_t f = 0; f < G.size(); ++f) {
      if (!alive[f] || !contains_subword(A, G[f].lead, lead)) continue;
      alive[f] = 0;
      idx.erase(G[f].lead);
      ++out.stats.elements_discarded;
      pending.push_back(G[f].terms);
      push_item({G[f].lead.length(), seq++, static_cast<int>(pending.size()) - 1});
    }
    G.push_back({lead, std::move(terms)});
    alive.push_back(1);
    idx.insert(G.back().lead, id);
    ++out.stats.elements_added;
    if (G.back().lead.empty()) return;
    for (int f = 0; f <= id; ++f) {
      if (!alive[f] || G[f].lead.empty()) continue;
      add_overlaps(id, f);
      if (f != id) add_overlaps(f, id);
    }
  };

  auto normalize_lead = [&](std::vector<Term<D>>& r) {
    if (D::is_one(r.front().c)) return;
    const auto& lc = r.front().c;
    if (!dom.is_unit(lc)) {
      out.leading_coeff_units = false;
      throw GroebnerError("leading coefficient " + dom.format(lc) + " is not a unit in " + dom.name() +
                          " (degree " + std::to_string(r.front().m.length()) +
                          "); use a field or the multi-prime path");
    }
    auto inv = dom.inverse(lc);
    for (auto& t : r) t.c = dom.mul(t.c, inv);
  };

  // Normal-word layers for the degree checkpoints.
  int finalized = -1;
  std::vector<Path> layer;
  auto layer_empty_at = [&](int d) -> bool {
    if (homogeneous) {
      // Leading words added later are longer than d, so layers are final.
      if (d == 0) {
        layer.clear();
        for (int v = 0; v < A.num_vertices(); ++v)
          if (!idx.vertex_killed(v)) layer.push_back(Path(v));
      } else {
        std::vector<Path> next;
        for (const auto& w : layer)
          for (int x : A.out_letters(path_target(A, w))) {
            Path nw = w;
            nw.w.push_back(static_cast<Letter>(x));
            if (nw.w.size() == 1) nw.v = static_cast<std::uint16_t>(A.source(x));
            if (!idx.suffix_reducible(A, nw)) next.push_back(std::move(nw));
          }
        if (next.size() > opts.max_layer_words) throw GroebnerError("normal-word layer too large");
        layer = std::move(next);
      }
      return layer.empty();
    }
    NormalWordBasis B = enumerate_normal_words(A, idx, d, opts.max_layer_words);
    return B.by_degree.size() <= static_cast<std::size_t>(d) || B.by_degree[d].empty();
  };

  bool stopped_early = false;
  // Returns true when the homogeneous run can stop.
  auto finalize_through = [&](int upto) -> bool {
    while (finalized < upto) {
      ++finalized;
      if (d0 >= 0) continue;
      if (layer_empty_at(finalized)) {
        d0 = finalized;
        if (homogeneous) return true;
        if (opts.adaptive && cap < 2 * d0) {
          cap = 2 * d0;
          std::vector<Item> still;
          for (const auto& it : skipped) {
            if (it.deg <= cap) queue.push(it);
            else still.push_back(it);
          }
          skipped = std::move(still);
        }
      }
    }
    return false;
  };

  while (true) {
    if (queue.empty()) break;
    Item it = queue.top();
    if (it.deg - 1 > finalized) {
      if (finalize_through(std::min(it.deg - 1, cap))) {
        stopped_early = true;
        break;
      }
      continue;
    }
    queue.pop();
    std::vector<Term<D>> terms;
    if (it.input >= 0) {
      terms = std::move(pending[it.input]);
    } else {
      if (!alive[it.i] || !alive[it.j]) continue;
      ++out.stats.overlaps_processed;
      const GBElement<D>& f = G[it.i];
      const GBElement<D>& g = G[it.j];
      Word B(g.lead.w.begin() + it.k, g.lead.w.end());
      Word Aw(f.lead.w.begin(), f.lead.w.end() - it.k);
      Word none;
      terms.reserve(f.terms.size() + g.terms.size());
      for (const auto& t : f.terms) terms.push_back({sandwich(A, none, t.m, B, t.m.v), t.c});
      for (const auto& t : g.terms) terms.push_back({sandwich(A, Aw, t.m, none, t.m.v), dom.neg(t.c)});
    }
    auto r = reduce_with(A, dom, G, idx, std::move(terms));
    if (r.empty()) {
      ++out.stats.reductions_to_zero;
      continue;
    }
    normalize_lead(r);
    add_element(std::move(r));
  }

  if (!stopped_early) {
    // Queue exhausted: look for the first empty degree up to the cap.
    try {
      finalize_through(cap);
    } catch (const GroebnerError&) {
      // layer explosion: leave d0 unknown
    }
    if (homogeneous && d0 >= 0) skipped.clear();
  }

  out.cap = cap;
  out.first_empty_degree = d0;
  out.complete = stopped_early || skipped.empty();
  if (!out.complete)
    out.diagnostic = std::to_string(skipped.size()) + " overlaps above degree " + std::to_string(cap) + " unresolved";

  // Inter-reduce: keep alive elements, reduce tails, sort by lead.
  std::vector<GBElement<D>> kept;
  for (std::size_t f = 0; f < G.size(); ++f)
    if (alive[f]) kept.push_back(std::move(G[f]));
  std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) { return compare(x.lead, y.lead) < 0; });
  out.install(std::move(kept));
  std::vector<GBElement<D>> final_elems;
  for (const auto& e : out.elements()) {
    std::vector<Term<D>> tail(e.terms.begin() + 1, e.terms.end());
    auto red = out.reduce(std::move(tail));
    GBElement<D> g{e.lead, {}};
    g.terms.push_back(e.terms.front());
    for (auto& t : red) g.terms.push_back(std::move(t));
    final_elems.push_back(std::move(g));
  }
  out.install(std::move(final_elems));
  return out;
}

template class GroebnerBasis<RationalDomain>;
template class GroebnerBasis<PrimeField>;
template GroebnerBasis<RationalDomain> buchberger(const AlphabetPtr&, const RationalDomain&, const std::vector<PolyQ>&,
                                                  const BuchbergerOptions&);
template GroebnerBasis<PrimeField> buchberger(const AlphabetPtr&, const PrimeField&, const std::vector<PolyP>&,
                                              const BuchbergerOptions&);

}  // namespace preproj

#include "preproj/presentation.hpp"

#include "preproj/parse.hpp"

#include <algorithm>
#include <sstream>

namespace preproj {

namespace {

const RationalDomain kQ = RationalDomain::rationals();

PolyQ two_letter(const DoubledQuiver& dq, int arrow, bool first_dual) {
  const AlphabetPtr& A = dq.alphabet();
  Path p;
  p.w.push_back(static_cast<Letter>(dq.letter_of(arrow, first_dual)));
  p.w.push_back(static_cast<Letter>(dq.letter_of(arrow, !first_dual)));
  p.v = static_cast<std::uint16_t>(A->source(p.w[0]));
  return PolyQ::monomial(A, kQ, p, mpq_class(1));
}

PolyQ additive_at(const DoubledQuiver& dq, int v) {
  PolyQ r = PolyQ::zero(dq.alphabet(), kQ);
  const Quiver& q = dq.base();
  for (int i = 0; i < q.num_arrows(); ++i) {
    if (q.arrow(i).source == v) r += two_letter(dq, i, false);  // a a*
    if (q.arrow(i).target == v) r -= two_letter(dq, i, true);   // a* a
  }
  return r;
}

// e_v + sum_{k=1}^{bound} (-x)^k
PolyQ local_geometric(const PolyQ& x, int bound, int v) {
  return geometric_inverse(x, bound).peirce(v, v);
}

struct CentralFactor {
  int arrow;
  bool inward;    // arrow points at the centre
  int rank;       // letter id of the arrow leaving the centre
  int bound;      // arm length
  PolyQ cycle;    // a* a (inward) or a a* (outward)
};

std::vector<CentralFactor> central_factors(const StarDecomposition& star, const DoubledQuiver& dq) {
  const Quiver& q = dq.base();
  std::vector<CentralFactor> out;
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    if (a.source != star.central && a.target != star.central) continue;
    bool inward = a.target == star.central;
    out.push_back({i, inward, dq.letter_of(i, inward), nilpotency_bound(star, q, i),
                   two_letter(dq, i, inward)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.rank < y.rank; });
  return out;
}

}  // namespace

std::vector<PolyQ> Presentation::polys() const {
  std::vector<PolyQ> out;
  for (const auto& r : relations) out.push_back(r.poly);
  return out;
}

bool Presentation::homogeneous() const {
  return std::all_of(relations.begin(), relations.end(), [](const Relation& r) { return r.poly.is_homogeneous(); });
}

std::string Presentation::kind_name() const {
  switch (kind) {
    case RelationKind::Additive: return "add";
    case RelationKind::Multiplicative: return "mult";
    case RelationKind::Partial: return "partial:" + base_kind;
    case RelationKind::Custom: return "custom";
  }
  return "?";
}

Presentation additive_relations(const DoubledQuiver& dq, const ScalarDomain& domain) {
  Presentation p{dq, {}, domain, RelationKind::Additive, "add", std::nullopt};
  for (int v = 0; v < dq.base().num_vertices(); ++v) {
    PolyQ r = additive_at(dq, v);
    if (!r.is_zero()) p.relations.push_back({v, std::move(r)});
  }
  return p;
}

PolyQ raw_central_multiplicative(const StarDecomposition& star, const DoubledQuiver& dq) {
  int v = star.central;
  PolyQ e = PolyQ::vertex(dq.alphabet(), kQ, v);
  PolyQ prod = e;
  for (const auto& f : central_factors(star, dq)) {
    PolyQ factor = f.inward ? local_geometric(f.cycle, f.bound, v) : e + f.cycle;
    prod = prod * factor;
  }
  return prod - e;
}

Presentation multiplicative_relations(const StarDecomposition& star, const DoubledQuiver& dq,
                                      const ScalarDomain& domain) {
  Presentation p = additive_relations(dq, domain);
  p.kind = RelationKind::Multiplicative;
  p.base_kind = "mult";
  int v = star.central;
  auto factors = central_factors(star, dq);
  if (factors.size() <= 1) return p;  // one arm: same as the additive relation
  // (F_1) - (G_m ... G_2) where G_k is the inverse of the k-th factor.
  PolyQ e = PolyQ::vertex(dq.alphabet(), kQ, v);
  const auto& f1 = factors[0];
  PolyQ lhs = f1.inward ? local_geometric(f1.cycle, f1.bound, v) : e + f1.cycle;
  PolyQ rhs = e;
  for (std::size_t k = factors.size(); k-- > 1;) {
    const auto& f = factors[k];
    rhs = rhs * (f.inward ? e + f.cycle : local_geometric(f.cycle, f.bound, v));
  }
  PolyQ central = lhs - rhs;
  for (auto& r : p.relations)
    if (r.vertex == v) r.poly = central;
  return p;
}

Presentation partial_relations(const Presentation& base, int w) {
  Presentation p = base;
  if (base.kind != RelationKind::Partial) p.base_kind = base.kind_name();
  p.kind = RelationKind::Partial;
  p.dropped = w;
  std::erase_if(p.relations, [w](const Relation& r) { return r.vertex == w; });
  return p;
}

std::string serialize(const Presentation& p) {
  std::ostringstream os;
  for (const auto& r : p.relations) {
    os << "@vertex " << (r.vertex >= 0 ? std::to_string(p.alphabet()->vertex_label(r.vertex)) : "*") << '\n';
    os << format_poly(r.poly) << '\n';
  }
  return os.str();
}

std::vector<Relation> parse_relations(std::string_view text, const DoubledQuiver& dq) {
  std::vector<Relation> out;
  std::istringstream is{std::string(text)};
  std::string line;
  int vertex = -1;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("@vertex", 0) == 0) {
      std::string lab = line.substr(7);
      lab.erase(0, lab.find_first_not_of(" \t"));
      lab.erase(lab.find_last_not_of(" \t\r") + 1);
      if (lab == "*") {
        vertex = -1;
      } else {
        auto v = dq.alphabet()->vertex_index(std::stoi(lab));
        if (!v) throw QuiverError("unknown vertex in relation file: " + lab);
        vertex = *v;
      }
      continue;
    }
    PolyQ poly = parse_poly(line, dq.alphabet());
    if (poly.is_zero()) continue;
    // Split into Peirce pieces; keep the vertex tag only for diagonal pieces.
    const Alphabet& A = *dq.alphabet();
    for (int i = 0; i < A.num_vertices(); ++i)
      for (int j = 0; j < A.num_vertices(); ++j) {
        PolyQ piece = poly.peirce(i, j);
        if (piece.is_zero()) continue;
        out.push_back({i == j ? (vertex >= 0 ? vertex : i) : -1, std::move(piece)});
      }
  }
  return out;
}

}  // namespace preproj

#include "preproj/morphism.hpp"

#include "preproj/resources.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace preproj {

namespace {

const RationalDomain kQ = RationalDomain::rationals();

std::string trim(std::string s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

GeneratorImages GeneratorImages::identity(const AlphabetPtr& source, const AlphabetPtr& target) {
  GeneratorImages m{source, target, {}, {}};
  for (int v = 0; v < source->num_vertices(); ++v) {
    auto t = target->vertex_index(source->vertex_label(v));
    if (!t) throw MorphismError("target has no vertex " + std::to_string(source->vertex_label(v)));
    m.vertex_map.push_back(*t);
  }
  m.images.resize(source->num_letters());
  for (int l = 0; l < source->num_letters(); ++l)
    if (auto t = target->find(source->letter(l).name)) m.images[l] = PolyQ::letter(target, kQ, *t);
  return m;
}

void GeneratorImages::set(std::string_view letter, PolyQ img) {
  auto l = resolve_letter(*source, letter);
  if (!l) throw MorphismError("unknown source letter " + std::string(letter));
  if (img.alphabet() != target) throw MorphismError("image over the wrong alphabet");
  images[*l] = std::move(img);
}

const PolyQ& GeneratorImages::image(int letter) const {
  if (!images.at(letter)) throw MorphismError("no image for letter " + source->letter(letter).name);
  return *images[letter];
}

// ------------------------------------------------------------ application

PolyQ apply(const GeneratorImages& m, const PolyQ& p, int max_len) {
  if (p.alphabet() != m.source) throw MorphismError("apply: polynomial over a different alphabet");
  std::vector<Term<RationalDomain>> acc;
  for (const auto& t : p.terms()) {
    PolyQ prod = t.m.empty() ? PolyQ::vertex(m.target, kQ, m.vertex_map[t.m.v]) : m.image(t.m.w[0]);
    if (max_len >= 0) prod = prod.truncated(max_len);
    for (std::size_t k = 1; k < t.m.w.size() && !prod.is_zero(); ++k) prod = prod.mul(m.image(t.m.w[k]), max_len);
    for (const auto& s : prod.terms()) acc.push_back({s.m, s.c * t.c});
  }
  return PolyQ::from_terms(m.target, kQ, std::move(acc));
}

PolyQ apply_reduced(const GeneratorImages& m, const PolyQ& p, const GroebnerBasis<RationalDomain>& target,
                    int max_len) {
  if (p.alphabet() != m.source) throw MorphismError("apply: polynomial over a different alphabet");
  if (target.alphabet() != m.target) throw MorphismError("apply: Groebner basis over a different alphabet");
  std::vector<std::optional<PolyQ>> letter_nf(m.source->num_letters());
  auto image_nf = [&](int l) -> const PolyQ& {
    if (!letter_nf[l]) {
      PolyQ img = m.image(l);
      if (max_len >= 0) img = img.truncated(max_len);
      letter_nf[l] = target.normal_form(img);
    }
    return *letter_nf[l];
  };
  // Prefix products are shared between terms.
  std::unordered_map<Path, PolyQ, PathHash> prefix;
  std::vector<Term<RationalDomain>> acc;
  for (const auto& t : p.terms()) {
    PolyQ prod = PolyQ::zero(m.target, kQ);
    if (t.m.empty()) {
      prod = target.normal_form(PolyQ::vertex(m.target, kQ, m.vertex_map[t.m.v]));
    } else {
      std::size_t n = t.m.w.size(), k = n;
      Path pre = t.m;
      // Longest cached prefix.
      while (k > 1) {
        auto it = prefix.find(pre);
        if (it != prefix.end()) {
          prod = it->second;
          break;
        }
        pre.w.pop_back();
        --k;
      }
      if (k == 1) prod = image_nf(t.m.w[0]);
      pre = t.m;
      pre.w.resize(k);
      for (; k < n && !prod.is_zero(); ++k) {
        prod = target.normal_form(prod.mul(image_nf(t.m.w[k]), max_len));
        pre.w.push_back(t.m.w[k]);
        prefix.emplace(pre, prod);
      }
      if (k < n) prod = PolyQ::zero(m.target, kQ);
    }
    for (const auto& s : prod.terms()) acc.push_back({s.m, s.c * t.c});
  }
  return PolyQ::from_terms(m.target, kQ, std::move(acc));
}

// ------------------------------------------------------------ predicates

bool is_vertex_preserving(const GeneratorImages& m) {
  for (int v = 0; v < m.source->num_vertices(); ++v)
    if (m.target->vertex_label(m.vertex_map[v]) != m.source->vertex_label(v)) return false;
  return true;
}

bool is_decomposition_preserving(const GeneratorImages& m) {
  const Alphabet& S = *m.source;
  for (int l = 0; l < S.num_letters(); ++l) {
    if (!m.images[l]) continue;
    int s = m.vertex_map[S.source(l)], t = m.vertex_map[S.target(l)];
    for (const auto& term : m.images[l]->terms())
      if (path_source(*m.target, term.m) != s || path_target(*m.target, term.m) != t) return false;
  }
  return true;
}

std::optional<std::vector<mpq_class>> triangular_coefficients(const GeneratorImages& m,
                                                              const GroebnerBasis<RationalDomain>& target) {
  if (!is_vertex_preserving(m)) return std::nullopt;
  std::vector<mpq_class> c(m.source->num_letters());
  for (int l = 0; l < m.source->num_letters(); ++l) {
    if (!m.images[l]) return std::nullopt;
    auto self = m.target->find(m.source->letter(l).name);
    if (!self) return std::nullopt;
    PolyQ nf = target.normal_form(*m.images[l]);
    for (const auto& t : nf.terms()) {
      if (t.m.length() == 0) return std::nullopt;
      if (t.m.length() == 1 && t.m.w[0] != *self) return std::nullopt;
    }
    Path me = letter_path(*m.target, *self);
    c[l] = nf.coefficient(me);
    if (c[l] == 0) return std::nullopt;
  }
  return c;
}

bool is_triangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target) {
  return triangular_coefficients(m, target).has_value();
}

bool is_unitriangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target) {
  auto c = triangular_coefficients(m, target);
  return c && std::all_of(c->begin(), c->end(), [](const mpq_class& x) { return x == 1; });
}

GeneratorImages rescale_to_unitriangular(const GeneratorImages& m, const GroebnerBasis<RationalDomain>& target) {
  auto c = triangular_coefficients(m, target);
  if (!c) throw MorphismError("rescale: map is not triangular");
  const Alphabet& S = *m.source;
  // c_a c_a* must agree across the arrows at each vertex.
  std::vector<std::optional<mpq_class>> at_vertex(S.num_vertices());
  for (int l = 0; l < S.num_letters(); ++l) {
    const auto& info = S.letter(l);
    if (info.dual || info.partner < 0) continue;
    mpq_class prod = (*c)[l] * (*c)[info.partner];
    for (int v : {info.source, info.target}) {
      if (at_vertex[v] && *at_vertex[v] != prod)
        throw MorphismError("rescale: c_a c_a* differs at vertex " + std::to_string(S.vertex_label(v)) +
                            "; the map cannot descend");
      at_vertex[v] = prod;
    }
  }
  GeneratorImages psi = GeneratorImages::identity(m.target, m.target);
  for (int l = 0; l < S.num_letters(); ++l) {
    int t = *m.target->find(S.letter(l).name);
    psi.images[t] = PolyQ::letter(m.target, kQ, t).scaled(1 / (*c)[l]);
  }
  GeneratorImages out = m;
  for (int l = 0; l < S.num_letters(); ++l) out.images[l] = apply(psi, *m.images[l]);
  return out;
}

DescentCertificate verify_descends(const GeneratorImages& m, const Presentation& source,
                                   const GroebnerBasis<RationalDomain>& target, int truncation, Execution ex) {
  if (source.alphabet() != m.source) throw MorphismError("verify: presentation over a different alphabet");
  if (!target.complete) throw MorphismError("verify: target Groebner basis is incomplete");
  DescentCertificate cert;
  cert.truncation = truncation;
  if (truncation >= 0) {
    int top = target.enumerate_basis().top_degree();
    if (truncation < top)
      throw MorphismError("truncation " + std::to_string(truncation) + " is below the top degree " +
                          std::to_string(top) + " of the target");
  }
  std::vector<std::optional<PolyQ>> rem(source.relations.size());
  for_each_index(source.relations.size(), ex, [&](std::size_t i) {
    rem[i] = apply_reduced(m, source.relations[i].poly, target, truncation);
  });
  for (std::size_t i = 0; i < rem.size(); ++i) {
    ++cert.relations_checked;
    if (!rem[i]->is_zero()) cert.failures.push_back({source.relations[i].vertex, format_poly(*rem[i])});
  }
  cert.descends = cert.failures.empty();
  return cert;
}

// ------------------------------------------------------------ map files

GeneratorImages parse_map(std::string_view text, const AlphabetPtr& source, const AlphabetPtr& target) {
  GeneratorImages m = GeneratorImages::identity(source, target);
  Bindings bind;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> MorphismError {
    return MorphismError("map line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string kw = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    try {
      if (kw == "let") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw fail("expected 'let NAME = expr'");
        std::string name = trim(rest.substr(0, eq));
        if (name.empty() || !std::all_of(name.begin(), name.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }))
          throw fail("bad binding name '" + name + "'");
        PolyQ val = parse_poly(rest.substr(eq + 1), target, bind);
        bind.insert_or_assign(name, std::move(val));
      } else if (kw == "arrow" || kw == "vertex") {
        auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw fail("expected '->'");
        std::string lhs = trim(rest.substr(0, arrow)), rhs = trim(rest.substr(arrow + 2));
        if (kw == "vertex") {
          auto s = source->vertex_index(std::stoi(lhs));
          auto t = target->vertex_index(std::stoi(rhs));
          if (!s || !t) throw fail("unknown vertex");
          m.vertex_map[*s] = *t;
        } else {
          auto l = resolve_letter(*source, lhs);
          if (!l) throw fail("unknown arrow '" + lhs + "'");
          m.images[*l] = parse_poly(rhs, target, bind);
        }
      } else if (kw == "order") {
        // Read by map_letter_order; the caller builds the alphabets from it.
      } else {
        throw fail("unknown directive '" + kw + "'");
      }
    } catch (const ParseError& e) {
      throw fail(e.what());
    } catch (const std::invalid_argument&) {
      throw fail("expected a vertex label");
    }
  }
  std::set<int> seen(m.vertex_map.begin(), m.vertex_map.end());
  if (seen.size() != m.vertex_map.size()) throw MorphismError("vertex images are not a bijection");
  if (!is_decomposition_preserving(m))
    throw MorphismError("some arrow image does not run between the images of its endpoints");
  return m;
}

std::vector<std::string> map_letter_order(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw, tok;
    if (!(ls >> kw) || kw != "order") continue;
    std::vector<std::string> out;
    while (ls >> tok) out.push_back(tok);
    return out;
  }
  return {};
}

std::vector<unsigned> denominator_primes(const GeneratorImages& m) {
  std::set<unsigned> ps;
  for (const auto& img : m.images) {
    if (!img) continue;
    for (const auto& t : img->terms())
      for (unsigned p : prime_factors(t.c.get_den())) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

// ------------------------------------------------------------ shipped tables

GeneratorImages type_d_iso(const DoubledQuiver& dq) {
  const Quiver& q = dq.base();
  const std::string& type = q.dynkin_type;
  if (type.empty() || type[0] != 'D') throw MorphismError("type D map needs a type D quiver");
  int n = q.num_vertices();
  const AlphabetPtr& A = dq.alphabet();
  auto star = star_decompose(q);
  auto a = q.arrow_index("a"), b = q.arrow_index("b"), c = q.arrow_index("c");
  if (!a || !b || !c) throw MorphismError("type D map expects arrows a, b, c");
  const Arm& arm = star.arms.at(star.arm_of_arrow(*c));
  for (std::size_t k = 0; k < arm.arrows.size(); ++k)
    if (!arm.inward[k]) throw MorphismError("type D map expects the long arm to point at the centre");

  auto letter = [&](int arrow, bool dual) { return PolyQ::letter(A, kQ, dq.letter_of(arrow, dual)); };
  auto cyc = [&](int arrow) { return letter(arrow, true) * letter(arrow, false); };  // x* x
  // p(x) = sum_{i=0}^{n-3} (-x/2)^i at the vertex carrying x.
  auto p_of = [&](const PolyQ& x, int v) {
    PolyQ term = PolyQ::vertex(A, kQ, v), acc = term;
    PolyQ step = x.scaled(mpq_class(-1, 2));
    for (int i = 1; i <= n - 3; ++i) {
      term = term * step;
      acc += term;
    }
    return acc;
  };
  int centre = star.central;
  PolyQ gamma = cyc(*c);
  GeneratorImages m = GeneratorImages::identity(A, A);
  m.images[dq.letter_of(*a, false)] = letter(*a, false) * p_of(gamma, centre);
  m.images[dq.letter_of(*a, true)] =
      (PolyQ::vertex(A, kQ, centre) + gamma.scaled(mpq_class(1, 2))) * letter(*a, true);
  for (int ci : arm.arrows) {
    int v = q.arrow(ci).target;
    m.images[dq.letter_of(ci, false)] = letter(ci, false) * p_of(-cyc(ci), v);
  }
  return m;
}

std::vector<std::string> paper_iso_names() {
  std::vector<std::string> out;
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (const char* s : {"D4-small", "E6", "E7", "E8", "E6-alt", "E7-alt", "E8-alt"}) out.push_back(s);
  return out;
}

PaperIsoTable paper_iso(const std::string& name) {
  std::string quiver = name.substr(0, name.find('-'));
  if (quiver.size() < 2 || (quiver[0] != 'D' && quiver[0] != 'E'))
    throw MorphismError("unknown isomorphism table '" + name + "'");
  Quiver q;
  try {
    q = builtin_dynkin(quiver);
  } catch (const QuiverError&) {
    throw MorphismError("unknown isomorphism table '" + name + "'");
  }
  if (name == quiver && quiver[0] == 'D') {
    DoubledQuiver dq(q);
    auto bp = bad_primes(q);
    return {name, dq, type_d_iso(dq), {bp.begin(), bp.end()}};
  }
  const auto& files = embedded_maps();
  auto it = files.find(name + ".map");
  if (it == files.end()) throw MorphismError("unknown isomorphism table '" + name + "'");
  auto order = map_letter_order(it->second);
  DoubledQuiver dq = order.empty() ? DoubledQuiver(q) : DoubledQuiver(q, order);
  auto bp = bad_primes(q);
  return {name, dq, parse_map(it->second, dq.alphabet(), dq.alphabet()), {bp.begin(), bp.end()}};
}

}  // namespace preproj

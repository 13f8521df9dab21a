#include "preproj/parse.hpp"

#include <cctype>
#include <sstream>

namespace preproj {

std::string format_path(const Alphabet& A, const Path& p) {
  if (p.empty()) return "e_" + std::to_string(A.vertex_label(p.v));
  std::string s;
  for (std::size_t i = 0; i < p.w.size(); ++i) {
    if (i) s += '*';
    s += A.letter(p.w[i]).name;
  }
  return s;
}

std::optional<int> resolve_letter(const Alphabet& A, std::string_view name) {
  if (auto l = A.find(name)) return l;
  if (name.size() >= 2 && name[0] == 'd' && name.back() != '*') {
    auto base = A.find(name.substr(1));
    if (base && A.letter(*base).partner >= 0 && !A.letter(*base).dual) return A.letter(*base).partner;
  }
  return std::nullopt;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& A, const Bindings& b)
      : s_(text), A_(A), bind_(b), Q_(RationalDomain::rationals()) {}

  PolyQ run() {
    PolyQ r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor(char c) const { return ident_char(c) || c == '('; }

  PolyQ expr() {
    PolyQ acc = PolyQ::zero(A_, Q_);
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    PolyQ t = term();
    acc = neg ? acc - t : acc + t;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PolyQ u = term();
      acc = c == '-' ? acc - u : acc + u;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = factor();
    while (peek() == '*') {
      ++pos_;
      std::size_t at = pos_;
      PolyQ f = factor();
      PolyQ prod = acc * f;
      if (prod.is_zero() && !acc.is_zero() && !f.is_zero() && !any_composable(acc, f))
        throw ParseError("non-composable product", at);
      acc = std::move(prod);
    }
    return acc;
  }

  bool any_composable(const PolyQ& x, const PolyQ& y) const {
    for (const auto& s : x.terms())
      for (const auto& t : y.terms())
        if (composable(*A_, s.m, t.m)) return true;
    return false;
  }

  PolyQ factor() {
    PolyQ base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(k);
    }
    return base;
  }

  PolyQ primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      PolyQ r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (ident_start(c)) return name();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyQ number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num(s_.substr(start, pos_ - start));
    mpq_class q(mpz_class(num), 1);
    std::size_t save = pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected a denominator");
      mpz_class den(std::string(s_.substr(ds, pos_ - ds)));
      if (den == 0) fail("zero denominator");
      q = mpq_class(mpz_class(num), den);
      q.canonicalize();
    } else {
      pos_ = save;
    }
    return PolyQ::one(A_, Q_).scaled(q);
  }

  PolyQ name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    if (id.size() > 2 && id[0] == 'e' && id[1] == '_') {
      std::string lab = id.substr(2);
      bool neg = !lab.empty() && lab[0] == '_';
      if (neg) lab.erase(0, 1);
      if (lab.empty() || !std::all_of(lab.begin(), lab.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad vertex name " + id, start);
      int label = std::stoi(lab) * (neg ? -1 : 1);
      auto v = A_->vertex_index(label);
      if (!v) throw ParseError("unknown vertex " + id, start);
      return PolyQ::vertex(A_, Q_, *v);
    }
    if (auto it = bind_.find(id); it != bind_.end()) return it->second;
    // A '*' marks a dual when nothing that could start a factor follows it.
    bool dual = false;
    std::size_t save = pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      std::size_t after = pos_ + 1;
      while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
      if (after >= s_.size() || !starts_factor(s_[after])) {
        dual = true;
        pos_ = pos_ + 1;
      }
    }
    if (!dual) pos_ = save;
    std::optional<int> letter;
    if (dual) {
      if (auto base = A_->find(id); base && A_->letter(*base).dual)
        throw ParseError("double dual " + id + "*", start);
      letter = A_->find(id + "*");
    } else {
      letter = resolve_letter(*A_, id);
    }
    if (!letter) throw ParseError("unknown arrow " + id + (dual ? "*" : ""), start);
    return PolyQ::letter(A_, Q_, *letter);
  }

  std::string_view s_;
  const AlphabetPtr& A_;
  const Bindings& bind_;
  RationalDomain Q_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyQ parse_poly(std::string_view text, const AlphabetPtr& A, const Bindings& bindings) {
  return Parser(text, A, bindings).run();
}

template <class D>
std::string format_poly(const Poly<D>& p) {
  if (p.is_zero()) return "0";
  const Alphabet& A = *p.alphabet();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = p.domain().to_rational(t.c);
    bool neg = sgn(c) < 0 && std::is_same_v<D, RationalDomain>;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (c != 1) {
      os << c.get_str() << '*';
    }
    os << format_path(A, t.m);
  }
  return os.str();
}

template std::string format_poly(const PolyQ&);
template std::string format_poly(const PolyP&);

}  // namespace preproj

#include <doctest.h>

#include "preproj/hh0.hpp"
#include "support.hpp"

#include <memory>

using namespace preproj;
using namespace testing_support;

namespace {

const ScalarDomain QQ = ScalarDomain::rationals();
ScalarDomain F(std::uint32_t p) { return ScalarDomain::prime_field(p); }

// Keeps the basis alive next to the trace space that points into it.
template <class D>
struct Trace {
  GroebnerBasis<D> gb;
  NormalWordBasis basis;
  std::unique_ptr<TraceSpace<D>> ts;
  Trace(const Presentation& pres, const D& dom, CommutatorSpan span = CommutatorSpan::Generators,
        Execution ex = Execution::Parallel)
      : gb(groebner_of(pres, dom)), basis(gb.enumerate_basis()),
        ts(std::make_unique<TraceSpace<D>>(gb, basis, span, ex)) {}
};

std::size_t rank_at(const HH0Report& r, int degree) {
  for (const auto& d : r.degrees)
    if (d.degree == degree) return d.rank;
  return 0;
}

std::vector<mpz_class> torsion_at(const HH0Report& r, int degree) {
  for (const auto& d : r.degrees)
    if (d.degree == degree) return d.torsion;
  return {};
}

// Torsion degrees of an SNF report.
std::vector<int> torsion_degrees(const HH0Report& r) {
  std::vector<int> out;
  for (const auto& d : r.degrees)
    for (std::size_t k = 0; k < d.torsion.size(); ++k) out.push_back(d.degree);
  return out;
}

}  // namespace

TEST_CASE("Lambda has only the vertex classes") {
  for (auto name : {"D4", "D5", "D6", "E6"}) {
    auto pres = multiplicative(name);
    int n = pres.alphabet()->num_vertices();
    for (auto field : {QQ, F(2), F(3), F(5)}) {
      auto r = hh0_field(pres, field);
      CHECK(r.total.rank == static_cast<std::size_t>(n));
      CHECK(r.filtered);
      CHECK(rank_at(r, 0) == static_cast<std::size_t>(n));
      CHECK(frobenius_obstruction(r, pres));
    }
  }
}

TEST_CASE("Pi of D4 over F2 has one extra class in degree 4") {
  auto pres = additive("D4");
  auto r = hh0_field(pres, F(2));
  CHECK(r.total.rank == 5);
  CHECK(rank_at(r, 0) == 4);
  CHECK(rank_at(r, 4) == 1);
  CHECK_FALSE(r.filtered);
  CHECK_FALSE(frobenius_obstruction(r, pres));
  auto rq = hh0_field(pres, QQ);
  CHECK(rq.total.rank == 4);
  CHECK(rank_at(rq, 4) == 0);
}

TEST_CASE("type A over Q") {
  for (int n = 1; n <= 6; ++n) {
    auto pres = additive("A" + std::to_string(n));
    auto r = hh0_field(pres, QQ);
    CHECK(r.total.rank == static_cast<std::size_t>(n));
    CHECK(r.positive_part_vanishes());
  }
  auto a1 = multiplicative("A1");
  CHECK_FALSE(frobenius_obstruction(hh0_field(a1, F(2)), a1));
}

TEST_CASE("integer torsion of Pi(D_n) by Smith normal form") {
  for (int n = 4; n <= 6; ++n) {
    auto pres = additive("D" + std::to_string(n));
    auto r = hh0_integers(pres, {});
    CHECK(r.method == HH0Method::IntegralSNF);
    CHECK(r.total.rank == static_cast<std::size_t>(n));
    std::vector<int> expect;
    for (int k = 1; k <= n / 2 - 1; ++k) expect.push_back(4 * k);
    CHECK(torsion_degrees(r) == expect);
    for (int d : expect) CHECK(torsion_at(r, d) == std::vector<mpz_class>{2});
  }
}

TEST_CASE("Lambda over Z") {
  auto r = hh0_integers(multiplicative("E6"), {});
  CHECK(r.method == HH0Method::IntegralSNF);
  CHECK(r.total.rank == 6);
  CHECK(r.torsion_summands() == 0);
  // Non-unit leading coefficients force the prime comparison.
  auto e7 = hh0_integers(multiplicative("E7"), {2, 3});
  CHECK(e7.method == HH0Method::MultiPrime);
  CHECK(e7.total.rank == 7);
  CHECK(e7.torsion_summands() == 0);
  CHECK_THROWS_AS(hh0_integers(multiplicative("E7"), {}), GroebnerError);
}

TEST_CASE("multi-prime path agrees with Smith normal form") {
  for (auto name : {"D4", "D5", "D6", "E6"}) {
    auto pres = additive(name);
    auto snf = hh0_integers(pres, {});
    auto mp = hh0_integers(pres, {2, 3, 5}, false);
    CHECK(mp.method == HH0Method::MultiPrime);
    CHECK(mp.total.rank == snf.total.rank);
    for (unsigned p : {2u, 3u, 5u}) {
      // Summands Z/p^k in degree d show up as extra F_p dimensions there.
      for (const auto& d : snf.degrees) {
        std::size_t divisible = 0;
        for (const auto& t : d.torsion)
          if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++divisible;
        std::size_t got = 0;
        for (const auto& e : mp.degrees)
          if (e.degree == d.degree && e.p_torsion.count(p)) got = e.p_torsion.at(p);
        CHECK(got == divisible);
      }
      // dim over F_p = rank over Q + p-torsion count, degree by degree.
      auto fp = hh0_field(pres, F(p));
      auto q = hh0_field(pres, QQ);
      for (const auto& d : fp.degrees) {
        std::size_t tors = 0;
        for (const auto& e : mp.degrees)
          if (e.degree == d.degree && e.p_torsion.count(p)) tors = e.p_torsion.at(p);
        CHECK(d.rank == rank_at(q, d.degree) + tors);
      }
    }
  }
}

TEST_CASE("E7 torsion") {
  auto r = hh0_integers(additive("E7"), {});
  CHECK(r.method == HH0Method::IntegralSNF);
  CHECK(r.total.rank == 7);
  CHECK(torsion_at(r, 4) == std::vector<mpz_class>{2});
  CHECK(torsion_at(r, 6) == std::vector<mpz_class>{3});
  CHECK(torsion_at(r, 8) == std::vector<mpz_class>{2});
  CHECK(torsion_at(r, 16) == std::vector<mpz_class>{2});
  CHECK(r.torsion_summands() == 4);
}

TEST_CASE("obstruction classes") {
  auto d4p = additive("D4"), d4m = multiplicative("D4");
  CHECK_FALSE(class_in_hh0_is_zero(P(d4p.alphabet(), "a* * a * b* * b"), d4p, F(2)));
  CHECK(class_in_hh0_is_zero(P(d4m.alphabet(), "a* * a * b* * b"), d4m, F(2)));
  auto e6p = additive("E6"), e6m = multiplicative("E6");
  const char* bab = "b* * b * a* * a * b* * b";
  CHECK_FALSE(class_in_hh0_is_zero(P(e6p.alphabet(), bab), e6p, F(3)));
  CHECK(class_in_hh0_is_zero(P(e6m.alphabet(), bab), e6m, F(3)));
  // In E6 the same class dies at 2: only 3-torsion lives in degree 6.
  CHECK(class_in_hh0_is_zero(P(e6p.alphabet(), bab), e6p, F(2)));
  auto e8p = additive("E8");
  CHECK_FALSE(class_in_hh0_is_zero(P(e8p.alphabet(), "(b* * b * a* * a)^2 * b* * b"), e8p, F(5)));
}

TEST_CASE("identities among central cycles over Z") {
  auto d4 = additive("D4");
  CHECK(class_in_hh0_is_zero(P(d4.alphabet(), "(c* * c)^2 - 2 * a* * a * b* * b"), d4, ScalarDomain::integers()));
  CHECK_FALSE(class_in_hh0_is_zero(P(d4.alphabet(), "a* * a * b* * b"), d4, ScalarDomain::integers()));
  CHECK(class_in_hh0_is_zero(P(d4.alphabet(), "2 * a* * a * b* * b"), d4, ScalarDomain::integers()));
  auto e6 = additive("E6");
  CHECK(class_in_hh0_is_zero(P(e6.alphabet(), "(c* * c)^3 + 3 * b* * b * a* * a * b* * b"), e6,
                             ScalarDomain::integers()));
  auto e8 = additive("E8");
  CHECK(class_in_hh0_is_zero(P(e8.alphabet(), "(c* * c)^5 + 5 * (b* * b * a* * a)^2 * b* * b"), e8,
                             ScalarDomain::integers()));
}

TEST_CASE("arms kill their positive cycles") {
  // A_n with the relation at the attaching vertex n dropped.
  for (int n = 2; n <= 9; ++n) {
    auto pres = partial_relations(additive("A" + std::to_string(n)), n - 1);
    for (auto field : {QQ, F(2), F(3), F(5)}) {
      auto r = hh0_field(pres, field);
      CHECK(r.positive_part_vanishes());
      CHECK(r.total.rank == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("every positive cycle of Lambda(D5) is a commutator") {
  auto pres = multiplicative("D5");
  for (auto p : {2u, 3u}) {
    Trace<PrimeField> t(pres, PrimeField(p));
    std::vector<PolyP> cycles;
    for (const auto& w : t.basis.all)
      if (w.length() > 0 && is_cycle(*pres.alphabet(), w)) cycles.push_back(PolyP::monomial(pres.alphabet(), PrimeField(p), w, 1));
    CHECK(cycles.size() > 0);
    for (bool z : t.ts->zero_classes(cycles)) CHECK(z);
  }
}

TEST_CASE("words in alpha and beta vanish in Lambda(E8)") {
  auto pres = multiplicative("E8");
  const auto& A = pres.alphabet();
  Trace<RationalDomain> t(pres, RationalDomain::rationals());
  PolyQ al = P(A, "a* * a"), be = P(A, "b* * b");
  std::vector<PolyQ> words;
  for (int d = 2; d <= 8; ++d)
    for (int mask = 0; mask < (1 << d); ++mask) {
      PolyQ w = PolyQ::vertex(A, RationalDomain::rationals(), 2);
      for (int k = 0; k < d; ++k) w = w * ((mask >> k) & 1 ? al : be);
      words.push_back(w);
    }
  auto zero = t.ts->zero_classes(words);
  std::size_t ok = std::count(zero.begin(), zero.end(), true);
  CHECK(ok == words.size());
}

TEST_CASE("serial and parallel trace spaces are identical") {
  for (auto pres : {additive("D6"), multiplicative("E6")}) {
    Trace<PrimeField> s(pres, PrimeField(2), CommutatorSpan::Generators, Execution::Serial);
    Trace<PrimeField> p(pres, PrimeField(2), CommutatorSpan::Generators, Execution::Parallel);
    REQUIRE(s.ts->blocks().size() == p.ts->blocks().size());
    for (std::size_t b = 0; b < s.ts->blocks().size(); ++b) {
      CHECK(s.ts->blocks()[b].cols == p.ts->blocks()[b].cols);
      CHECK(s.ts->blocks()[b].rows == p.ts->blocks()[b].rows);
    }
  }
}

TEST_CASE("generator commutators span the same space as all pairs") {
  auto same = [](const HH0Report& x, const HH0Report& y) {
    if (x.total.rank != y.total.rank || x.total.torsion != y.total.torsion) return false;
    if (x.degrees.size() != y.degrees.size()) return false;
    for (std::size_t i = 0; i < x.degrees.size(); ++i)
      if (x.degrees[i].degree != y.degrees[i].degree || x.degrees[i].rank != y.degrees[i].rank ||
          x.degrees[i].torsion != y.degrees[i].torsion)
        return false;
    return true;
  };
  for (auto pres : {additive("D4"), additive("D5"), multiplicative("D4"), multiplicative("D5")}) {
    for (auto field : {QQ, F(2), F(3)})
      CHECK(same(hh0_field(pres, field, CommutatorSpan::Generators), hh0_field(pres, field, CommutatorSpan::AllPairs)));
  }
  auto d6 = additive("D6");
  Trace<RationalDomain> g(d6, RationalDomain::integers(), CommutatorSpan::Generators);
  Trace<RationalDomain> a(d6, RationalDomain::integers(), CommutatorSpan::AllPairs);
  CHECK(same(g.ts->report(), a.ts->report()));
}

TEST_CASE("report table") {
  auto r = hh0_integers(additive("D4"), {});
  std::string text = format_report(r);
  CHECK(text.find("degree | dim/rank | torsion") == 0);
  CHECK(text.find("4 | 0 | Z/2") != std::string::npos);
  CHECK(text.find("total | 4 | Z/2") != std::string::npos);
  auto mp = hh0_integers(additive("D4"), {2}, false);
  CHECK(format_report(mp).find("1x Z/2^{>=1}") != std::string::npos);
  CHECK(mp.method_name() == "multi-prime");
  CHECK_THROWS_AS(hh0_field(additive("D4"), ScalarDomain::integers()), DomainError);
}
